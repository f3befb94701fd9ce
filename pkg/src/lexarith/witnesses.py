"""Witness certificates for positive equivalence verdicts.

Levels 0, 2 and 4 are certified by a standard bound n; levels 1 and 3 by a
companion element c.  A witness is only ever a *claim*: the definitional
checker in :mod:`lexarith.oracle` decides whether it actually certifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .model import Element


@dataclass(frozen=True)
class BoundN:
    n: int


@dataclass(frozen=True)
class Companion:
    c: Element


Witness = Union[BoundN, Companion]
