"""Seeded element sampling.

Deterministic for a fixed profile: the same seed always produces the same
stream.  Sampled values always satisfy the model invariants; most samples
are nonstandard (the property suites need them), with a small standard
admixture controlled by the profile size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation
from .model import Element, is_standard


@dataclass(frozen=True)
class SampleProfile:
    max_terms: int = 3
    exp_den_bound: int = 3
    coeff_bound: int = 9
    dim: int = 1
    seed: int = 0
    exp_num_bound: int = 6

    def __post_init__(self):
        if min(self.max_terms, self.exp_den_bound, self.coeff_bound, self.exp_num_bound) < 1:
            raise InvariantViolation("profile bounds must be >= 1")
        if self.dim not in (1, 2):
            raise InvariantViolation(f"dim must be 1 or 2, got {self.dim}")


class Sampler:
    """A deterministic stream of sampled elements."""

    def __init__(self, profile: SampleProfile):
        self.profile = profile
        self.rng = random.Random(profile.seed)

    def _rational(self, allow_zero: bool, allow_negative: bool) -> Fraction:
        p = self.profile
        num = self.rng.randint(0 if allow_zero else 1, p.exp_num_bound)
        den = self.rng.randint(1, p.exp_den_bound)
        f = Fraction(num, den)
        if allow_negative and num and self.rng.random() < 0.3:
            return -f
        return f

    def _exponent(self) -> tuple:
        """A nonzero exponent >= 0 in the lexicographic order."""
        p = self.profile
        if p.dim == 1:
            return (self._rational(allow_zero=False, allow_negative=False),)
        first = self._rational(allow_zero=True, allow_negative=False)
        second = self._rational(allow_zero=True, allow_negative=first > 0)
        if first == 0 and second == 0:
            second = Fraction(self.rng.randint(1, p.exp_num_bound), self.rng.randint(1, p.exp_den_bound))
        return (first, second)

    def _coeff(self) -> Fraction:
        p = self.profile
        num = self.rng.randint(1, p.coeff_bound)
        den = self.rng.choice((1, 1, 1, 2, 3))
        return Fraction(num, den)

    def element(self) -> Element:
        """One sample; standard with probability about 1/8."""
        p = self.profile
        if self.rng.random() < 0.125:
            return Element.integer(self.rng.randint(0, p.coeff_bound), p.dim)
        n_terms = self.rng.randint(1, p.max_terms)
        exps = {}
        guard = 0
        while len(exps) < n_terms and guard < 8 * n_terms:
            guard += 1
            e = self._exponent()
            if e not in exps:
                exps[e] = None
        terms = []
        ordered = sorted(exps, reverse=True)
        for i, e in enumerate(ordered):
            coeff = self._coeff()
            if i > 0 and self.rng.random() < 0.4:
                coeff = -coeff
            terms.append((e, coeff))
        constant = self.rng.randint(-p.coeff_bound, p.coeff_bound)
        if constant:
            terms.append(((Fraction(0),) * p.dim, Fraction(constant)))
        return Element(terms, p.dim)

    def nonstandard(self) -> Element:
        for _ in range(64):
            e = self.element()
            if not is_standard(e):
                return e
        raise AssertionError("sampler failed to produce a nonstandard element")

    def integer(self, lo: int, hi: int) -> int:
        return self.rng.randint(lo, hi)

    def choice(self, seq):
        return self.rng.choice(seq)

    def chance(self, p: float) -> bool:
        return self.rng.random() < p


def sample(profile: SampleProfile) -> Element:
    """The first element of the profile's stream (pure in the profile)."""
    return Sampler(profile).element()
