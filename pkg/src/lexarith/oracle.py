"""Definitional, brute-force semantics for the equivalence levels.

``check_witness`` evaluates the literal defining conditions of a level
against a supplied certificate: the existential inequalities exactly, and
the universal "for all standard n" conditions by exact degree comparison
(sampling over n would be unsound; in this model ``n*c < a`` for all n iff
``deg(c) < deg(a)``, and ``c**n < a`` for all n iff deg(c) sits in a
strictly lower Archimedean class than deg(a)).

``search`` hunts for a witness inside finite bounds.  Exhaustion is a
value, not an error, and never refutes: negative closed-form verdicts are
justified by the decider's reason field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import StandardInput
from .model import Element, deg, is_standard, pow_int
from .witnesses import BoundN, Companion, Witness


@dataclass(frozen=True)
class SearchBounds:
    n_max: int = 64
    companion_pool: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.n_max < 2:
            raise ValueError("n_max must be >= 2")


def _require_nonstandard(a: Element, b: Element) -> None:
    if is_standard(a) or is_standard(b):
        raise StandardInput("witness checking is defined on nonstandard elements only")


def multiples_stay_below(c: Element, a: Element) -> bool:
    """n*c < a for every standard n (exact: degree comparison)."""
    if c.is_zero():
        return True
    return deg(c) < deg(a)


def powers_stay_below(c: Element, a: Element) -> bool:
    """c**n < a for every standard n (exact: Archimedean class comparison)."""
    if c.is_zero():
        return True
    return deg(c).level() > deg(a).level()


def check_witness(level: int, a: Element, b: Element, w: Witness) -> bool:
    _require_nonstandard(a, b)
    if level in (0, 2, 4):
        if not isinstance(w, BoundN) or not isinstance(w.n, int) or w.n < 1:
            return False
        n = w.n
        if level == 0:
            return a < b + n and b < a + n
        if level == 2:
            return a < b * n and b < a * n
        return a < pow_int(b, n) and b < pow_int(a, n)
    if level in (1, 3):
        if not isinstance(w, Companion) or not isinstance(w.c, Element) or w.c.dim != a.dim:
            return False
        c = w.c
        if level == 1:
            return (
                multiples_stay_below(c, a)
                and multiples_stay_below(c, b)
                and a < b + c
                and b < a + c
            )
        return (
            powers_stay_below(c, a)
            and powers_stay_below(c, b)
            and a < b * c
            and b < a * c
        )
    return False


def default_pool(level: int, a: Element, b: Element, n_max: int = 8) -> tuple:
    """Deterministic companion candidates from the degree lattice of a, b."""
    dim = a.dim
    zero = (0,) * dim
    exps = {zero}
    for x in (a, b):
        for exponent, _ in x.terms():
            exps.add(tuple(exponent.components))
    diffs = set()
    for e in exps:
        for f in exps:
            diffs.add(tuple(ei - fi for ei, fi in zip(e, f)))
    candidates = []
    for k in range(1, min(n_max, 9) + 1):
        candidates.append(Element.integer(k, dim))
    seen_exps = exps | diffs
    if dim == 2:
        bound = 2
        for e in exps:
            bound = max(bound, int(abs(e[1])) + 2)
        for j in range(1, min(bound, 12) + 1):
            seen_exps.add((0, j))
    for e in seen_exps:
        lex_nonneg = e > zero if dim == 1 else e[0] > 0 or (e[0] == 0 and e[1] > 0)
        if not lex_nonneg:
            continue
        mono = Element.monomial(1, e, dim=dim)
        candidates.append(mono)
        candidates.append(mono + Element.integer(1, dim))
        candidates.append(mono * 2)
    unique = sorted(set(candidates))
    return tuple(unique[:96])


def bounds_for(
    level: int,
    a: Element,
    b: Element,
    hint: Optional[Witness] = None,
    n_max: int = 16,
) -> SearchBounds:
    """Bounds seeded with a decider hint (hinted size + 1 stays inside)."""
    if isinstance(hint, BoundN):
        n_max = max(n_max, hint.n + 1)
    pool = list(default_pool(level, a, b, n_max=min(n_max, 9)))
    if isinstance(hint, Companion):
        pool.extend([hint.c, hint.c + Element.integer(1, a.dim)])
    return SearchBounds(n_max=max(n_max, 2), companion_pool=tuple(sorted(set(pool))))


def search(level: int, a: Element, b: Element, bounds: SearchBounds) -> Optional[Witness]:
    """First witness within bounds, or None when the bounds are exhausted.

    None never refutes equivalence; it only reports exhaustion.
    """
    _require_nonstandard(a, b)
    if level in (0, 2, 4):
        for n in range(1, bounds.n_max + 1):
            w = BoundN(n)
            if check_witness(level, a, b, w):
                return w
        return None
    if level in (1, 3):
        pool = bounds.companion_pool or default_pool(level, a, b, n_max=bounds.n_max)
        for c in pool:
            w = Companion(c)
            if check_witness(level, a, b, w):
                return w
        return None
    raise ValueError(f"no searcher for level {level}")
