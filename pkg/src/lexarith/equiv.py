"""Closed-form decision procedures for the equivalence levels 0..4.

Every verdict for a nonstandard pair is computed from the degree lattice:

- level 0: finite distance -- the nonconstant parts coincide
- level 1: the difference is dominated in degree by the elements
- level 2: finite ratio -- equal degrees
- level 3: ratio bounded by an element all of whose powers stay small;
  in dim 2 this holds exactly when the leading first components agree
  (and are positive), or the degrees agree outright when both first
  components vanish; in dim 1 it collapses to level 2
- level 4: degrees in the same Archimedean class of the exponent lattice

Positive verdicts carry a synthesized witness that is always re-checked
against the literal definition by :func:`lexarith.oracle.check_witness`;
a failed synthesis escalates by +1 up to ``search_n_max`` before erroring.
Negative verdicts carry a structured reason.  The level-5 prover is sound
but deliberately incomplete: it only knows the level-2 and level-3 routes.

Two neighboring notions are documented here but intentionally undecided:

- *order-rigidity at a level*: a model where any order-isomorphism between
  two proper initial segments forces the endpoints to be equivalent at
  that level.  This package makes no rigidity claim about its model in
  either direction; the additive-defect instrumentation in
  :func:`lexarith.automorph.almost_add_defect` exists to measure concrete
  maps, not to certify rigidity.
- the *coarsest convex relation refined by orbit equivalence* (two points
  are related when some order-automorphism carries the smaller at least up
  to the larger).  It is characterized by such reachability but is not
  decided by this package; only the sound one-directional prover below
  touches orbit equivalence at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import oracle
from .errors import CannotProve, NotEquivalent, StandardInput
from .model import (
    Element,
    const_value,
    deg,
    floor_quotient,
    is_standard,
    sub,
    trunc_const,
)
from .witnesses import BoundN, Companion, Witness

LEVELS = (0, 1, 2, 3, 4)
BOUND_LEVELS = (0, 2, 4)
COMPANION_LEVELS = (1, 3)

DEFAULT_SEARCH_N_MAX = 64


@dataclass(frozen=True)
class Verdict:
    level: int
    equivalent: bool
    witness: Optional[Witness]
    reason: dict


def _require_level(level: int) -> None:
    if level not in LEVELS:
        raise ValueError(f"undecidable level {level}; only 0..4 have deciders")


def require_nonstandard(a: Element, b: Element) -> None:
    if is_standard(a) or is_standard(b):
        raise StandardInput("equivalence levels are defined on nonstandard elements only")
    if a.dim != b.dim:
        raise StandardInput(f"dimension mismatch: {a.dim} vs {b.dim}")


def _deg_strs(a: Element) -> list:
    d = deg(a)
    return [str(c) for c in d.components] if d is not None else []


def _reason(rule: str, a: Element, b: Element, **extra) -> dict:
    out = {"rule": rule, "deg_a": _deg_strs(a), "deg_b": _deg_strs(b)}
    out.update(extra)
    return out


def _positive(level: int, a: Element, b: Element) -> bool:
    da, db = deg(a), deg(b)
    if level == 0:
        return trunc_const(a) == trunc_const(b)
    if level == 1:
        if a == b:
            return True
        diff = sub(a, b) if a > b else sub(b, a)
        return deg(diff) < da
    if level == 2:
        return da == db
    if level == 3:
        if a.dim == 1:
            return da == db
        a1 = da.components[0]
        b1 = db.components[0]
        if a1 > 0 and b1 > 0:
            return a1 == b1
        if a1 == 0 and b1 == 0:
            return da == db
        return False
    if level == 4:
        if a.dim == 1:
            return True
        a1 = da.components[0]
        b1 = db.components[0]
        return (a1 > 0 and b1 > 0) or (a1 == 0 and b1 == 0)
    raise AssertionError(level)


_RULES_YES = {
    0: "nonconstant-parts-equal",
    1: "difference-degree-dominated",
    2: "degrees-equal",
    3: "archimedean-components-match",
    4: "degree-classes-match",
}
_RULES_NO = {
    0: "nonconstant-parts-differ",
    1: "difference-degree-not-dominated",
    2: "degrees-differ",
    3: "archimedean-components-differ",
    4: "degree-classes-differ",
}


def _minimal_n(level: int, a: Element, b: Element) -> int:
    """Least n certifying an already-positive bound-type verdict."""
    if level == 0:
        return abs(const_value(a) - const_value(b)) + 1
    if level == 2:
        qa = const_value(floor_quotient(a, b))
        qb = const_value(floor_quotient(b, a))
        return max(qa, qb) + 1
    if level == 4:
        da, db = deg(a), deg(b)
        lvl = da.level()
        ra = da.components[lvl] / db.components[lvl]
        cap = int(max(ra, 1 / ra)) + 2
        for n in range(1, cap + 1):
            if oracle.check_witness(level, a, b, BoundN(n)):
                return n
        raise AssertionError(f"no level-4 bound found below {cap + 1}")
    raise AssertionError(level)


def _synth_companion(level: int, a: Element, b: Element) -> Element:
    if level == 1:
        diff = sub(a, b) if a >= b else sub(b, a)
        return diff + Element.integer(1, a.dim)
    # level 3: a standard ratio bound when the degrees agree, otherwise a
    # monomial one archimedean notch above the second-component gap
    da, db = deg(a), deg(b)
    if da == db:
        return Element.integer(_minimal_n(2, a, b), a.dim)
    s = abs(da.components[1] - db.components[1]) + 1
    return Element.monomial(1, (0, s), dim=2)


def _escalate(w: Witness, dim: int) -> Witness:
    if isinstance(w, BoundN):
        return BoundN(w.n + 1)
    return Companion(w.c + Element.integer(1, dim))


def _validated_witness(level: int, a: Element, b: Element, search_n_max: int) -> Witness:
    if level in BOUND_LEVELS:
        w: Witness = BoundN(_minimal_n(level, a, b))
    else:
        w = Companion(_synth_companion(level, a, b))
    for _ in range(search_n_max):
        if oracle.check_witness(level, a, b, w):
            return w
        w = _escalate(w, a.dim)
    raise AssertionError(f"witness synthesis failed for level {level} on {a!r}, {b!r}")


def decide(level: int, a: Element, b: Element, search_n_max: int = DEFAULT_SEARCH_N_MAX) -> Verdict:
    """Closed-form verdict with a definitionally validated witness."""
    _require_level(level)
    require_nonstandard(a, b)
    if not _positive(level, a, b):
        return Verdict(level, False, None, _reason(_RULES_NO[level], a, b))
    w = _validated_witness(level, a, b, search_n_max)
    return Verdict(level, True, w, _reason(_RULES_YES[level], a, b))


def minimal_bound_n(level: int, a: Element, b: Element) -> int:
    """Least witness bound for levels 0, 2, 4: n passes, n-1 does not."""
    if level not in BOUND_LEVELS:
        raise ValueError(f"level {level} has companion witnesses, not bounds")
    require_nonstandard(a, b)
    if not _positive(level, a, b):
        raise NotEquivalent(f"pair is not level-{level} equivalent")
    n = _minimal_n(level, a, b)
    if not oracle.check_witness(level, a, b, BoundN(n)):
        raise AssertionError(f"computed bound {n} fails its own check")
    if oracle.check_witness(level, a, b, BoundN(n - 1)):
        raise AssertionError(f"computed bound {n} is not minimal")
    return n


def companion_witness(level: int, a: Element, b: Element, search_n_max: int = DEFAULT_SEARCH_N_MAX) -> Element:
    """A validated companion element for levels 1 and 3."""
    if level not in COMPANION_LEVELS:
        raise ValueError(f"level {level} has bound witnesses, not companions")
    require_nonstandard(a, b)
    if not _positive(level, a, b):
        raise NotEquivalent(f"pair is not level-{level} equivalent")
    w = _validated_witness(level, a, b, search_n_max)
    assert isinstance(w, Companion)
    return w.c


def prove_E5(a: Element, b: Element):
    """Sound orbit-equivalence prover: build an order-automorphism mapping
    a to b via the level-2 or level-3 construction.

    Raises CannotProve when neither route applies; that is *not* a proof of
    inequivalence.
    """
    from . import automorph  # deferred: automorph uses the deciders above

    require_nonstandard(a, b)
    if _positive(2, a, b):
        return automorph.build_from_e2(a, b)
    if _positive(3, a, b):
        return automorph.build_from_e3(a, b)
    raise CannotProve(
        "no constructive route: pair is neither level-2 nor level-3 equivalent"
    )
