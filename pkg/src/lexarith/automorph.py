"""Constructive order-automorphisms of the model.

Descriptors are finite, evaluable at any element, and invertible:

- ``Identity``
- ``E0ClassShift``: shift one finite-distance class by a standard offset,
  identity elsewhere (each class is order-isomorphic to the integers, so
  the shift is an automorphism)
- ``E2Affine``: identity on classes at or below a threshold c, and
  ``x -> n*(x - a) + b`` on finite-distance representatives above it,
  equivalently ``n*x - (n-1)*c + m``.  The remainder m absorbs the case
  where ``n*a - b`` is not divisible by ``n - 1``: divide ``b - a`` by
  ``n - 1`` instead and carry the remainder, which keeps the construction
  inside division-by-standard-n arithmetic.
- ``E3Shift``: identity on the class of elements dominated by all powers
  of c, and ``rep -> c*rep`` on the other class representatives, offsets
  preserved.  c must be a *monomial* one Archimedean notch below the
  mapped elements: a multi-term c makes the class map non-surjective here
  (the inverse image class would need an infinite expansion).
- ``Compose`` (applies right-to-left), ``Inverse``
- ``SegmentExtend``: glue an order-isomorphism of the initial segment
  below a onto the shift ``x -> b + (x - a)`` above it.

Representative sets are never materialized: the canonical representative
of a finite-distance class drops the constant term, the canonical
representative of a dominated-difference class drops every dominated
term, and finitely many anchor overrides pin designated elements to be
their own representatives.

The sign convention for images of elements below their class
representative is ``f(y) = f(x) - (x - y)``, i.e. offsets are preserved;
the validation suite enforces strict monotonicity, inverse round-trips,
anchor correctness and finite-distance transport on every probe pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from ._backend import kernel as K
from .errors import (
    InvariantViolation,
    NotE2Equivalent,
    NotE3Equivalent,
    ValidationFailure,
)
from .model import (
    Element,
    add_int,
    const_value,
    deg,
    divmod_scalar,
    is_standard,
    sub,
    trunc_const,
)


@dataclass(frozen=True)
class Identity:
    kind = "identity"


@dataclass(frozen=True)
class E0ClassShift:
    anchor: Element
    offset: int
    kind = "e0_class_shift"

    def __post_init__(self):
        if is_standard(self.anchor):
            raise InvariantViolation("anchor of a class shift must be nonstandard")


@dataclass(frozen=True)
class E2Affine:
    a: Element
    b: Element
    n: int
    c: Element
    m: int
    kind = "e2_affine"

    def __post_init__(self):
        if self.n < 2:
            raise InvariantViolation("affine factor n must be >= 2")
        if not 0 <= self.m < self.n - 1:
            raise InvariantViolation("remainder m must satisfy 0 <= m < n-1")
        if is_standard(self.a) or is_standard(self.b):
            raise InvariantViolation("affine anchors must be nonstandard")
        object.__setattr__(self, "_key_a", trunc_const(self.a))
        object.__setattr__(self, "_key_c", trunc_const(self.c))
        object.__setattr__(self, "_c_standard", is_standard(self.c))

    def _rep(self, x: Element) -> Element:
        t = trunc_const(x)
        if t == self._key_a:
            return self.a
        if not self._c_standard and t == self._key_c:
            return self.c
        return t

    def _image_of_rep(self, r: Element) -> Element:
        # n*(r - a) + b; equivalently n*r - (n-1)*c + m with the divisibility
        # remainder m from b - a = (n-1)*(a - c) + m
        raw = K.terms_add(
            K.terms_scale(K.terms_sub(r.raw, self.a.raw), (self.n, 1)),
            self.b.raw,
        )
        return Element._wrap(raw, r.dim)

    def _apply(self, x: Element) -> Element:
        r = self._rep(x)
        if r <= self.c:
            return x
        return add_int(self._image_of_rep(r), const_value(x) - const_value(r))

    def _apply_inverse(self, y: Element) -> Element:
        if trunc_const(y) <= self._key_c:
            return y
        shifted = add_int(y + self.c * (self.n - 1), -self.m)
        q, _ = divmod_scalar(shifted, self.n)
        r = self._rep(q)
        image = self._image_of_rep(r)
        if trunc_const(image) != trunc_const(y):
            raise AssertionError("affine inverse landed in the wrong class")
        return add_int(r, const_value(y) - const_value(image))


@dataclass(frozen=True)
class E3Shift:
    a1: Element
    a2: Element
    c: Element
    kind = "e3_shift"

    def __post_init__(self):
        if self.c.dim != 2:
            raise InvariantViolation("dominated-class shift needs the dim-2 lattice")
        if len(self.c.raw) != 1 or is_standard(self.c):
            raise InvariantViolation("scaling companion must be a nonstandard monomial")
        if deg(self.c).level() < 1:
            raise InvariantViolation("scaling companion must be dominated by the anchors")
        if deg(self.a1).level() >= deg(self.c).level():
            raise InvariantViolation("anchor must dominate every power of the companion")
        if self.a2 != self.a1 * self.c:
            raise InvariantViolation("normalized anchor must satisfy a2 = c * a1")
        object.__setattr__(self, "_lvl", deg(self.c).level())
        object.__setattr__(self, "_key_a1", self._key(self.a1))

    def _key(self, x: Element) -> tuple:
        lvl = self._lvl
        out = []
        for e, coeff in x.raw:
            elevel = len(e)
            for i, r in enumerate(e):
                if r[0]:
                    elevel = i
                    break
            if elevel < lvl:
                out.append((e, coeff))
        return tuple(out)

    def _rep(self, key: tuple) -> Element:
        if key == self._key_a1:
            return self.a1
        return Element._wrap(key, self.c.dim)

    def _apply(self, x: Element) -> Element:
        key = self._key(x)
        if not key:
            return x
        r = self._rep(key)
        offset = K.terms_sub(x.raw, r.raw)
        return Element._wrap(K.terms_add((self.c * r).raw, offset), x.dim)

    def _apply_inverse(self, y: Element) -> Element:
        key = self._key(y)
        if not key:
            return y
        ce, cc = self.c.raw[0]
        inv_mono = ((K.exp_scale(ce, (-1, 1)), K.rat_div((1, 1), cc)),)
        r = self._rep(K.terms_mul(key, inv_mono))
        image = self._apply(r)
        if self._key(image) != key:
            raise AssertionError("dominated-class inverse landed in the wrong class")
        offset = K.terms_sub(y.raw, image.raw)
        return Element._wrap(K.terms_add(r.raw, offset), y.dim)


@dataclass(frozen=True)
class Compose:
    parts: tuple
    kind = "compose"


@dataclass(frozen=True)
class Inverse:
    of: "Descriptor"
    kind = "inverse"


@dataclass(frozen=True)
class SegmentExtend:
    below: "Descriptor"
    a: Element
    b: Element
    kind = "segment_extend"


Descriptor = Union[Identity, E0ClassShift, E2Affine, E3Shift, Compose, Inverse, SegmentExtend]


def apply(d: Descriptor, x: Element) -> Element:
    if isinstance(d, Identity):
        return x
    if isinstance(d, E0ClassShift):
        if trunc_const(x) == trunc_const(d.anchor):
            return add_int(x, d.offset)
        return x
    if isinstance(d, E2Affine):
        return d._apply(x)
    if isinstance(d, E3Shift):
        return d._apply(x)
    if isinstance(d, Compose):
        for part in reversed(d.parts):
            x = apply(part, x)
        return x
    if isinstance(d, Inverse):
        return _apply_inverse(d.of, x)
    if isinstance(d, SegmentExtend):
        if x < d.a:
            return apply(d.below, x)
        return d.b + sub(x, d.a)
    raise TypeError(f"not a descriptor: {d!r}")


def _apply_inverse(d: Descriptor, y: Element) -> Element:
    if isinstance(d, Identity):
        return y
    if isinstance(d, E0ClassShift):
        if trunc_const(y) == trunc_const(d.anchor):
            return add_int(y, -d.offset)
        return y
    if isinstance(d, E2Affine):
        return d._apply_inverse(y)
    if isinstance(d, E3Shift):
        return d._apply_inverse(y)
    if isinstance(d, Compose):
        for part in d.parts:
            y = _apply_inverse(part, y)
        return y
    if isinstance(d, Inverse):
        return apply(d.of, y)
    if isinstance(d, SegmentExtend):
        if y < d.b:
            return _apply_inverse(d.below, y)
        return d.a + sub(y, d.b)
    raise TypeError(f"not a descriptor: {d!r}")


def invert(d: Descriptor) -> Descriptor:
    if isinstance(d, Identity):
        return d
    if isinstance(d, E0ClassShift):
        return E0ClassShift(d.anchor, -d.offset)
    if isinstance(d, Inverse):
        return d.of
    if isinstance(d, Compose):
        return Compose(tuple(invert(p) for p in reversed(d.parts)))
    return Inverse(d)


def _flatten(d: Descriptor) -> tuple:
    if isinstance(d, Compose):
        return d.parts
    if isinstance(d, Identity):
        return ()
    return (d,)


def compose(*descriptors: Descriptor) -> Descriptor:
    """Composite applying right-to-left: compose(f, g) acts as f after g."""
    parts = []
    for d in descriptors:
        parts.extend(_flatten(d))
    if not parts:
        return Identity()
    if len(parts) == 1:
        return parts[0]
    return Compose(tuple(parts))


def intrinsic_anchors(d: Descriptor) -> tuple:
    """(x, expected image) pairs guaranteed by the descriptor's own fields."""
    if isinstance(d, E0ClassShift):
        return ((d.anchor, add_int(d.anchor, d.offset)),)
    if isinstance(d, E2Affine):
        return ((d.a, d.b), (d.c, d.c))
    if isinstance(d, E3Shift):
        return ((d.a1, d.a2),)
    return ()


# --- builders ---------------------------------------------------------------


def build_from_e2(a: Element, b: Element) -> Descriptor:
    """An order-automorphism mapping a to b, given a finite ratio a ~ b."""
    from . import equiv

    equiv.require_nonstandard(a, b)
    if not equiv._positive(2, a, b):
        raise NotE2Equivalent(f"degrees differ: {deg(a)!r} vs {deg(b)!r}")
    if a == b:
        return Identity()
    if a > b:
        return invert(build_from_e2(b, a))
    if trunc_const(a) == trunc_const(b):
        return E0ClassShift(a, const_value(b) - const_value(a))
    q, r = divmod(b, a)
    if r.is_zero():
        # boundary case b = q*a: build to b-1 and repair with a class shift
        inner = build_from_e2(a, sub(b, Element.integer(1, a.dim)))
        return compose(E0ClassShift(b, 1), inner)
    n = const_value(q) + 1
    c2, m = divmod_scalar(sub(b, a), n - 1)
    c = sub(a, c2)
    return E2Affine(a=a, b=b, n=n, c=c, m=m)


def build_from_e3(a1: Element, a2: Element) -> Descriptor:
    """An order-automorphism mapping a1 to a2, given level-3 equivalence.

    Composes a dominated-class scaling taking a1 to the normalized target
    c*a1 with an affine map taking c*a1 to a2 (they have equal degrees).
    In dim 1, or whenever the pair already has a finite ratio, the affine
    route alone suffices.
    """
    from . import equiv

    equiv.require_nonstandard(a1, a2)
    if not equiv._positive(3, a1, a2):
        raise NotE3Equivalent(f"no dominated companion links {deg(a1)!r} and {deg(a2)!r}")
    if equiv._positive(2, a1, a2):
        return build_from_e2(a1, a2)
    if a1 > a2:
        return invert(build_from_e3(a2, a1))
    d1, d2 = deg(a1), deg(a2)
    s = d2.components[1] - d1.components[1]
    c = Element.monomial(1, (0, s), dim=2)
    mid = a1 * c
    shift = E3Shift(a1=a1, a2=mid, c=c)
    if mid == a2:
        return shift
    return compose(build_from_e2(mid, a2), shift)


def extend_initial_segment(below: Descriptor, a: Element, b: Element) -> Descriptor:
    """Total map: below's values under a, then x -> b + (x - a) from a up."""
    return SegmentExtend(below=below, a=a, b=b)


# --- validation and instrumentation -----------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    probes: int
    pairs: int
    checks: dict = field(default_factory=dict)


def _same_e0_class(x: Element, y: Element) -> bool:
    return trunc_const(x) == trunc_const(y)


def validate(d: Descriptor, probes, anchors: tuple = ()) -> ValidationReport:
    """Probe-based certification of a descriptor.

    Asserts strict monotonicity of images, inverse round-trips, anchor
    correctness, pointwise fixing of standard elements, and transport of
    the finite-distance relation across every adjacent probe pair.  Raises
    ValidationFailure carrying the violating probe pair.
    """
    probes = list(probes)
    for i in range(len(probes) - 1):
        if not probes[i] < probes[i + 1]:
            raise InvariantViolation("probes must be strictly sorted")
    images = [apply(d, p) for p in probes]
    counts = {"monotonicity": 0, "inverse": 0, "anchors": 0, "e0_transport": 0, "standard": 0}

    for i in range(len(probes) - 1):
        if not images[i] < images[i + 1]:
            raise ValidationFailure(
                "monotonicity",
                f"images of {probes[i]!r} and {probes[i + 1]!r} are not increasing",
                probe=probes[i],
                other=probes[i + 1],
            )
        counts["monotonicity"] += 1

    for p, img in zip(probes, images):
        back = _apply_inverse(d, img)
        if back != p:
            raise ValidationFailure(
                "inverse-roundtrip",
                f"inverse(image({p!r})) = {back!r}",
                probe=p,
            )
        counts["inverse"] += 1
        if is_standard(p) != is_standard(img):
            raise ValidationFailure(
                "standard-preservation",
                f"{p!r} and its image {img!r} disagree on standardness",
                probe=p,
            )
        counts["standard"] += 1

    for x, expected in tuple(intrinsic_anchors(d)) + tuple(anchors):
        got = apply(d, x)
        if got != expected:
            raise ValidationFailure(
                "anchor",
                f"image of {x!r} is {got!r}, expected {expected!r}",
                probe=x,
                other=expected,
            )
        counts["anchors"] += 1

    for i in range(len(probes) - 1):
        x, y = probes[i], probes[i + 1]
        if is_standard(x) or is_standard(y):
            continue
        if _same_e0_class(x, y) != _same_e0_class(images[i], images[i + 1]):
            raise ValidationFailure(
                "e0-transport",
                f"finite-distance relation not preserved on ({x!r}, {y!r})",
                probe=x,
                other=y,
            )
        counts["e0_transport"] += 1

    return ValidationReport(probes=len(probes), pairs=max(len(probes) - 1, 0), checks=counts)


def almost_add_defect(d: Descriptor, a: Element, b: Element) -> Optional[int]:
    """f(a+b) - (f(a) + f(b)) when it is a standard integer, else None.

    None marks a nonstandard additive defect: the map is then not an
    almost-additive order-isomorphism on this pair.
    """
    total = apply(d, a + b)
    parts = K.terms_add(apply(d, a).raw, apply(d, b).raw)
    diff = K.terms_sub(total.raw, parts)
    if not diff:
        return 0
    if len(diff) == 1 and K.exp_is_zero(diff[0][0]):
        num, den = diff[0][1]
        if den == 1:
            return num
    return None
