"""Order-automorphism descriptors: build, apply, invert, validate."""

import pytest

from lexarith import automorph as am
from lexarith.errors import (
    InvariantViolation,
    NotE2Equivalent,
    NotE3Equivalent,
    ValidationFailure,
)
from lexarith.model import Element
from lexarith.sampler import SampleProfile, Sampler
from lexarith.textform import parse_element


def P(text, dim=1):
    return parse_element(text, dim)


def probes_for(dim, seed, count=150, extra=()):
    s = Sampler(SampleProfile(dim=dim, seed=seed))
    pool = {s.element() for _ in range(count)}
    pool.update(extra)
    return sorted(pool)


class TestBuildFromE2:
    def test_basic_map(self):
        d = am.build_from_e2(P("t"), P("2*t + 1"))
        assert am.apply(d, P("t")) == P("2*t + 1")
        am.validate(d, probes_for(1, 3, extra=[P("t"), P("2*t + 1")]), anchors=((P("t"), P("2*t + 1")),))

    def test_identity(self):
        a = P("t^2 + 4")
        assert isinstance(am.build_from_e2(a, a), am.Identity)

    def test_not_equivalent(self):
        with pytest.raises(NotE2Equivalent):
            am.build_from_e2(P("t"), P("t^2"))

    def test_finite_distance_pair_uses_class_shift(self):
        d = am.build_from_e2(P("t"), P("t + 5"))
        assert isinstance(d, am.E0ClassShift)
        assert am.apply(d, P("t")) == P("t + 5")
        assert am.apply(d, P("t^2")) == P("t^2")

    def test_exact_multiple_boundary(self):
        a, b = P("t"), P("3*t")
        d = am.build_from_e2(a, b)
        assert am.apply(d, a) == b
        am.validate(d, probes_for(1, 5, extra=[a, b]), anchors=((a, b),))

    def test_descending_pair_inverts(self):
        a, b = P("4*t + 2"), P("t")
        d = am.build_from_e2(a, b)
        assert am.apply(d, a) == b
        am.validate(d, probes_for(1, 7, extra=[a, b]), anchors=((a, b),))

    def test_standard_elements_fixed_pointwise(self):
        d = am.build_from_e2(P("t"), P("5*t + 3"))
        for k in (0, 1, 2, 17):
            assert am.apply(d, Element.integer(k, 1)) == Element.integer(k, 1)

    def test_dim2_affine(self):
        a, b = P("t^(1,2) + 4", 2), P("3*t^(1,2) + t^(0,1)", 2)
        d = am.build_from_e2(a, b)
        assert am.apply(d, a) == b
        am.validate(d, probes_for(2, 11, extra=[a, b]), anchors=((a, b),))


class TestBuildFromE3:
    def test_normalized_case(self):
        a1, a2 = P("t^(1,0)", 2), P("t^(1,1)", 2)
        d = am.build_from_e3(a1, a2)
        assert isinstance(d, am.E3Shift)
        assert am.apply(d, a1) == a2
        am.validate(d, probes_for(2, 13, extra=[a1, a2]), anchors=((a1, a2),))

    def test_composite_case(self):
        a1, a2 = P("t^(1,0) + t^(1,-1)", 2), P("5*t^(1,3) + 7", 2)
        d = am.build_from_e3(a1, a2)
        assert am.apply(d, a1) == a2
        am.validate(d, probes_for(2, 17, extra=[a1, a2]), anchors=((a1, a2),))

    def test_dim1_delegates_to_affine(self):
        d = am.build_from_e3(P("t"), P("3*t"))
        assert am.apply(d, P("t")) == P("3*t")
        assert not isinstance(d, am.E3Shift)

    def test_not_equivalent(self):
        with pytest.raises(NotE3Equivalent):
            am.build_from_e3(P("t^(1,0)", 2), P("t^(2,0)", 2))

    def test_offsets_preserved_within_classes(self):
        a1, a2 = P("t^(1,0)", 2), P("t^(1,2)", 2)
        d = am.build_from_e3(a1, a2)
        x = P("t^(1,0) + t^(0,3) + 9", 2)
        fx = am.apply(d, x)
        assert fx == P("t^(1,2) + t^(0,3) + 9", 2)

    def test_dominated_class_fixed(self):
        d = am.build_from_e3(P("t^(1,0)", 2), P("t^(1,1)", 2))
        small = P("t^(0,7) + 3", 2)
        assert am.apply(d, small) == small


class TestApplyInvertCompose:
    def test_identity(self):
        x = P("t^3 + t")
        assert am.apply(am.Identity(), x) == x
        assert isinstance(am.invert(am.Identity()), am.Identity)

    def test_class_shift_examples(self):
        sh = am.E0ClassShift(P("t"), 1)
        assert am.apply(sh, P("t + 4")) == P("t + 5")
        assert am.apply(sh, P("t^2")) == P("t^2")
        assert am.invert(sh) == am.E0ClassShift(P("t"), -1)

    def test_compose_right_to_left(self):
        sh1 = am.E0ClassShift(P("t"), 1)
        d = am.build_from_e2(P("t"), P("2*t"))
        comp = am.compose(d, sh1)  # first shift, then scale
        assert am.apply(comp, P("t")) == am.apply(d, P("t + 1"))

    def test_compose_with_inverse_is_identity_on_probes(self):
        d = am.build_from_e2(P("t"), P("7*t + 2"))
        comp = am.compose(d, am.invert(d))
        for x in probes_for(1, 23):
            assert am.apply(comp, x) == x

    def test_inverse_of_e3(self):
        d = am.build_from_e3(P("t^(1,0)", 2), P("t^(1,1)", 2))
        inv = am.invert(d)
        for x in probes_for(2, 29):
            assert am.apply(inv, am.apply(d, x)) == x


class TestSegmentExtend:
    def test_identity_segment(self):
        g = am.extend_initial_segment(am.Identity(), P("t"), P("t"))
        for x in probes_for(1, 31):
            assert am.apply(g, x) == x

    def test_shift_above_anchor(self):
        a, b = P("t^2"), P("t^2 + t")
        g = am.extend_initial_segment(am.Identity(), a, b)
        assert am.apply(g, a) == b
        assert am.apply(g, a + 5) == b + 5

    def test_glued_affine_segment(self):
        a = P("t^9")
        b = P("2*t^9 + 1")
        inner = am.build_from_e2(P("t"), P("2*t + 1"))
        g = am.extend_initial_segment(inner, a, b)
        assert am.apply(g, a) == b
        assert am.apply(g, P("t + 3")) == am.apply(inner, P("t + 3"))
        probes = probes_for(1, 37, extra=[a, b, a + 7])
        am.validate(g, probes, anchors=((a, b),))

    def test_bad_segment_surfaces_in_validate(self):
        # range of the inner map is not below b: monotonicity breaks at the seam
        g = am.extend_initial_segment(am.Identity(), P("t"), P("1/2*t"))
        probes = sorted({P("t - 1"), P("t"), P("t + 1"), P("t^2")})
        with pytest.raises(ValidationFailure):
            am.validate(g, probes)


class TestValidate:
    def test_passes_on_good_descriptor(self):
        a, b = P("t"), P("2*t + 1")
        d = am.build_from_e2(a, b)
        report = am.validate(d, probes_for(1, 41, extra=[a, b]), anchors=((a, b),))
        assert report.probes > 100
        assert report.checks["anchors"] == 3

    def test_corrupted_descriptor_fails(self):
        d = am.build_from_e2(P("t"), P("2*t + 1"))
        bad = am.E2Affine(a=d.a, b=d.b + 5, n=d.n, c=d.c, m=d.m)
        with pytest.raises(ValidationFailure):
            am.validate(bad, probes_for(1, 43), anchors=((P("t"), P("2*t + 1")),))

    def test_unsorted_probes_rejected(self):
        with pytest.raises(InvariantViolation):
            am.validate(am.Identity(), [P("t + 1"), P("t")])

    def test_e0_transport_on_probe_pairs(self):
        d = am.build_from_e3(P("t^(1,0)", 2), P("t^(1,4)", 2))
        probes = probes_for(2, 47)
        extra = [P("t^(1,0) + 3", 2), P("t^(1,0) + 4", 2)]
        report = am.validate(d, sorted(set(probes + extra)))
        assert report.checks["e0_transport"] > 0


class TestAlmostAddDefect:
    def test_identity_is_additive(self):
        assert am.almost_add_defect(am.Identity(), P("t"), P("t^2")) == 0

    def test_class_shift_has_standard_defect(self):
        sh = am.E0ClassShift(P("t"), 1)
        # f(2t) = 2t, f(t) = t+1: defect -2
        assert am.almost_add_defect(sh, P("t"), P("t")) == -2

    def test_affine_defect_is_nonstandard(self):
        d = am.build_from_e2(P("t"), P("2*t + 1"))
        assert am.almost_add_defect(d, P("t^2"), P("t^3")) is None
