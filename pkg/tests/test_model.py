"""Arithmetic, order, division and roots of the concrete model."""

from fractions import Fraction

import pytest

from lexarith.errors import (
    CoefficientNotRepresentable,
    InvariantViolation,
    NonTerminatingQuotient,
    Underflow,
)
from lexarith.model import (
    Element,
    Exponent,
    ModelConfig,
    cmp,
    deg,
    divmod_floor,
    divmod_scalar,
    floor_quotient,
    is_standard,
    pow_int,
    root_floor,
    sub,
    trunc_const,
)
from lexarith.textform import parse_element


def P(text, dim=1):
    return parse_element(text, dim)


class TestExponent:
    def test_lexicographic_order(self):
        assert Exponent([1, 0]) > Exponent([0, 9])
        assert Exponent([0, 1]) > Exponent([0, 0])
        assert Exponent([Fraction(1, 2)]) < Exponent([1])

    def test_group_operations(self):
        e = Exponent([1, Fraction(-1, 2)]) + Exponent([0, 2])
        assert e == Exponent([1, Fraction(3, 2)])
        assert e - e == Exponent.zero(2)
        assert Exponent([2, 4]) * Fraction(1, 2) == Exponent([1, 2])

    def test_levels(self):
        assert Exponent([1, 0]).level() == 0
        assert Exponent([0, 3]).level() == 1
        assert Exponent.zero(2).level() == 2


class TestInvariants:
    def test_rejects_negative_exponent(self):
        with pytest.raises(InvariantViolation):
            Element([((Fraction(-1),), 1)], 1)

    def test_rejects_fractional_constant(self):
        with pytest.raises(InvariantViolation):
            Element([((Fraction(0),), Fraction(1, 2))], 1)

    def test_rejects_negative_leading(self):
        with pytest.raises(InvariantViolation):
            Element([((Fraction(1),), -1)], 1)
        with pytest.raises(InvariantViolation):
            Element.integer(-3, 1)

    def test_dim2_mixed_sign_exponent_is_legal(self):
        e = P("t^(1,-5)", 2)
        assert deg(e) == Exponent([1, -5])

    def test_interior_negative_coefficients_are_legal(self):
        e = P("t^2 - t + 3", 1)
        assert e > Element.zero(1)

    def test_config_validation(self):
        with pytest.raises(InvariantViolation):
            ModelConfig(dim=3)
        with pytest.raises(InvariantViolation):
            ModelConfig(div_budget=0)


class TestAddMul:
    def test_add_examples(self):
        assert P("t^2 + t") + P("t + 1") == P("t^2 + 2*t + 1")
        a = P("t^2 + 5")
        assert a + Element.zero(1) == a

    def test_lex_merge(self):
        e = P("t^(1,0)", 2) + P("t^(0,1)", 2)
        assert deg(e) == Exponent([1, 0])
        assert len(e.terms()) == 2

    def test_mul_examples(self):
        assert P("t") * P("t") == P("t^2")
        assert P("t + 1") * P("t + 1") == P("t^2 + 2*t + 1")
        assert P("t^(1,0)", 2) * P("t^(0,1)", 2) == P("t^(1,1)", 2)

    def test_sub_examples(self):
        assert sub(P("t^2 + 2*t"), P("t")) == P("t^2 + t")
        a = P("t^2 + 3")
        assert sub(a, a) == Element.zero(1)
        with pytest.raises(Underflow):
            sub(P("t"), P("t^2"))

    def test_sub_is_inverse_of_add(self):
        a, b = P("t^(2,1) + 4", 2), P("t^(1,-3) + t^(0,2)", 2)
        assert sub(a + b, b) == a


class TestOrder:
    def test_nonstandard_dominates(self):
        assert cmp(P("t"), P("1000")) > 0

    def test_translation(self):
        assert cmp(P("t + 1"), P("t + 2")) < 0

    def test_lex(self):
        assert cmp(P("t^(1,0)", 2), P("t^(0,9)", 2)) > 0

    def test_discreteness_via_sub(self):
        # x < y implies x + 1 <= y: the difference is never a proper fraction
        pairs = [(P("t"), P("t + 1")), (P("t^(1,0)", 2), P("t^(1,1)", 2))]
        for x, y in pairs:
            assert sub(y, x) >= Element.integer(1, x.dim)


class TestDivision:
    def test_divmod_scalar_examples(self):
        q, r = divmod_scalar(P("t + 1"), 2)
        assert (q, r) == (P("1/2*t"), 1)
        assert q * 2 + r == P("t + 1")
        assert divmod_scalar(P("6"), 4) == (P("1"), 2)
        q, r = divmod_scalar(P("3*t^2 + 5"), 3)
        assert (q, r) == (P("t^2 + 1"), 2)

    def test_divmod_examples(self):
        assert divmod_floor(P("t^2 + 1"), P("t")) == (P("t"), P("1"))
        q, r = divmod_floor(P("t^2"), P("t^(3/2)"))
        assert q == P("t^(1/2)") and r.is_zero()
        assert q * P("t^(3/2)") + r == P("t^2")

    def test_divmod_contract_rechecked(self):
        a, b = P("t^(2,0) + 3*t^(1,1) + 7", 2), P("t^(1,0) + 2", 2)
        q, r = divmod_floor(a, b)
        assert q * b + r == a
        assert Element.zero(2) <= r < b

    def test_nonterminating_quotient(self):
        a = P("t^(2,0)", 2)
        b = P("t^(1,0) - t^(1,-1)", 2)
        with pytest.raises(NonTerminatingQuotient):
            divmod_floor(a, b)

    def test_budget_controls_nontermination(self):
        # terminating expansion, but only within a large enough budget
        a = P("t^(2,0)", 2)
        b = P("t^(1,0) - t^(0,5)", 2)
        q, r = divmod_floor(a, b)
        assert q * b + r == a
        with pytest.raises(NonTerminatingQuotient):
            divmod_floor(a, b, budget=1)

    def test_dim1_divmod_total(self):
        # the same shape that diverges in dim 2 terminates in dim 1
        a, b = P("t^2"), P("t - 1")
        q, r = divmod_floor(a, b)
        assert q * b + r == a and r < b

    def test_dim1_total_beyond_budget(self):
        # 72 nonnegative-exponent quotient terms: the budget is a dim-2 guard only
        a, b = P("t^9"), P("t^(1/8) - 1")
        q, r = divmod_floor(a, b, budget=4)
        assert q * b + r == a and r < b
        assert len(q.terms()) == 72

    def test_floor_quotient_examples(self):
        q = floor_quotient(P("t + 3"), P("t"))
        assert q == P("1")
        assert q * P("t") <= P("t + 3") < (q + 1) * P("t")
        a = P("t^2 + 4*t + 1")
        assert floor_quotient(a, P("1")) == a
        assert floor_quotient(P("t"), P("t^2")).is_zero()


class TestPowRoot:
    def test_pow_examples(self):
        assert pow_int(P("t"), 3) == P("t^3")
        assert pow_int(P("t^2 + 7"), 0) == P("1")
        assert pow_int(P("t + 1"), 2) == P("t^2 + 2*t + 1")

    def test_root_floor_examples(self):
        assert root_floor(P("t^2"), 2) == P("t")
        m = root_floor(P("t^2 + 2*t"), 2)
        assert m == P("t")
        assert pow_int(m, 2) <= P("t^2 + 2*t") < pow_int(m + 1, 2)

    def test_root_floor_irrational_leading(self):
        with pytest.raises(CoefficientNotRepresentable):
            root_floor(P("2*t^2"), 2)

    def test_root_floor_standard(self):
        assert root_floor(Element.integer(17, 1), 2) == Element.integer(4, 1)
        assert root_floor(Element.integer(16, 1), 2) == Element.integer(4, 1)

    def test_root_floor_contract_with_offsets(self):
        for text, k in [("t^4 + t^2 + 9", 2), ("t^3 + 5", 3), ("t^(2,4) + t^(1,1)", 2)]:
            dim = 2 if "," in text else 1
            a = P(text, dim)
            m = root_floor(a, k)
            assert pow_int(m, k) <= a < pow_int(m + 1, k)

    def test_root_floor_nonterminating_dim2(self):
        with pytest.raises(NonTerminatingQuotient):
            root_floor(P("t^(2,0) + t^(2,-1)", 2), 2)


class TestStandardness:
    def test_examples(self):
        assert is_standard(P("7"))
        assert not is_standard(P("t"))
        assert is_standard(Element.zero(1))

    def test_deg(self):
        assert deg(P("t^2 + t")) == Exponent([2])
        assert deg(P("5")) == Exponent([0])
        assert deg(Element.zero(1)) is None

    def test_trunc_const(self):
        assert trunc_const(P("t^2 - t + 9")) == P("t^2 - t")
        assert trunc_const(P("42")).is_zero()
