"""Literal witness checking and bounded search."""

import pytest

from lexarith import oracle
from lexarith.equiv import decide
from lexarith.errors import StandardInput
from lexarith.oracle import SearchBounds, check_witness, search
from lexarith.textform import parse_element
from lexarith.witnesses import BoundN, Companion


def P(text, dim=1):
    return parse_element(text, dim)


def test_check_witness_level2():
    assert check_witness(2, P("t"), P("3*t"), BoundN(4))
    assert not check_witness(2, P("t"), P("3*t"), BoundN(3))


def test_check_witness_level3_degree_criterion():
    a, b = P("t^(1,0)", 2), P("t^(1,5)", 2)
    assert check_witness(3, a, b, Companion(P("t^(0,6)", 2)))
    # the gap itself is too small: b < a*c fails at equality
    assert not check_witness(3, a, b, Companion(P("t^(0,5)", 2)))
    # a companion in the same Archimedean class fails the universal condition
    assert not check_witness(3, a, b, Companion(P("t^(1,0)", 2)))


def test_check_witness_malformed():
    a, b = P("t"), P("t + 1")
    assert not check_witness(0, a, b, BoundN(0))
    assert not check_witness(0, a, b, Companion(P("1")))
    assert not check_witness(1, a, b, BoundN(3))
    assert not check_witness(1, a, b, Companion(P("t^(0,1)", 2)))  # wrong dim
    with pytest.raises(StandardInput):
        check_witness(0, P("3"), b, BoundN(1))


def test_universal_conditions_are_degreewise_exact():
    # n*c < a for all n is a strict degree comparison, not a sample
    assert oracle.multiples_stay_below(P("t"), P("t^2"))
    assert not oracle.multiples_stay_below(P("t"), P("9*t"))
    # c**n < a for all n is an Archimedean-class comparison
    assert oracle.powers_stay_below(P("5"), P("t"))
    assert not oracle.powers_stay_below(P("t^(0,1)", 2), P("t^(0,9)", 2))
    assert oracle.powers_stay_below(P("t^(0,9)", 2), P("t^(1,0)", 2))


def test_search_finds_least_bound():
    w = search(0, P("t + 2"), P("t"), SearchBounds(n_max=8))
    assert w == BoundN(3)


def test_search_exhausts_without_refuting():
    assert search(2, P("t"), P("t^2"), SearchBounds(n_max=64)) is None


def test_search_level3_pool_from_degree_lattice():
    a, b = P("t^(1,0)", 2), P("t^(1,3)", 2)
    w = search(3, a, b, SearchBounds(n_max=8, companion_pool=oracle.default_pool(3, a, b)))
    assert isinstance(w, Companion)
    assert check_witness(3, a, b, w)


def test_bounds_seeded_with_decider_witness():
    a, b = P("t^(2,0) + t^(1,1)", 2), P("t^(2,4)", 2)
    v = decide(3, a, b)
    assert v.equivalent
    found = search(3, a, b, oracle.bounds_for(3, a, b, hint=v.witness))
    assert found is not None and check_witness(3, a, b, found)
