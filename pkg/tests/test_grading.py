import pytest
from hypothesis import given, strategies as st

from kaclie.chevalley import chevalley_of, outer_automorphism
from kaclie.grading import (
    additive,
    dimension_vector,
    grading_of,
    inner_grading,
    outer_bounds_hold,
    outer_grading,
)
from kaclie.kac import dims_of, enumerate_diagrams, parse
from kaclie.rootsystem import SimpleType, all_types, supported_twists

PAIRS = [(t, w) for t in all_types(5) for w in supported_twists(t)]


def test_inner_grading_sl3():
    d = parse("A2[1,1,1]")
    G = inner_grading(chevalley_of(d.base), d)
    assert dimension_vector(G) == (2, 3, 3)
    assert additive(G)


def test_outer_grading_d4():
    d = parse("D4^3[1,0,1]")
    t = d.base
    G = outer_grading(chevalley_of(t), outer_automorphism(t, 3), d)
    assert dimension_vector(G) == (4, 6, 4, 4, 4, 6)
    assert additive(G)


def test_grading_type_mismatch():
    with pytest.raises(ValueError):
        inner_grading(chevalley_of(SimpleType("A", 3)), parse("A2[1,1,1]"))
    with pytest.raises(ValueError):
        inner_grading(chevalley_of(SimpleType("A", 4)), parse("A4^2[1,0,1]"))


@given(st.sampled_from(PAIRS), st.integers(1, 8))
def test_grading_properties(pair, m):
    t, w = pair
    for d in enumerate_diagrams(t, w, m)[:6]:
        G = grading_of(d)
        assert dimension_vector(G) == dims_of(d)
        assert additive(G)
        if w > 1:
            assert outer_bounds_hold(G)
