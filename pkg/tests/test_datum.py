from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kaclie.datum import (
    D_theta,
    b_value,
    bullet_degrees,
    datum_of,
    friendly_pairs,
    main2_b,
    main2_sum,
    nreg_dims,
    nreg_label_shape_check,
    upsilon,
)
from kaclie.kac import dims_of, n_regular_inner, parse
from kaclie.rootsystem import SimpleType, all_types, supported_twists

A2, A1 = SimpleType("A", 2), SimpleType("A", 1)
PAIRS = [(t, w) for t in all_types(8) for w in supported_twists(t)]


def test_datum_examples():
    assert datum_of(A2, 1, 3).k_vector == (0, 1, 1)
    assert datum_of(A1, 1, 2).k_vector == (0, 1)
    d = datum_of(SimpleType("A", 7), 2, 4)
    assert nreg_dims(d) == (16, 16, 15, 16)


def test_d_theta():
    assert D_theta((2, 3, 3)) == 9
    assert D_theta((8,)) == 0
    assert D_theta(dims_of(parse("G2[0,1,1]"))) == 25
    with pytest.raises(AssertionError):
        D_theta((2, 3, 4))


def test_upsilon_and_bullets():
    assert upsilon(datum_of(A2, 1, 3)) == 9
    assert upsilon(datum_of(A1, 1, 2)) == 2
    assert bullet_degrees(datum_of(A2, 1, 3)) == [3, 6]


def test_nreg_dims_examples():
    assert nreg_dims(datum_of(A2, 1, 3)) == (2, 3, 3)
    assert nreg_dims(datum_of(A2, 1, 1)) == (8,)


def test_b_value():
    assert b_value(8, 2, 2, 2) == 5
    assert b_value(8, 8, 2, 2) == 2
    assert b_value(14, 4, 2, 2) == 7
    assert main2_b(datum_of(A2, 1, 3)) == Fraction(5)
    assert main2_sum(datum_of(A2, 1, 3)) == 5


def test_friendly_examples():
    (p,) = friendly_pairs(SimpleType("E", 7), 1, 4)
    assert (p.nreg_dims, p.partner_dims) == ((33, 35, 30, 35), (33, 32, 36, 32))
    assert str(p.nreg) == "E7[0,0,0,1,0,0,0,1]" and str(p.partner) == "E7[0,0,0,0,1,0,0,0]"
    (p,) = friendly_pairs(SimpleType("E", 6), 1, 4)
    assert p.nreg_dims == p.partner_dims == (20, 20, 18, 20)
    (p,) = friendly_pairs(SimpleType("A", 7), 2, 4)
    assert p.nreg_dims == p.partner_dims == (16, 16, 15, 16)
    assert p.status == "candidate"


@given(st.sampled_from(PAIRS), st.integers(1, 12))
def test_datum_identities(pair, m):
    t, w = pair
    if m % w:
        with pytest.raises(ValueError):
            datum_of(t, w, m)
        return
    d = datum_of(t, w, m)
    assert sum(d.k_vector) == t.rank
    dims = nreg_dims(d)
    assert sum(dims) == t.dim
    assert main2_sum(d) == main2_b(d)
    assert sum(bullet_degrees(d)) == upsilon(d) == D_theta(dims)


@given(st.sampled_from(all_types(8)), st.integers(1, 40))
def test_nreg_shape(t, m):
    d = n_regular_inner(t, m)
    assert nreg_label_shape_check(d).ok
    assert dims_of(d) == nreg_dims(datum_of(t, 1, m))
