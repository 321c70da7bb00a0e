import random

import pytest
import sympy
from hypothesis import given, strategies as st

from kaclie.chevalley import chevalley_of
from kaclie.contraction import contract_zero
from kaclie.grading import grading_of
from kaclie.index import (
    ad_semisimple,
    generic_orbit_data,
    generic_semisimple,
    index_of,
    is_nilpotent,
    is_regular,
    pencil_ranks,
)
from kaclie.kac import parse
from kaclie.linalg import rank_exact
from kaclie.rootsystem import SimpleType, all_types


@pytest.mark.parametrize("t", all_types(6), ids=str)
def test_index_of_simple_is_rank(t):
    rep = index_of(chevalley_of(t), trials=3, lower_bound=t.rank)
    assert rep.computed_index == t.rank
    assert rep.certified and rep.status == "certified"


def test_index_examples():
    rep = index_of(contract_zero(grading_of(parse("G2[0,1,1]"))), lower_bound=2)
    assert (rep.computed_index, rep.certified) == (2, True)
    rep = index_of(contract_zero(grading_of(parse("A1[1,1]"))), lower_bound=1)
    assert (rep.computed_index, rep.certified) == (1, True)
    assert index_of(chevalley_of(SimpleType("A", 2))).status == "observed"


def test_index_needs_trials():
    with pytest.raises(ValueError):
        index_of(chevalley_of(SimpleType("A", 1)), trials=0)


def test_ranks_even_and_reproducible():
    L = contract_zero(grading_of(parse("C3[1,0,1,0]")))
    r1 = pencil_ranks(L, 4, 11)
    assert all(r % 2 == 0 for r in r1)
    assert r1 == pencil_ranks(L, 4, 11)


def test_more_trials_never_raise_index():
    L = contract_zero(grading_of(parse("B3[0,1,0,1]")))
    vals = [index_of(L, trials=k, seed=3).computed_index for k in (1, 2, 4, 8)]
    assert vals == sorted(vals, reverse=True)


def test_f4_exact_rational_certificate():
    # exact rank over Q at one rational point bounds the index from above
    C = contract_zero(grading_of(parse("F4[0,0,1,0,0]")))
    d = C.dim
    rng = random.Random(7)
    xi = [rng.randint(-20, 20) for _ in range(d)]
    B = [[0] * d for _ in range(d)]
    for (i, j), vec in C.brackets.items():
        B[i][j] = sum(c * xi[k] for k, c in vec.items())
    assert d - rank_exact(B) == 4
    assert index_of(C, lower_bound=4).certified


def test_generic_orbit_data():
    # N-regular sl_3, m = 3: g_0 is the torus, g_1 // G_0 is one-dimensional
    assert generic_orbit_data(grading_of(parse("A2[1,1,1]"))) == (0, 1)
    # m = 1: g_1 = g and the quotient dimension is the rank
    assert generic_orbit_data(grading_of(parse("A2[1,0,0]"))) == (2, 2)


def test_nilpotent_regular():
    L = chevalley_of(SimpleType("A", 2))
    e = {0: 1, 1: 1}
    assert is_nilpotent(L, e)
    assert is_regular(L, e, 2)
    h = {6: 1}
    assert not is_nilpotent(L, h)


def _squarefree_minpoly(M) -> bool:
    A = sympy.Matrix(M)
    lam = sympy.symbols("lam")
    p = A.charpoly(lam).as_expr()
    s = sympy.quo(p, sympy.gcd(p, sympy.diff(p, lam)), lam)
    val = sympy.zeros(*A.shape)
    for c in sympy.Poly(s, lam).all_coeffs():
        val = val * A + c * sympy.eye(A.shape[0])
    return val.is_zero_matrix


@given(st.sampled_from(["A1", "A2", "G2"]), st.lists(st.integers(-2, 2), min_size=14, max_size=14),
       st.integers(0, 13))
def test_semisimple_matches_minpoly_oracle(name, coords, support):
    L = chevalley_of(SimpleType.parse(name))
    x = {i: c for i, c in enumerate(coords[: L.dim]) if c and (i >= L.dim - 2 or i % 3 == support % 3)}
    assert ad_semisimple(L, x) == _squarefree_minpoly(L.ad_matrix(x))


@pytest.mark.parametrize("text,expected", [
    ("G2[0,1,1]", False),
    ("F4[0,0,1,0,0]", False),
    ("A1[1,1]", True),
    ("E6[1,0,0,0,0,0,1]", True),
])
def test_generic_semisimple(text, expected):
    assert generic_semisimple(grading_of(parse(text)), trials=3) is expected
