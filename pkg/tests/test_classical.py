import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from kaclie.classical import (
    EVAL_PRIME,
    EigenMultiplicities,
    bihom_support,
    charpoly_mod,
    eigen_multiplicities,
    ggs_sum_check,
    invariant_types,
    invariants_of,
    nminus_degrees,
    pfaffian_mod,
    phi_degree,
    phi_degrees,
    realize,
    restricted_jacobian_rank,
    vinberg_rank_so,
)
from kaclie.contraction import gamma_move_to_zero
from kaclie.datum import datum_of, main2_sum, upsilon
from kaclie.kac import dims_of, enumerate_diagrams, n_regular_inner, parse
from kaclie.rootsystem import SimpleType

P = EVAL_PRIME
CLASSICAL = [(SimpleType(f, l), w) for f, ls in (("A", range(1, 6)), ("B", range(2, 5)), ("C", range(2, 5)),
                                                 ("D", range(4, 6))) for l in ls
             for w in ((1, 2) if (f == "A" and l > 1) or f == "D" else (1,))]


def test_prime():
    assert sympy.isprime(P) and P < 2**25


def test_sl2_degrees():
    r = realize(parse("A1[1,1]"))
    assert r.v_degrees == (0, 1)
    assert r.dimension_vector() == (1, 2)


def test_sl2_det_phi_degree_oracle():
    # det of phi(t) x for x = [[a, b], [c, -a]]: b, c sit in degree 1 and get weight m - 1 = 1
    a, b, c, t = sympy.symbols("a b c t")
    det = sympy.Matrix([[a, t * b], [t * c, -a]]).det()
    assert sympy.Poly(det, t).degree() == 2
    assert phi_degree(0, realize(parse("A1[1,1]"))) == 2


def test_sl3_nregular():
    r = realize(n_regular_inner(SimpleType("A", 2), 3))
    assert phi_degrees(r) == (3, 6)
    assert [sorted(bihom_support(j, r)) for j in range(2)] == [[0, 3], [0, 3, 6]]
    assert ggs_sum_check(r) == (9, 9, True)
    assert eigen_multiplicities(r).b == (1, 1, 1)


def test_sl2_nregular_support():
    r = realize(n_regular_inner(SimpleType("A", 1), 2))
    assert bihom_support(0, r) == {0, 2}


def test_order_one():
    r = realize(parse("B3[1,0,0,0]"))
    assert phi_degrees(r) == (0, 0, 0)
    assert [bihom_support(j, r) for j in range(3)] == [{0}] * 3
    assert ggs_sum_check(r) == (0, 0, True)
    assert restricted_jacobian_rank(r) == 3
    assert eigen_multiplicities(r).b == (7,)


def test_non_classical():
    with pytest.raises(ValueError):
        realize(parse("G2[0,1,1]"))
    with pytest.raises(ValueError):
        realize(parse("D4^3[1,0,1]"))


def test_sl8_outer_dims():
    assert realize(parse("A7^2[0,0,1,0,0]")).dimension_vector() == (16, 16, 15, 16)


def _check_basis(r):
    B = r.dense_basis().astype(object)
    flat = sympy.Matrix([list(b.flatten()) for b in B])
    assert flat.rank() == r.dim
    F = r.form_matrix
    for X, deg in zip(B, r.degrees):
        if F is None:
            assert sum(X[i, i] for i in range(r.N)) == 0
        else:
            assert not (X.T.dot(F) + F.dot(X)).any()
        shifts = set()
        for a, b in zip(*np.nonzero(X)):
            shifts.add((deg - (r.v[a] - r.v[b])) % r.m)
        assert len(shifts) == 1
        (s,) = shifts
        if r.diagram.twist == 1:
            assert s == 0
        else:
            assert s in (0, r.m // 2)


@pytest.mark.parametrize("t,w", CLASSICAL, ids=lambda x: str(x))
def test_realizations(t, w):
    for m in range(w, 7, w):
        for d in enumerate_diagrams(t, w, m):
            r = realize(d)
            assert r.dimension_vector() == dims_of(d)
            _check_basis(r)
            k = [0] * m
            for ty in invariant_types(r):
                k[ty] += 1
            assert tuple(k) == datum_of(t, w, m).k_vector


@given(st.integers(2, 7), st.integers(0, 2**32))
def test_charpoly_oracle(n, seed):
    rng = np.random.default_rng(seed)
    X = rng.integers(-3, 4, size=(n, n))
    cp = sympy.Matrix(X.tolist()).charpoly().all_coeffs()[::-1]
    got = charpoly_mod(X[None].astype(np.int64) % P)[0]
    assert [int(c) % P for c in cp] == [int(x) for x in got]


@given(st.integers(1, 4), st.integers(0, 2**32))
def test_pfaffian_squared_is_det(l, seed):
    rng = np.random.default_rng(seed)
    A = rng.integers(-3, 4, size=(2 * l, 2 * l))
    A = A - A.T
    det = int(sympy.Matrix(A.tolist()).det())
    assert pfaffian_mod(A) ** 2 % P == det % P


def test_pfaffian_invariant():
    r = realize(parse("D4[1,0,0,0,0]"))
    fam = invariants_of(r)
    assert fam.degrees == (2, 4, 4, 6) and fam.pfaffian == (False, False, True, False)
    rng = np.random.default_rng(0)
    X = np.tensordot(rng.integers(-3, 4, size=r.dim), r.dense_basis(), axes=(0, 0))
    pf = fam.evaluate(X[None])[0][2]
    det = int(sympy.Matrix(X.tolist()).det()) * int(sympy.Matrix(r.form_matrix.tolist()).det())
    assert pf * pf % P == det % P


@pytest.mark.parametrize("text", ["A3[1,1,0,1]", "C3[1,0,1,0]", "C2[2,1,0]", "A4[1,0,2,0,1]"])
def test_phi_degree_is_m_times_nminus(text):
    d = gamma_move_to_zero(parse(text))
    r = realize(d)
    assert phi_degrees(r) == tuple(r.m * x for x in nminus_degrees(r))


@given(st.sampled_from([(t, w) for t, w in CLASSICAL if t.dim <= 45]), st.integers(1, 6))
def test_phi_sum_bounds(pair, m):
    t, w = pair
    if m % w:
        return
    ups = upsilon(datum_of(t, w, m))
    for d in enumerate_diagrams(t, w, m)[:3]:
        s, D, cert = ggs_sum_check(realize(d))
        assert s <= ups
        if cert:
            assert s >= D


@pytest.mark.parametrize("t", [SimpleType("A", 3), SimpleType("C", 2), SimpleType("B", 3)], ids=str)
def test_nregular_support_count_is_b(t):
    for m in (2, 3, 4):
        r = realize(n_regular_inner(t, m))
        assert sum(len(bihom_support(j, r)) for j in range(t.rank)) == main2_sum(datum_of(t, 1, m))


def test_vinberg():
    assert vinberg_rank_so(EigenMultiplicities((2, 1, 0, 1))) == 0
    assert vinberg_rank_so(EigenMultiplicities((3, 1, 1, 1))) == 1
    with pytest.raises(ValueError):
        vinberg_rank_so(EigenMultiplicities((1, 1, 1)))
    with pytest.raises(ValueError):
        vinberg_rank_so(EigenMultiplicities((1, 1), half=True))


def test_so_outer_multiplicities():
    # outer so_10 with labels 0/1: {b_0, b_{m/2}} are odd, the middle ones equal s_i + 1
    e = eigen_multiplicities(realize(parse("D5^2[0,1,0,1,0]")))
    m = len(e.b)
    assert e.b[0] % 2 == 1 and e.b[m // 2] % 2 == 1
    assert min(e.b) >= 1 and e.N == 10
