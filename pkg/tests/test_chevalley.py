import pytest
from hypothesis import given, strategies as st

from kaclie.chevalley import (
    centralizer,
    chevalley_of,
    eigen_table,
    graded_base,
    jacobi_holds,
    killing,
    outer_automorphism,
    preserves_brackets,
    sigma_decomposition,
)
from kaclie.kac import basis_weights
from kaclie.rootsystem import SimpleType, affine_diagram, all_types, supported_twists

SMALL = [t for t in all_types(5) if t.dim <= 80]


@pytest.mark.parametrize("t", SMALL, ids=str)
def test_jacobi_small(t):
    assert jacobi_holds(chevalley_of(t))


def test_sl2_table():
    L = chevalley_of(SimpleType("A", 1))
    e, f, h = 0, 1, 2
    assert L.bracket(e, f) == {h: 1}
    assert L.bracket(h, e) == {e: 2}
    assert L.bracket(h, f) == {f: -2}


@pytest.mark.parametrize("name,w,dims", [
    ("A3", 2, (10, 5)),
    ("A2", 2, (3, 5)),
    ("A4", 2, (10, 14)),
    ("D4", 2, (21, 7)),
    ("D4", 3, (14, 7, 7)),
    ("E6", 2, (52, 26)),
    ("D5", 2, (36, 9)),
])
def test_sigma_eigenspaces(name, w, dims):
    t = SimpleType.parse(name)
    sigma = outer_automorphism(t, w)
    assert preserves_brackets(sigma)
    assert tuple(len(p) for p in sigma_decomposition(chevalley_of(t), sigma)) == dims


@pytest.mark.parametrize("t,w", [(t, w) for t in all_types(6) for w in supported_twists(t) if w > 1],
                         ids=lambda x: str(x))
def test_eigen_table_jacobi_and_weights(t, w):
    E = graded_base(t, w)
    assert jacobi_holds(E)
    assert sorted(E.weights) == sorted(basis_weights(t, w))


def test_eigen_table_rebuild_matches_cache():
    t = SimpleType("A", 3)
    L = chevalley_of(t)
    E = eigen_table(L, outer_automorphism(t, 2), affine_diagram(t, 2))
    assert E.dim == 15


def test_killing_sl2():
    K = killing(chevalley_of(SimpleType("A", 1)))
    assert K.matrix[0][1] == 4
    assert K.matrix[2][2] == 8


def test_centralizer_of_regular_nilpotent():
    t = SimpleType("A", 2)
    L = chevalley_of(t)
    C = centralizer(L, {0: 1, 1: 1})  # e_{a1} + e_{a2}
    assert C.dim == t.rank
    assert C.is_abelian()


@given(st.sampled_from(SMALL), st.integers(0, 10**6))
def test_bracket_antisymmetric(t, k):
    L = chevalley_of(t)
    i, j = k % L.dim, (k // L.dim) % L.dim
    assert L.bracket(i, j) == {a: -c for a, c in L.bracket(j, i).items()}
