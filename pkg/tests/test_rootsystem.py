import pytest
from hypothesis import given, strategies as st

from kaclie.rootsystem import (
    SimpleType,
    affine_diagram,
    all_types,
    build_root_system,
    exponents_of,
    parse_affine,
    supported_twists,
)

TYPES = all_types(8)
PAIRS = [(t, w) for t in TYPES for w in supported_twists(t)]


def test_a1():
    rs = build_root_system(SimpleType("A", 1))
    assert set(rs.roots) == {(1,), (-1,)}
    assert rs.highest_root == (1,)
    assert rs.coxeter_number == 2
    assert rs.exponents == (1,)


def test_g2():
    rs = build_root_system(SimpleType("G", 2))
    assert len(rs.roots) == 12
    assert rs.highest_root == (3, 2)
    assert rs.coxeter_number == 6


def test_f4_marks():
    rs = build_root_system(SimpleType("F", 4))
    assert len(rs.roots) == 48
    assert rs.marks == (2, 4, 3, 2)


@pytest.mark.parametrize("name,h,exps", [
    ("E6", 12, (1, 4, 5, 7, 8, 11)),
    ("E7", 18, (1, 5, 7, 9, 11, 13, 17)),
    ("E8", 30, (1, 7, 11, 13, 17, 19, 23, 29)),
    ("F4", 12, (1, 5, 7, 11)),
    ("G2", 6, (1, 5)),
    ("D4", 6, (1, 3, 3, 5)),
])
def test_exceptional_exponents(name, h, exps):
    rs = build_root_system(SimpleType.parse(name))
    assert rs.coxeter_number == h
    assert rs.exponents == exps


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_root_system_invariants(t):
    rs = build_root_system(t)
    assert len(rs.roots) == t.dim - t.rank
    assert set(rs.roots) == {tuple(-c for c in r) for r in rs.roots}
    assert rs.coxeter_number == sum(rs.highest_root) + 1
    assert sum(2 * e + 1 for e in rs.exponents) == t.dim
    assert sum(exponents_of(rs)) == len(rs.positive_roots)
    # closed under simple reflections
    roots = set(rs.roots)
    for r in rs.roots:
        for i in range(t.rank):
            k = rs.pairing(r, i)
            assert tuple(c - k * int(j == i) for j, c in enumerate(r)) in roots


@pytest.mark.parametrize("t,w", PAIRS, ids=lambda x: str(x))
def test_affine_null_vector(t, w):
    a = affine_diagram(t, w)
    assert a.marks[0] == 1
    for row in a.cartan:
        assert sum(x * k for x, k in zip(row, a.marks)) == 0
    for g in a.symmetry_group:
        assert all(a.cartan[g[i]][g[j]] == a.cartan[i][j] for i in range(a.node_count) for j in range(a.node_count))


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_gamma_transitive_on_mark_one(t):
    a = affine_diagram(t, 1)
    ones = {i for i, k in enumerate(a.marks) if k == 1}
    assert {g[0] for g in a.symmetry_group} == ones


def test_cycle_symmetry_is_dihedral():
    for l in range(2, 7):
        assert len(affine_diagram(SimpleType("A", l)).symmetry_group) == 2 * (l + 1)


@pytest.mark.parametrize("name,marks", [
    ("A4^2", (1, 2, 2)),
    ("A5^2", (1, 1, 2, 1)),
    ("D5^2", (1, 1, 1, 1, 1)),
    ("E6^2", (1, 2, 3, 2, 1)),
    ("D4^3", (1, 2, 1)),
])
def test_twisted_marks(name, marks):
    assert parse_affine(name).marks == marks


def test_invalid_types():
    for f, l in (("E", 5), ("D", 3), ("B", 1), ("G", 3), ("X", 2)):
        with pytest.raises(ValueError):
            SimpleType(f, l)


@given(st.sampled_from(TYPES))
def test_dim_matches_exponents(t):
    assert build_root_system(t).dim == t.dim
