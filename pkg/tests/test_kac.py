from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from kaclie.chevalley import graded_base
from kaclie.kac import (
    AllZero,
    KacDiagram,
    NonCoprime,
    basis_weights,
    canonicalize,
    collapse,
    dims_of,
    enumerate_diagrams,
    equivalent,
    gamma_images,
    n_regular_inner,
    normalize_alcove,
    parse,
    readout,
    validate,
)
from kaclie.rootsystem import SimpleType, affine_diagram, all_types, build_root_system, supported_twists

PAIRS = [(t, w) for t in all_types(6) for w in supported_twists(t)]


def test_parse_roundtrip():
    for text in ("G2[0,1,1]", "D4^3[1,0,1]", "A1[1,1]", "E6^2[1,0,0,0,1]"):
        assert str(parse(text)) == text


def test_parse_errors():
    with pytest.raises(ValueError, match="position"):
        parse("G2[0,1")
    with pytest.raises(ValueError, match="needs 3 labels"):
        parse("G2[0,1]")
    with pytest.raises(ValueError):
        parse("G2[0,-1,1]")
    with pytest.raises(ValueError):
        parse("D4^5[1,0,0]")


def test_validate():
    with pytest.raises(AllZero):
        validate(parse("A2[0,0,0]"))
    with pytest.raises(NonCoprime):
        validate(parse("A2[2,0,2]"))
    assert validate(parse("A2[1,1,1]")).order == 3


@pytest.mark.parametrize("text,order", [
    ("G2[0,1,1]", 5), ("A1[1,1]", 2), ("F4[0,0,1,0,0]", 4), ("D4^3[1,0,1]", 6), ("A4^2[1,0,1]", 6),
    ("E8[1,0,0,0,0,0,0,0,0]", 1),
])
def test_orders(text, order):
    assert parse(text).order == order


def test_canonical_forms():
    assert canonicalize(parse("A3[1,0,1,0]")).labels == (0, 1, 0, 1)
    assert canonicalize(parse("A2[1,1,0]")).labels == (0, 1, 1)
    assert equivalent(parse("A2[1,1,0]"), parse("A2[0,1,1]"))


def test_enumerations():
    g2 = SimpleType("G", 2)
    assert [d.labels for d in enumerate_diagrams(g2, 1, 3)] == [(0, 1, 0), (1, 0, 1)]
    d43 = SimpleType("D", 4)
    assert [d.labels for d in enumerate_diagrams(d43, 3, 3)] == [(0, 0, 1), (1, 0, 0)]
    assert len(enumerate_diagrams(SimpleType("A", 1), 1, 2)) == 1
    assert len(enumerate_diagrams(SimpleType("A", 1), 1, 1)) == 1


def test_collapse():
    assert collapse(parse("C3[0,2,1,0]")).labels == (0, 1, 1, 0)


def test_readout_examples():
    r = readout(parse("G2[0,1,1]"))
    assert [str(c) for c in r.semisimple_part] == ["A1"]
    assert r.center_dim == 1
    r = readout(parse("F4[0,0,1,0,0]"))
    assert sorted(map(str, r.semisimple_part)) == ["A1", "A3"]
    assert (r.dim_g0, r.dim_g1) == (18, 8)
    assert readout(parse("A2[1,1,1]")).abelian


def test_twisted_dims():
    assert dims_of(parse("D4^3[1,0,1]")) == (4, 6, 4, 4, 4, 6)
    assert dims_of(parse("A7^2[0,0,1,0,0]")) == (16, 16, 15, 16)


def test_n_regular_inner():
    a2 = SimpleType("A", 2)
    assert n_regular_inner(a2, 7).labels == (5, 1, 1)
    assert n_regular_inner(a2, 3).labels == (1, 1, 1)
    assert equivalent(n_regular_inner(SimpleType("A", 1), 1), parse("A1[1,0]"))


def test_normalize_alcove_moves_negative_coordinates():
    a = affine_diagram(SimpleType("A", 2))
    d = normalize_alcove((-1, 2, 2), a)
    assert all(p >= 0 for p in d.labels)
    assert d.order == 3


@given(st.sampled_from(PAIRS), st.integers(1, 9))
def test_enumerated_are_canonical_and_valid(pair, m):
    t, w = pair
    for d in enumerate_diagrams(t, w, m):
        validate(d)
        assert d.order == m
        assert canonicalize(d).labels == d.labels
        dims = dims_of(d)
        assert sum(dims) == t.dim
        assert all(dims[i] == dims[-i] for i in range(1, m)) or w > 1


@given(st.sampled_from(PAIRS), st.data())
def test_canonicalize_idempotent_and_gamma_invariant(pair, data):
    t, w = pair
    a = affine_diagram(t, w)
    labels = tuple(data.draw(st.lists(st.integers(0, 3), min_size=a.node_count, max_size=a.node_count)))
    assume(any(labels))
    d = KacDiagram(a, labels)
    c = canonicalize(d)
    assert canonicalize(c) == c
    for img in gamma_images(d):
        assert canonicalize(KacDiagram(a, img)) == c
        assert dims_of(KacDiagram(a, img)) == dims_of(d)


@given(st.sampled_from([t for t in all_types(6)]), st.data())
def test_normalize_alcove_preserves_order(t, data):
    a = affine_diagram(t, 1)
    coords = data.draw(st.lists(st.integers(-4, 6), min_size=a.node_count, max_size=a.node_count))
    inv = sum(k * x for k, x in zip(a.marks, coords))
    assume(inv > 0)
    d = normalize_alcove(coords, a)
    g = 0
    for x in coords:
        g = gcd(g, x)
    assert d.order * g == inv
    assert all(p >= 0 for p in d.labels)


@pytest.mark.parametrize("pair", [p for p in PAIRS if p[1] > 1], ids=lambda x: str(x))
def test_basis_weights_match_eigen_table(pair):
    t, w = pair
    assert sorted(basis_weights(t, w)) == sorted(graded_base(t, w).weights)


@given(st.sampled_from(all_types(6)), st.integers(1, 20))
def test_readout_consistent(t, m):
    for d in enumerate_diagrams(t, 1, m)[:5]:
        r = readout(d)
        assert r.dim_g0 == sum(c.dim for c in r.semisimple_part) + r.center_dim


def test_n_regular_order():
    for t in all_types(6):
        h = build_root_system(t).coxeter_number
        for m in range(1, 2 * h + 1):
            assert n_regular_inner(t, m).order == m
