"""Kac diagrams: parsing, validation, canonical forms, readout and enumeration."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .rootsystem import (
    AffineDiagram,
    SimpleType,
    affine_diagram,
    apply_root_permutation,
    build_root_system,
    fixed_roots_odd,
    identify_components,
    parse_affine,
    simple_root_permutation,
)


class AllZero(ValueError):
    pass


class NonCoprime(ValueError):
    pass


@dataclass(frozen=True)
class KacDiagram:
    diagram: AffineDiagram
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(p) for p in self.labels))
        if len(self.labels) != self.diagram.node_count:
            raise ValueError(
                f"{self.diagram.name} needs {self.diagram.node_count} labels, got {len(self.labels)}"
            )
        if any(p < 0 for p in self.labels):
            raise ValueError("labels must be nonnegative")

    @property
    def order(self) -> int:
        return self.diagram.order_of(self.labels)

    @property
    def twist(self) -> int:
        return self.diagram.twist

    @property
    def base(self) -> SimpleType:
        return self.diagram.base

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, p in enumerate(self.labels) if p)

    def __str__(self):
        return f"{self.diagram.name}[{','.join(map(str, self.labels))}]"


_DIAGRAM_RE = re.compile(r"\s*([A-Ga-g]\d+(?:\s*\^\s*\d+)?)\s*\[([^\]]*)\]\s*")


def parse(text: str) -> KacDiagram:
    """Parse TYPE['^'TWIST]'[' labels ']', e.g. "G2[0,1,1]" or "D4^3[1,0,1]"."""
    m = _DIAGRAM_RE.fullmatch(text)
    if not m:
        pos = _first_bad_position(text)
        raise ValueError(f"cannot parse diagram {text!r} (at position {pos})")
    a = parse_affine(m.group(1))
    body = m.group(2).strip()
    labels = []
    for tok in body.split(",") if body else []:
        tok = tok.strip()
        if not tok.isdigit():
            raise ValueError(f"bad label {tok!r} in {text!r}")
        labels.append(int(tok))
    return KacDiagram(a, tuple(labels))


def _first_bad_position(text: str) -> int:
    m = re.match(r"\s*[A-Ga-g]\d*(\s*\^\s*\d+)?\s*\[?[\d,\s]*\]?", text)
    return m.end() if m else 0


def validate(d: KacDiagram) -> KacDiagram:
    if not any(d.labels):
        raise AllZero(f"{d}: all labels are zero")
    g = 0
    for p in d.labels:
        g = gcd(g, p)
    if g != 1:
        raise NonCoprime(f"{d}: labels have common divisor {g}")
    return d


def gamma_images(d: KacDiagram) -> list[tuple[int, ...]]:
    out = []
    for g in d.diagram.symmetry_group:
        q = [0] * len(d.labels)
        for i, p in enumerate(d.labels):
            q[g[i]] = p
        out.append(tuple(q))
    return out


def canonicalize(d: KacDiagram) -> KacDiagram:
    return KacDiagram(d.diagram, min(gamma_images(d)))


def equivalent(a: KacDiagram, b: KacDiagram) -> bool:
    return a.diagram == b.diagram and canonicalize(a).labels == canonicalize(b).labels


def collapse(d: KacDiagram) -> KacDiagram:
    return KacDiagram(d.diagram, tuple(min(p, 1) for p in d.labels))


MAX_ALCOVE_STEPS = 10**6


def normalize_alcove(coords, a: AffineDiagram) -> KacDiagram:
    """Move integer Kac coordinates into the fundamental alcove by reflections."""
    c = [int(x) for x in coords]
    if len(c) != a.node_count:
        raise ValueError("coordinate vector has the wrong length")
    A = a.cartan
    inv = sum(k * x for k, x in zip(a.marks, c))
    if inv <= 0:
        raise ValueError("sum of marks times coordinates must be positive")
    for _ in range(MAX_ALCOVE_STEPS):
        neg = next((i for i, x in enumerate(c) if x < 0), None)
        if neg is None:
            break
        ci = c[neg]
        c = [x - A[neg][j] * ci for j, x in enumerate(c)]
        if sum(k * x for k, x in zip(a.marks, c)) != inv:
            raise AssertionError("alcove move changed the order")
    else:
        raise RuntimeError("alcove normalization did not terminate (Cartan matrix bug?)")
    g = 0
    for x in c:
        g = gcd(g, x)
    return KacDiagram(a, tuple(x // g for x in c))


def n_regular_inner(t: SimpleType, m: int) -> KacDiagram:
    """Kac diagram of the inner N-regular automorphism of order m.

    Returned as the alcove-normalized representative, so for m >= h the
    labels are (m + 1 - h, 1, ..., 1); use ``canonicalize`` to compare.
    """
    if m < 1:
        raise ValueError("order must be positive")
    a = affine_diagram(t, 1)
    h = build_root_system(t).coxeter_number
    d = normalize_alcove((m - (h - 1),) + (1,) * t.rank, a)
    if d.order != m:
        raise AssertionError("N-regular diagram has the wrong order")
    return validate(d)


def _label_vectors(marks, budget):
    n = len(marks)
    out = []

    def rec(i, left, acc):
        if i == n - 1:
            if left % marks[i] == 0:
                out.append(tuple(acc + [left // marks[i]]))
            return
        for p in range(left // marks[i] + 1):
            rec(i + 1, left - p * marks[i], acc + [p])

    rec(0, budget, [])
    return out


@lru_cache(maxsize=None)
def _enumerate(t: SimpleType, twist: int, m: int) -> tuple[KacDiagram, ...]:
    a = affine_diagram(t, twist)
    if m % twist:
        return ()
    out = []
    for labels in _label_vectors(a.marks, m // twist):
        g = 0
        for p in labels:
            g = gcd(g, p)
        if g != 1:
            continue
        d = KacDiagram(a, labels)
        if min(gamma_images(d)) == labels:
            out.append(d)
    return tuple(sorted(out, key=lambda d: d.labels))


def enumerate_diagrams(t: SimpleType, twist: int, m: int) -> list[KacDiagram]:
    """All canonical valid diagrams of order exactly m, sorted by labels."""
    if m < 1:
        raise ValueError("order must be positive")
    return list(_enumerate(t, twist, m))


# -- readout ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def basis_weights(t: SimpleType, twist: int = 1) -> tuple[tuple[int, ...], ...]:
    """Weights (j, mu) of a sigma-eigenbasis of g, computed from roots alone.

    j is the sigma-residue and mu the restricted root.  The order matches
    no particular table; only the multiset is meaningful.
    """
    rs = build_root_system(t)
    a = affine_diagram(t, twist)
    l = t.rank
    if twist == 1:
        return tuple((0,) + r for r in rs.roots) + ((0,) + (0,) * l,) * l
    perm = simple_root_permutation(t, twist)
    odd = fixed_roots_odd(t, twist)
    out = []
    zero = (0,) * len(a.orbits)
    seen = set()
    for g in rs.roots:
        if g in seen:
            continue
        orbit = [g]
        img = apply_root_permutation(perm, g)
        while img != g:
            orbit.append(img)
            img = apply_root_permutation(perm, img)
        seen.update(orbit)
        mu = a.restrict(g)
        if len(orbit) == 1:
            out.append((twist // 2 if odd else 0,) + mu)
        else:
            out += [(j,) + mu for j in range(twist)]
    for orb in a.orbits:
        if len(orb) == 1:
            out.append((0,) + zero)
        else:
            out += [(j,) + zero for j in range(twist)]
    return tuple(out)


def weight_degree(w, d: KacDiagram, unreduced: bool = False) -> int:
    """Degree of a basis vector of weight w = (j, mu) for the automorphism d."""
    p = d.labels
    j, mu = w[0], w[1:]
    if d.twist == 1:
        val = sum(c * x for c, x in zip(mu, p[1:]))
    else:
        per = d.order // d.twist
        val = j * per + sum(c * x for c, x in zip(mu, p[1:]))
    return val if unreduced else val % d.order


def dims_of(d: KacDiagram) -> tuple[int, ...]:
    m = d.order
    out = [0] * m
    for w in basis_weights(d.base, d.twist):
        out[weight_degree(w, d)] += 1
    return tuple(out)


@dataclass(frozen=True)
class ReductiveReadout:
    semisimple_part: tuple[SimpleType, ...]
    center_dim: int
    g1_lowest_weight_nodes: tuple[int, ...]
    dim_g0: int
    dim_g1: int

    @property
    def semisimple(self) -> bool:
        return self.center_dim == 0

    @property
    def abelian(self) -> bool:
        return not self.semisimple_part


def readout(d: KacDiagram) -> ReductiveReadout:
    A = d.diagram.cartan
    zero = [i for i, p in enumerate(d.labels) if p == 0]
    sub = [[A[i][j] for j in zero] for i in zero]
    comps = tuple(identify_components(sub)) if zero else ()
    center = sum(1 for p in d.labels if p) - 1
    dims = dims_of(d)
    ss_dim = sum(c.dim for c in comps)
    if ss_dim + center != dims[0]:
        raise AssertionError(f"{d}: readout dim {ss_dim}+{center} disagrees with grading {dims[0]}")
    ones = tuple(i for i, p in enumerate(d.labels) if p == 1)
    return ReductiveReadout(comps, center, ones, dims[0], dims[1 % len(dims)] if len(dims) > 1 else dims[0])
