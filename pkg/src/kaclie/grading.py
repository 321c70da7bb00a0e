"""Z_m-gradings of g attached to Kac diagrams.

Every basis vector of the grading table carries a weight (j, mu): its
sigma-residue j and its (restricted) root mu.  For a diagram with labels
p and order m the degree is j*m/t + sum_i mu_i p_i mod m.  For inner
diagrams j = 0 and this is the Z-grading d(gamma) glued modulo m.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chevalley import Automorphism, LieAlgebraTable, eigen_table, graded_base
from .kac import KacDiagram, weight_degree


@dataclass(eq=False)
class GradedAlgebra:
    algebra: LieAlgebraTable
    m: int
    degree: tuple[int, ...]
    zdegree: tuple[int, ...]
    diagram: KacDiagram

    @property
    def pieces(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.m)]
        for i, d in enumerate(self.degree):
            out[d].append(i)
        return out

    @property
    def dim(self) -> int:
        return self.algebra.dim


def _grade(L: LieAlgebraTable, d: KacDiagram) -> GradedAlgebra:
    if L.weights is None:
        raise ValueError("table carries no weights")
    z = tuple(weight_degree(w, d, unreduced=True) for w in L.weights)
    m = d.order
    return GradedAlgebra(L, m, tuple(x % m for x in z), z, d)


def inner_grading(L: LieAlgebraTable, d: KacDiagram) -> GradedAlgebra:
    if d.twist != 1:
        raise ValueError("inner_grading needs an inner diagram")
    if L.name != str(d.base) or any(w[0] for w in L.weights or ()):
        raise ValueError(f"table {L.name!r} does not match diagram type {d.base}")
    return _grade(L, d)


def outer_grading(L: LieAlgebraTable, sigma: Automorphism, d: KacDiagram) -> GradedAlgebra:
    """Grading of the outer automorphism d, in the sigma-eigenbasis of L."""
    if d.twist == 1 or sigma.order != d.twist:
        raise ValueError("sigma and diagram do not match")
    if L.name != str(d.base):
        raise ValueError(f"table {L.name!r} does not match diagram type {d.base}")
    E = graded_base(d.base, d.twist)
    if E.name != f"{L.name}^{d.twist}" or sigma.table is not L:
        E = eigen_table(L, sigma, d.diagram)
    return _grade(E, d)


@lru_cache(maxsize=4096)
def grading_of(d: KacDiagram) -> GradedAlgebra:
    """Grading for d on the cached base table of its type and twist."""
    return _grade(graded_base(d.base, d.twist), d)


def dimension_vector(G: GradedAlgebra) -> tuple[int, ...]:
    out = [0] * G.m
    for x in G.degree:
        out[x] += 1
    return tuple(out)


def additive(G: GradedAlgebra) -> bool:
    """Degree is additive mod m on every nonzero bracket of basis vectors."""
    m = G.m
    for i, j, vec in G.algebra.upper_items():
        target = (G.degree[i] + G.degree[j]) % m
        if any(G.degree[k] != target for k in vec):
            return False
    return True


def outer_bounds_hold(G: GradedAlgebra) -> bool:
    """Bounds j*p_0 <= d_j <= m on the weights of g_j^(sigma), and
    0 <= d_0 <= m on the positive roots of g^sigma."""
    d = G.diagram
    p0, m = d.labels[0], G.m
    for w, z in zip(G.algebra.weights, G.zdegree):
        j, mu = w[0], w[1:]
        if j == 0:
            if any(mu) and all(c >= 0 for c in mu) and not 0 <= z <= m:
                return False
        elif not j * p0 <= z <= m:
            return False
    return True
