"""Periodic and parabolic contractions as bracket tables."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .chevalley import LieAlgebraTable, centralizer, killing
from .grading import GradedAlgebra
from .kac import KacDiagram
from .linalg import nullspace_mod, rref_mod, solve_in_span_mod
from .scalars import PRIME


@dataclass(frozen=True)
class ContractionKind:
    kind: str
    subset: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.kind not in ("theta_zero", "theta_infinity", "parabolic"):
            raise ValueError(f"unknown contraction kind {self.kind!r}")
        if self.kind != "parabolic" and self.subset:
            raise ValueError("only parabolic contractions take a subset")


def _split(G: GradedAlgebra, keep_low: bool, name: str) -> LieAlgebraTable:
    m, deg = G.m, G.degree
    upper = {}
    for i, j, vec in G.algebra.upper_items():
        if (deg[i] + deg[j] <= m - 1) == keep_low:
            upper[(i, j)] = vec
    return LieAlgebraTable.from_upper(G.algebra.labels, upper, weights=G.algebra.weights, name=name)


def contract_zero(G: GradedAlgebra) -> LieAlgebraTable:
    """[g_i, g_j] kept when i + j <= m - 1, zero otherwise."""
    return _split(G, True, f"{G.diagram}_(0)")


def contract_infinity(G: GradedAlgebra) -> LieAlgebraTable:
    """The complementary bracket [ , ] - [ , ]_(0)."""
    return _split(G, False, f"{G.diagram}_(inf)")


def parabolic_contraction(L: LieAlgebraTable, J, d_labels) -> LieAlgebraTable:
    """p semidirect (n^-)^ab for the Z-grading with labels p_1..p_l.

    p = g(>= 0) keeps its bracket, n^- = g(< 0) becomes abelian and the
    mixed brackets are projected to n^-.
    """
    p = tuple(d_labels)
    if L.weights is None or any(w[0] for w in L.weights):
        raise ValueError("parabolic contraction needs an untwisted Chevalley table")
    if J is not None and set(J) != {i + 1 for i, x in enumerate(p) if x == 0}:
        raise ValueError("J must be the set of zero labels")
    z = [sum(c * x for c, x in zip(w[1:], p)) for w in L.weights]
    upper = {}
    for i, j, vec in L.upper_items():
        a, b = z[i] >= 0, z[j] >= 0
        if a and b:
            upper[(i, j)] = vec
        elif a != b:
            proj = {k: c for k, c in vec.items() if z[k] < 0}
            if proj:
                upper[(i, j)] = proj
    return LieAlgebraTable.from_upper(L.labels, upper, weights=L.weights, name=f"{L.name}_par{p}")


def same_bracket(a: LieAlgebraTable, b: LieAlgebraTable) -> bool:
    if a.labels != b.labels:
        raise ValueError("tables have different bases")
    return a.brackets == b.brackets


def gamma_move_to_zero(d: KacDiagram) -> KacDiagram | None:
    """A Gamma-image of d with p_0 > 0, or None when no mark-1 label is nonzero."""
    if d.labels[0]:
        return d
    a = d.diagram
    for g in a.symmetry_group:
        q = [0] * len(d.labels)
        for i, x in enumerate(d.labels):
            q[g[i]] = x
        if q[0]:
            return KacDiagram(a, tuple(q))
    return None


def verify_centralizer_contraction(G: GradedAlgebra, x: dict | None = None, seed: int = 0,
                                   p: int = PRIME) -> bool:
    """Compare (g^x)_(0) with the stabilizer of kappa(x, .) in g_(0), over F_p.

    x must lie in g_1; a random element of g_1 is used when x is None.
    """
    L = G.algebra
    d = L.dim
    g1 = G.pieces[1 % G.m] if G.m > 1 else list(range(d))
    if x is None:
        rng = random.Random(seed)
        x = {i: rng.randrange(1, p) for i in g1}
    if any(c % p and G.degree[i] != 1 % G.m for i, c in x.items()):
        raise ValueError("x must lie in g_1")
    C0 = contract_zero(G)
    K = killing(L, p)
    xi = [sum(c * K.matrix[i][k] for i, c in x.items()) % p for k in range(d)]
    tab0 = C0.mod_table(p)
    # stabilizer: y with xi([y, z]_(0)) = 0 for all z
    M = [[0] * d for _ in range(d)]
    for (y, z), vec in tab0.items():
        s = sum(c * xi[k] for k, c in vec.items()) % p
        if s:
            M[z][y] = s
    stab = nullspace_mod(M, d, p)
    S1, piv1 = rref_mod(stab, p) if stab else ([], [])
    cent = centralizer(L, x, p)
    vecs = cent._cache["embedding"]
    S2, piv2 = rref_mod([[v.get(k, 0) for k in range(d)] for v in vecs], p) if vecs else ([], [])
    if S1 != S2:
        return False
    # homogeneous basis of g^x, degree by degree
    hom = []
    adx = L.ad_matrix_mod(x, p)
    for deg, idx in enumerate(G.pieces):
        if not idx:
            continue
        sub = [[row[c] for c in idx] for row in adx]
        for v in nullspace_mod(sub, len(idx), p):
            hom.append((deg, {idx[k]: c for k, c in enumerate(v) if c}))
    if len(hom) != len(S1):
        return False
    for a in range(len(hom)):
        for b in range(a + 1, len(hom)):
            (da, va), (db, vb) = hom[a], hom[b]
            lhs = C0.bracket_vectors_mod(va, vb, p)
            rhs = L.bracket_vectors_mod(va, vb, p) if da + db <= G.m - 1 else {}
            if lhs != rhs:
                return False
            if lhs and solve_in_span_mod(S1, piv1, [lhs.get(k, 0) for k in range(d)], p) is None:
                return False
    return True
