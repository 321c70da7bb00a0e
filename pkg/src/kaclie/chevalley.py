"""Chevalley bases, diagram automorphisms, sigma-eigenbases, Killing form, centralizers.

A Lie algebra is stored as a ``LieAlgebraTable``: basis labels plus a sparse
map (i, j) -> {k: c} with [x_i, x_j] = sum_k c x_k, kept for both orders.
Chevalley tables have integer constants.  Tables in a sigma-eigenbasis have
constants in Z (twist 2) or Z[omega] (twist 3).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np
import scipy.sparse as sp

from .linalg import nullspace_exact, nullspace_mod, rref_exact, rref_mod, solve_in_span_exact, solve_in_span_mod
from .rootsystem import (
    AffineDiagram,
    RootSystem,
    SimpleType,
    affine_diagram,
    apply_root_permutation,
    build_root_system,
    simple_root_permutation,
)
from .scalars import PRIME, Eisenstein, root_of_unity, simplify, to_mod


@dataclass(eq=False)
class LieAlgebraTable:
    labels: tuple[str, ...]
    brackets: dict[tuple[int, int], dict[int, object]]
    weights: tuple[tuple[int, ...], ...] | None = None
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_upper(cls, labels, upper, **kw) -> "LieAlgebraTable":
        """Build from brackets given for i < j (or any one order)."""
        br: dict[tuple[int, int], dict[int, object]] = {}
        for (i, j), vec in upper.items():
            vec = {k: simplify(c) for k, c in vec.items() if c}
            if not vec or i == j:
                continue
            br[(i, j)] = vec
            br[(j, i)] = {k: -c for k, c in vec.items()}
        return cls(tuple(labels), br, **kw)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket(self, i: int, j: int) -> dict[int, object]:
        return self.brackets.get((i, j), {})

    def bracket_vectors(self, x: dict, y: dict) -> dict:
        out: dict[int, object] = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                if not b:
                    continue
                vec = self.brackets.get((i, j))
                if vec:
                    ab = a * b
                    for k, c in vec.items():
                        out[k] = out.get(k, 0) + ab * c
        return {k: simplify(c) for k, c in out.items() if c}

    def upper_items(self):
        for (i, j), vec in self.brackets.items():
            if i < j:
                yield i, j, vec

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for _, _, v in self.upper_items() for c in v.values())

    def is_abelian(self) -> bool:
        return not self.brackets

    def fingerprint(self) -> str:
        if "fp" not in self._cache:
            h = hashlib.sha256()
            h.update(repr(self.labels).encode())
            for i, j, vec in sorted(self.upper_items(), key=lambda t: (t[0], t[1])):
                h.update(repr((i, j, sorted((k, repr(c)) for k, c in vec.items()))).encode())
            self._cache["fp"] = h.hexdigest()
        return self._cache["fp"]

    def mod_table(self, p: int = PRIME) -> dict[tuple[int, int], dict[int, int]]:
        key = ("mod", p)
        if key not in self._cache:
            self._cache[key] = {
                ij: {k: to_mod(c, p) for k, c in vec.items()} for ij, vec in self.brackets.items()
            }
        return self._cache[key]

    def bracket_vectors_mod(self, x: dict, y: dict, p: int = PRIME) -> dict:
        tab = self.mod_table(p)
        out: dict[int, int] = {}
        for i, a in x.items():
            if not a % p:
                continue
            for j, b in y.items():
                vec = tab.get((i, j))
                if vec and b % p:
                    ab = a * b
                    for k, c in vec.items():
                        out[k] = (out.get(k, 0) + ab * c) % p
        return {k: c for k, c in out.items() if c}

    def ad_matrix(self, x: dict) -> list[list]:
        """Matrix of ad x (rows = output coordinates) with exact entries."""
        d = self.dim
        M: list[list] = [[0] * d for _ in range(d)]
        for i, a in x.items():
            if not a:
                continue
            for l in range(d):
                vec = self.brackets.get((i, l))
                if vec:
                    for k, c in vec.items():
                        M[k][l] = simplify(M[k][l] + a * c)
        return M

    def ad_matrix_mod(self, x: dict, p: int = PRIME) -> list[list[int]]:
        d = self.dim
        tab = self.mod_table(p)
        M = [[0] * d for _ in range(d)]
        for i, a in x.items():
            a %= p
            if not a:
                continue
            for l in range(d):
                vec = tab.get((i, l))
                if vec:
                    for k, c in vec.items():
                        M[k][l] = (M[k][l] + a * c) % p
        return M


def root_label(g) -> str:
    return "e[" + ",".join(str(c) for c in g) + "]"


# -- Chevalley basis -----------------------------------------------------------

def _structure_constants(rs: RootSystem) -> dict[tuple, int]:
    """N_{a,b} for all pairs of roots with a+b a root (extraspecial convention)."""
    pos = list(rs.positive_roots)
    order = {r: k for k, r in enumerate(pos)}
    posset = set(pos)
    norm = {r: rs.inner(r, r) for r in pos}

    def neg(x):
        return tuple(-c for c in x)

    def add(x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sqlen(x):
        return norm[x] if x in posset else norm[neg(x)]

    def is_root(x):
        return x in posset or neg(x) in posset

    special: dict[tuple, int] = {}

    def N(x, y) -> int:
        s = add(x, y)
        if not any(s) or not is_root(s):
            return 0
        xp, yp = x in posset, y in posset
        if xp and yp:
            if order[x] < order[y]:
                return special[(x, y)]
            return -special[(y, x)]
        if not xp and not yp:
            return -N(neg(x), neg(y))
        t = neg(s)
        tp = t in posset
        if (y in posset) == tp:
            num = sqlen(t) * N(y, t)
            den = sqlen(x)
        else:
            num = sqlen(t) * N(t, x)
            den = sqlen(y)
        if num % den:
            raise AssertionError("non-integral structure constant")
        return num // den

    def string_p(r, s):
        p, cur = 0, s
        while True:
            cur = tuple(a - b for a, b in zip(cur, r))
            if is_root(cur):
                p += 1
            else:
                return p

    for xi in pos:
        if sum(xi) < 2:
            continue
        pairs = []
        for a in pos:
            b = tuple(x - y for x, y in zip(xi, a))
            if b in posset and order[a] < order[b]:
                pairs.append((a, b))
        pairs.sort(key=lambda ab: order[ab[0]])
        r, s = pairs[0]
        nrs = string_p(r, s) + 1
        special[(r, s)] = nrs
        for a, b in pairs[1:]:
            val = Fraction(0)
            sa, ra = add(s, neg(a)), add(r, neg(a))
            if any(sa) and is_root(sa):
                val += Fraction(N(s, neg(a)) * N(r, neg(b)), sqlen(sa))
            if any(ra) and is_root(ra):
                val += Fraction(N(neg(a), r) * N(s, neg(b)), sqlen(ra))
            val = val * norm[xi] / nrs
            if val.denominator != 1:
                raise AssertionError("non-integral special structure constant")
            special[(a, b)] = int(val)

    out = {}
    roots = rs.roots
    for x in roots:
        for y in roots:
            n = N(x, y)
            if n:
                out[(x, y)] = n
    return out


@lru_cache(maxsize=None)
def build_chevalley(rs: RootSystem) -> LieAlgebraTable:
    roots = list(rs.roots)
    l = rs.rank
    idx = {r: k for k, r in enumerate(roots)}
    nr = len(roots)
    labels = [root_label(r) for r in roots] + [f"h{i + 1}" for i in range(l)]
    upper: dict[tuple[int, int], dict[int, int]] = {}
    consts = _structure_constants(rs)
    for (x, y), n in consts.items():
        i, j = idx[x], idx[y]
        if i < j:
            upper[(i, j)] = {idx[tuple(a + b for a, b in zip(x, y))]: n}
    for g in rs.positive_roots:
        i, j = idx[g], idx[tuple(-c for c in g)]
        gg = rs.inner(g, g)
        h = {}
        for k, c in enumerate(g):
            if c:
                q = Fraction(c * rs.gram[k][k], gg)
                if q.denominator != 1:
                    raise AssertionError("coroot not integral in simple coroots")
                h[nr + k] = int(q)
        upper[(i, j)] = h
    for k in range(l):
        for g in roots:
            c = rs.pairing(g, k)
            if c:
                upper[(idx[g], nr + k)] = {idx[g]: -c}
    weights = tuple((0,) + tuple(r) for r in roots) + tuple((0,) + (0,) * l for _ in range(l))
    return LieAlgebraTable.from_upper(labels, upper, weights=weights, name=str(rs.type))


def chevalley_of(t: SimpleType) -> LieAlgebraTable:
    return build_chevalley(build_root_system(t))


# -- Jacobi identity -------------------------------------------------------------

def jacobi_holds(L: LieAlgebraTable) -> bool:
    """Exhaustive Jacobi check on all basis triples."""
    if L.is_integral():
        return _jacobi_sparse(L)
    return _jacobi_exact(L)


def _jacobi_sparse(L: LieAlgebraTable) -> bool:
    d = L.dim
    # S stacks ad_b: S[b*d + n, l] = C[b, l, n]
    rows, cols, vals = [], [], []
    ads = []
    for b in range(d):
        r, c, v = [], [], []
        for l in range(d):
            for n, x in L.bracket(b, l).items():
                r.append(n)
                c.append(l)
                v.append(x)
        ads.append(sp.csr_matrix((np.array(v, dtype=np.int64), (r, c)), shape=(d, d)))
        rows += [b * d + n for n in r]
        cols += c
        vals += v
    S = sp.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)), shape=(d * d, d))
    I = sp.identity(d, dtype=np.int64, format="csr")
    for a in range(d):
        A = ads[a]
        R = sp.kron(I, A, format="csr") @ S - S @ A - sp.kron(A.T, I, format="csr") @ S
        if R.count_nonzero():
            return False
    return True


def _jacobi_exact(L: LieAlgebraTable) -> bool:
    d = L.dim
    for a, b, c in combinations(range(d), 3):
        tot: dict[int, object] = {}
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            inner = L.bracket(y, z)
            if not inner:
                continue
            for k, v in L.bracket_vectors({x: 1}, inner).items():
                tot[k] = tot.get(k, 0) + v
        if any(simplify(v) for v in tot.values()):
            return False
    return True


# -- automorphisms -----------------------------------------------------------------

@dataclass(frozen=True)
class Automorphism:
    """A signed permutation of the basis: x_i -> signs[i] * x_{perm[i]}."""

    table: LieAlgebraTable
    perm: tuple[int, ...]
    signs: tuple[int, ...]
    order: int

    def apply(self, x: dict) -> dict:
        return {self.perm[i]: self.signs[i] * c for i, c in x.items()}

    def matrix(self) -> np.ndarray:
        d = len(self.perm)
        M = np.zeros((d, d), dtype=np.int64)
        for i in range(d):
            M[self.perm[i], i] = self.signs[i]
        return M

    def power_is_identity(self, k: int) -> bool:
        d = len(self.perm)
        for i in range(d):
            j, s = i, 1
            for _ in range(k):
                s *= self.signs[j]
                j = self.perm[j]
            if j != i or s != 1:
                return False
        return True


def diagram_automorphism(L: LieAlgebraTable, rs: RootSystem, node_permutation) -> Automorphism:
    """Extend a Dynkin symmetry (0-based permutation of simple roots) to L."""
    perm_s = tuple(node_permutation)
    l = rs.rank
    A = rs.cartan
    if sorted(perm_s) != list(range(l)) or any(
        A[perm_s[i]][perm_s[j]] != A[i][j] for i in range(l) for j in range(l)
    ):
        raise ValueError("permutation is not a Dynkin diagram symmetry")
    roots = list(rs.roots)
    idx = {r: k for k, r in enumerate(roots)}
    nr = len(roots)
    d = L.dim
    perm = [0] * d
    signs = [0] * d
    for k in range(l):
        perm[nr + k] = nr + perm_s[k]
        signs[nr + k] = 1
    for sign_root in (1, -1):
        for g in rs.positive_roots:
            gg = tuple(sign_root * c for c in g)
            img = apply_root_permutation(perm_s, gg)
            if sum(g) == 1:
                perm[idx[gg]] = idx[img]
                signs[idx[gg]] = 1
                continue
            # e_g = [e_{a_i}, e_b] / N with b of smaller height
            for i in range(l):
                b = tuple(c - sign_root * int(k == i) for k, c in enumerate(gg))
                if b in idx:
                    break
            ai = tuple(sign_root * int(k == i) for k in range(l))
            n = L.bracket(idx[ai], idx[b])[idx[gg]]
            nimg = L.bracket(idx[apply_root_permutation(perm_s, ai)], idx[apply_root_permutation(perm_s, b)])
            s = Fraction(signs[idx[b]] * nimg[idx[img]], n)
            if s not in (1, -1):
                raise AssertionError("extension of sigma is inconsistent")
            perm[idx[gg]] = idx[img]
            signs[idx[gg]] = int(s)
    order = 1
    cur = list(perm_s)
    while cur != list(range(l)):
        cur = [perm_s[c] for c in cur]
        order += 1
    sigma = Automorphism(L, tuple(perm), tuple(signs), order)
    if not preserves_brackets(sigma):
        raise AssertionError("sigma is not bracket preserving (structure constant sign bug)")
    if not sigma.power_is_identity(order):
        raise AssertionError("sigma does not have the declared order")
    return sigma


def preserves_brackets(sigma: Automorphism) -> bool:
    L = sigma.table
    for (i, j), vec in L.brackets.items():
        lhs = sigma.apply(vec)
        rhs = {k: sigma.signs[i] * sigma.signs[j] * c for k, c in L.bracket(sigma.perm[i], sigma.perm[j]).items()}
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class EigenComponent:
    vector: dict
    residue: int
    orbit: tuple[int, ...]


def sigma_decomposition(L: LieAlgebraTable, sigma: Automorphism) -> list[list[EigenComponent]]:
    """Eigenbases of g_0^(sigma), ..., g_{t-1}^(sigma) (residue j: sigma v = zeta_t^j v)."""
    t = sigma.order
    if not sigma.power_is_identity(t):
        raise ValueError("sigma is not of the declared order")
    seen: set[int] = set()
    pieces: list[list[EigenComponent]] = [[] for _ in range(t)]
    for x in range(L.dim):
        if x in seen:
            continue
        orbit, coef = [x], [1]
        y, s = sigma.perm[x], sigma.signs[x]
        while y != x:
            orbit.append(y)
            coef.append(s)
            s *= sigma.signs[y]
            y = sigma.perm[y]
        seen.update(orbit)
        if len(orbit) == 1:
            if s == 1:
                pieces[0].append(EigenComponent({x: 1}, 0, (x,)))
            else:
                if t % 2:
                    raise AssertionError("sign -1 on a fixed vector for odd order")
                pieces[t // 2].append(EigenComponent({x: 1}, t // 2, (x,)))
            continue
        if len(orbit) != t or s != 1:
            raise AssertionError("unexpected sigma-orbit structure")
        for j in range(t):
            # v_j = sum_k zeta^{-jk} sigma^k(x)
            vec = {}
            for k, (y, c) in enumerate(zip(orbit, coef)):
                vec[y] = simplify(root_of_unity(t, -j * k) * c)
            pieces[j].append(EigenComponent(vec, j, tuple(orbit)))
    return pieces


def eigen_table(L: LieAlgebraTable, sigma: Automorphism, diagram: AffineDiagram) -> LieAlgebraTable:
    """The bracket table of L in a sigma-eigenbasis.

    Basis weights are (j, restricted weight) with j the sigma-residue.
    Coordinates are read off at the first orbit element, whose coefficient
    in every eigenvector is 1.
    """
    pieces = sigma_decomposition(L, sigma)
    comps = [c for piece in pieces for c in piece]
    key = {(y, c.residue): n for n, c in enumerate(comps) for y in c.orbit}
    labels = []
    weights = []
    for c in comps:
        lab = L.labels[c.orbit[0]]
        labels.append(lab if len(c.orbit) == 1 else f"{lab}~{c.residue}")
        w = L.weights[c.orbit[0]][1:]
        weights.append((c.residue,) + diagram.restrict(w))
    t = sigma.order
    upper: dict[tuple[int, int], dict[int, object]] = {}
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            r = L.bracket_vectors(comps[a].vector, comps[b].vector)
            if not r:
                continue
            j = (comps[a].residue + comps[b].residue) % t
            out = {}
            covered: dict[int, object] = {}
            for y, v in r.items():
                if y in covered:
                    continue
                # locate the orbit of y and its eigencomponent of residue j
                n = key[(y, j)]
                lead = comps[n].orbit[0]
                coeff = r.get(lead, 0)
                out[n] = coeff
                for z, c in comps[n].vector.items():
                    covered[z] = coeff * c
            for y in set(r) | set(covered):
                if simplify(r.get(y, 0) - covered.get(y, 0)):
                    raise AssertionError("bracket leaves the expected eigenspace")
            upper[(a, b)] = out
    return LieAlgebraTable.from_upper(labels, upper, weights=tuple(weights),
                                      name=f"{L.name}^{t}")


@lru_cache(maxsize=None)
def graded_base(t: SimpleType, twist: int = 1) -> LieAlgebraTable:
    """The table that carries the gradings of the given twist.

    For twist 1 this is the Chevalley table; otherwise it is the table in
    the eigenbasis of the diagram automorphism of that order.
    """
    rs = build_root_system(t)
    L = build_chevalley(rs)
    if twist == 1:
        return L
    a = affine_diagram(t, twist)
    sigma = diagram_automorphism(L, rs, simple_root_permutation(t, twist))
    return eigen_table(L, sigma, a)


@lru_cache(maxsize=None)
def outer_automorphism(t: SimpleType, twist: int) -> Automorphism:
    rs = build_root_system(t)
    return diagram_automorphism(build_chevalley(rs), rs, simple_root_permutation(t, twist))


# -- Killing form and centralizers -----------------------------------------------------

@dataclass(frozen=True)
class KillingPairing:
    matrix: tuple[tuple, ...]

    def __call__(self, x: dict, y: dict):
        tot = 0
        for i, a in x.items():
            row = self.matrix[i]
            for j, b in y.items():
                if row[j]:
                    tot += a * b * row[j]
        return simplify(tot)


def killing(L: LieAlgebraTable, p: int | None = None) -> KillingPairing:
    """kappa(x_i, x_j) = tr(ad x_i ad x_j); exact unless a prime p is given."""
    d = L.dim
    tab = L.brackets if p is None else L.mod_table(p)
    # P[(k, l)] = {j: C[j, k, l]}
    P: dict[tuple[int, int], dict[int, object]] = {}
    for (j, k), vec in tab.items():
        for l, c in vec.items():
            P.setdefault((k, l), {})[j] = c
    K = [[0] * d for _ in range(d)]
    for (i, l), vec in tab.items():
        for k, c in vec.items():
            for j, c2 in P.get((k, l), {}).items():
                K[i][j] += c * c2
    if p is None:
        K = [[simplify(x) for x in row] for row in K]
        if len(rref_exact(K)[1]) != d:
            raise ValueError("Killing form is degenerate")
    else:
        K = [[x % p for x in row] for row in K]
    return KillingPairing(tuple(tuple(r) for r in K))


def centralizer(L: LieAlgebraTable, x: dict, p: int | None = None) -> LieAlgebraTable:
    """ker(ad x) with the induced bracket (exact, or over F_p if p is given)."""
    d = L.dim
    if p is None:
        M = L.ad_matrix(x)
        basis = nullspace_exact(M, d)
        R, piv = rref_exact(basis) if basis else ([], [])
        solve = solve_in_span_exact
    else:
        M = L.ad_matrix_mod(x, p)
        basis = nullspace_mod(M, d, p)
        R, piv = rref_mod(basis, p) if basis else ([], [])
        solve = lambda B, pv, v: solve_in_span_mod(B, pv, v, p)  # noqa: E731
    vecs = [dict((k, c) for k, c in enumerate(row) if c) for row in R]
    upper = {}
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            if p is None:
                r = L.bracket_vectors(vecs[a], vecs[b])
            else:
                r = L.bracket_vectors_mod(vecs[a], vecs[b], p)
            if not r:
                continue
            full = [r.get(k, 0) for k in range(d)]
            coords = solve(R, piv, full)
            if coords is None:
                raise AssertionError("centralizer is not closed under the bracket")
            upper[(a, b)] = {k: c for k, c in enumerate(coords) if c}
    labels = [f"c{n + 1}" for n in range(len(vecs))]
    C = LieAlgebraTable.from_upper(labels, upper, name="centralizer")
    C._cache["embedding"] = vecs
    return C
