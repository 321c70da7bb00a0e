"""Matrix realizations of periodic automorphisms of classical Lie algebras.

A realization is a basis of g inside gl_N made of theta-eigenvectors, each
tagged with its degree mod m.  For inner automorphisms theta is conjugation
by diag(zeta^{v_a}); the v_a are read off the Kac labels through the usual
epsilon-coordinates and are kept unreduced so the Z-grading is available
too.  Outer automorphisms of sl_N and so_2l are realized through an explicit
sigma-eigenbasis.

Invariants (characteristic polynomial coefficients and the Pfaffian) are
evaluated over a 25-bit prime with batched int64 arithmetic; degrees in a
scaling parameter are obtained by interpolation.  A coefficient that is
nonzero mod p is nonzero over Q, so reported degrees never exceed the true
ones; the converse fails only when a nonzero polynomial vanishes at the
random point, which has probability at most deg/p per trial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .datum import D_theta
from .index import rng_for
from .kac import KacDiagram, dims_of
from .linalg import rank_mod
from .rootsystem import build_root_system

EVAL_PRIME = 33554393  # largest prime below 2^25; keeps int64 products exact


@dataclass(frozen=True)
class MatrixRealization:
    diagram: KacDiagram
    family: str  # "sl", "so" or "sp"
    N: int
    form: str  # "none", "symmetric" or "alternating"
    pairing: tuple[int, ...]  # a -> a-bar, the partner of e_a under the form
    form_values: tuple[int, ...]  # F(e_a, e_{a-bar})
    v: tuple[Fraction, ...]  # unreduced weights of the basis of V
    half: bool  # A^m = -I: the eigenvalues of A are zeta^{v_a} with half-odd v_a
    basis: tuple[tuple[tuple[int, int, int], ...], ...]  # sparse (row, col, coeff)
    degrees: tuple[int, ...]
    zdegrees: tuple[int, ...] | None  # Z-degrees, inner only

    @property
    def m(self) -> int:
        return self.diagram.order

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def v_degrees(self) -> tuple[int, ...]:
        shift = Fraction(1, 2) if self.half else 0
        return tuple(int(x - shift) % self.m for x in self.v)

    @property
    def form_matrix(self) -> np.ndarray | None:
        if self.form == "none":
            return None
        F = np.zeros((self.N, self.N), dtype=np.int64)
        for a, b in enumerate(self.pairing):
            F[a, b] = self.form_values[a]
        return F

    def dense_basis(self) -> np.ndarray:
        B = np.zeros((self.dim, self.N, self.N), dtype=np.int64)
        for k, ent in enumerate(self.basis):
            for i, j, c in ent:
                B[k, i, j] += c
        return B

    def dimension_vector(self) -> tuple[int, ...]:
        out = [0] * self.m
        for d in self.degrees:
            out[d] += 1
        return tuple(out)


def _chain(labels, last: Fraction, count: int) -> list[Fraction]:
    """v_count = last, v_k = v_{k+1} + p_k going down to v_1."""
    v = [Fraction(0)] * count
    v[-1] = Fraction(last)
    for k in range(count - 2, -1, -1):
        v[k] = v[k + 1] + labels[k + 1]
    return v


def _form_basis(N, pairing, f, v, m):
    """theta-eigenbasis of {X : X^T F + F X = 0} for a monomial form F."""
    out = []
    for a in range(N):
        for b in range(N):
            pa, pb = pairing[a], pairing[b]
            if a == b:
                if a < pa:
                    out.append((((a, a, 1), (pa, pa, -1)), v[a] - v[a]))
                continue
            partner = (pb, pa)
            if partner == (a, b):
                if f[a] != f[b]:
                    out.append((((a, b, 1),), v[a] - v[b]))
            elif (a, b) < partner:
                out.append((((a, b, f[b]), (pb, pa, -f[a])), v[a] - v[b]))
    return out


def _inner(d: KacDiagram):
    t = d.base
    p = d.labels
    l = t.rank
    if t.family == "A":
        N = l + 1
        v = [Fraction(0)]
        for i in range(1, N):
            v.append(v[-1] - p[i])
        basis = []
        for a in range(N):
            for b in range(N):
                if a != b:
                    basis.append((((a, b, 1),), v[a] - v[b]))
        for a in range(N - 1):
            basis.append((((a, a, 1), (a + 1, a + 1, -1)), Fraction(0)))
        return "sl", N, "none", tuple(range(N)), (0,) * N, v, basis
    if t.family == "B":
        N = 2 * l + 1
        first = _chain(p, p[l], l)
        v = first + [Fraction(0)] + [-x for x in reversed(first)]
        f = [1] * N
        fam, form = "so", "symmetric"
    elif t.family == "C":
        N = 2 * l
        first = _chain(p, Fraction(p[l], 2), l)
        v = first + [-x for x in reversed(first)]
        f = [1] * l + [-1] * l
        fam, form = "sp", "alternating"
    elif t.family == "D":
        N = 2 * l
        first = _chain(p, Fraction(p[l] - p[l - 1], 2), l)
        first[l - 2] = Fraction(p[l - 1] + p[l], 2)
        for k in range(l - 3, -1, -1):
            first[k] = first[k + 1] + p[k + 1]
        v = first + [-x for x in reversed(first)]
        f = [1] * N
        fam, form = "so", "symmetric"
    else:
        raise ValueError(f"{t} is not a classical type")
    pairing = tuple(N - 1 - a for a in range(N))
    return fam, N, form, pairing, tuple(f), v, _form_basis(N, pairing, f, v, d.order)


def _outer_sl(d: KacDiagram):
    t, p, m = d.base, d.labels, d.order
    N = t.rank + 1
    r = N // 2
    half_m = Fraction(m, 2)
    first = _chain(p, p[r] if N % 2 else Fraction(p[r], 2), r)
    v = first + ([Fraction(0)] if N % 2 else []) + [-x for x in reversed(first)]
    bar = [N - 1 - a for a in range(N)]
    basis = []
    for a in range(N):
        for b in range(N):
            if a == b:
                continue
            c1 = -((-1) ** (a + b))
            partner = (bar[b], bar[a])
            deg = v[a] - v[b]
            if partner == (a, b):
                basis.append((((a, b, 1),), deg if c1 == 1 else deg + half_m))
            elif (a, b) < partner:
                basis.append((((a, b, 1), (bar[b], bar[a], c1)), deg))
                basis.append((((a, b, 1), (bar[b], bar[a], -c1)), deg + half_m))
    for a in range(r):
        basis.append((((a, a, 1), (bar[a], bar[a], -1)), Fraction(0)))
    anti = [((a, a, 1), (bar[a], bar[a], 1)) for a in range(r)]
    for a in range(r - 1):
        basis.append((anti[a] + tuple((i, j, -c) for i, j, c in anti[a + 1]), half_m))
    if N % 2:
        basis.append((anti[r - 1] + ((r, r, -2),), half_m))
    return "sl", N, "none", tuple(bar), (0,) * N, v, basis


def _outer_so(d: KacDiagram):
    t, p, m = d.base, d.labels, d.order
    l = t.rank
    N = 2 * l
    first = _chain(p, p[l - 1], l - 1)
    v = first + [Fraction(0), Fraction(m, 2)] + [-x for x in reversed(first)]
    pairing = list(range(N - 1, -1, -1))
    pairing[l - 1], pairing[l] = l - 1, l
    f = [1] * N
    f[l - 1], f[l] = 2, -2
    return "so", N, "symmetric", tuple(pairing), tuple(f), v, _form_basis(N, pairing, f, v, m)


def realize(d: KacDiagram) -> MatrixRealization:
    t = d.base
    if t.family not in "ABCD":
        raise ValueError(f"{t} is not a classical type")
    m = d.order
    if d.twist == 1:
        fam, N, form, pairing, f, v, basis = _inner(d)
    elif d.twist == 2 and t.family == "A":
        fam, N, form, pairing, f, v, basis = _outer_sl(d)
    elif d.twist == 2 and t.family == "D":
        fam, N, form, pairing, f, v, basis = _outer_so(d)
    else:
        raise ValueError(f"no matrix realization for {d.diagram.name}")
    degs = []
    for _, z in basis:
        if z.denominator != 1:
            raise AssertionError("non-integral degree in the realization")
        degs.append(int(z) % m)
    half = any(x.denominator != 1 for x in v)
    if half and fam == "so" and m % 2:
        # -A is still orthogonal and of order m, with integral exponents
        v = [x + Fraction(m, 2) for x in v]
        half = False
    zdeg = tuple(int(z) for _, z in basis) if d.twist == 1 else None
    r = MatrixRealization(d, fam, N, form, pairing, f, tuple(v), half and fam != "sl",
                          tuple(e for e, _ in basis), tuple(degs), zdeg)
    if r.dimension_vector() != dims_of(d):
        raise AssertionError(f"{d}: realization dims {r.dimension_vector()} != {dims_of(d)}")
    return r


# -- eigenvalue multiplicities ---------------------------------------------------

@dataclass(frozen=True)
class EigenMultiplicities:
    b: tuple[int, ...]
    half: bool = False  # b_j counts the eigenvalue zeta^{j + 1/2} (A^m = -I)

    @property
    def N(self) -> int:
        return sum(self.b)


def eigen_multiplicities(r: MatrixRealization) -> EigenMultiplicities:
    b = [0] * r.m
    for x in r.v_degrees:
        b[x] += 1
    e = EigenMultiplicities(tuple(b), r.half)
    if r.form != "none" and not r.half and any(b[j] != b[-j] for j in range(1, r.m)):
        raise AssertionError("eigenvalue multiplicities are not symmetric")
    return e


def vinberg_rank_so(e: EigenMultiplicities) -> int:
    """min(b_0, ..., b_{m/2}) for an so_N automorphism of type I (A^m = I, m even)."""
    m = len(e.b)
    if e.half:
        raise ValueError("the rank formula needs A^m = I")
    if m % 2:
        raise ValueError("the rank formula needs even m")
    return min(e.b[: m // 2 + 1])


# -- invariants ------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantFamily:
    kind: str  # "sl", "so_odd", "so_even" or "sp"
    N: int
    degrees: tuple[int, ...]
    pfaffian: tuple[bool, ...]
    negated: tuple[bool, ...]  # sigma acts on H_j by -1
    form: np.ndarray | None = None

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def evaluate(self, X: np.ndarray, p: int = EVAL_PRIME) -> np.ndarray:
        """Values of all H_j at a batch X of shape (K, N, N), mod p."""
        X = np.asarray(X, dtype=np.int64) % p
        c = charpoly_mod(X, p)
        out = np.zeros((X.shape[0], self.rank), dtype=np.int64)
        for j, (deg, pf) in enumerate(zip(self.degrees, self.pfaffian)):
            if pf:
                FX = np.matmul(self.form, X) % p
                out[:, j] = [pfaffian_mod(M, p) for M in FX]
            else:
                out[:, j] = c[:, self.N - deg]
        return out


def invariants_of(r: MatrixRealization) -> InvariantFamily:
    N, l = r.N, r.diagram.base.rank
    outer = r.diagram.twist != 1
    if r.family == "sl":
        degs = tuple(range(2, N + 1))
        fam = InvariantFamily("sl", N, degs, (False,) * len(degs), tuple(outer and k % 2 == 1 for k in degs))
    elif r.family == "sp" or N % 2:
        degs = tuple(range(2, 2 * l + 1, 2))
        fam = InvariantFamily("sp" if r.family == "sp" else "so_odd", N, degs, (False,) * l, (False,) * l)
    else:
        degs = tuple(range(2, 2 * l - 1, 2)) + (l,)
        pf = (False,) * (l - 1) + (True,)
        order = sorted(range(l), key=lambda j: (degs[j], pf[j]))
        fam = InvariantFamily("so_even", N, tuple(degs[j] for j in order), tuple(pf[j] for j in order),
                              tuple(outer and pf[j] for j in order), r.form_matrix)
    exps = build_root_system(r.diagram.base).exponents
    if tuple(sorted(d - 1 for d in fam.degrees)) != tuple(exps):
        raise AssertionError("invariant degrees do not match the exponents")
    return fam


def invariant_types(r: MatrixRealization, fam: InvariantFamily | None = None) -> tuple[int, ...]:
    """(m_j + r_j) mod m for each invariant."""
    fam = fam or invariants_of(r)
    m = r.m
    return tuple((d - 1 + (m // 2 if neg else 0)) % m for d, neg in zip(fam.degrees, fam.negated))


def charpoly_mod(X: np.ndarray, p: int = EVAL_PRIME) -> np.ndarray:
    """Coefficients c_0..c_N of det(lambda - X) for a batch X, by Faddeev-LeVerrier."""
    K, N, _ = X.shape
    if N >= p:
        raise ValueError("matrix size must be below the prime")
    c = np.zeros((K, N + 1), dtype=np.int64)
    c[:, N] = 1
    eye = np.eye(N, dtype=np.int64)
    M = np.zeros_like(X)
    for k in range(1, N + 1):
        M = (np.matmul(X, M) + c[:, N - k + 1, None, None] * eye) % p
        tr = np.trace(np.matmul(X, M) % p, axis1=1, axis2=2) % p
        c[:, N - k] = (-tr * pow(k, -1, p)) % p
    return c


def pfaffian_mod(A, p: int = EVAL_PRIME) -> int:
    """Pfaffian of an antisymmetric matrix over F_p."""
    M = [[int(x) % p for x in row] for row in A]
    n = len(M)
    if n % 2:
        return 0
    pf = 1
    for k in range(0, n, 2):
        piv = next((j for j in range(k + 1, n) if M[k][j]), None)
        if piv is None:
            return 0
        if piv != k + 1:
            M[k + 1], M[piv] = M[piv], M[k + 1]
            for row in M:
                row[k + 1], row[piv] = row[piv], row[k + 1]
            pf = -pf
        a = M[k][k + 1]
        pf = pf * a % p
        inv = pow(a, -1, p)
        for i in range(k + 2, n):
            f = M[k][i] * inv % p
            if f:
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[k + 1])]
                for row in M:
                    row[i] = (row[i] - f * row[k + 1]) % p
    return pf % p


# -- interpolation ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _inverse_vandermonde(K: int, p: int) -> np.ndarray:
    V = [[pow(t, e, p) for e in range(K)] + [int(i == t - 1) for i in range(K)] for t in range(1, K + 1)]
    for c in range(K):
        piv = next(r for r in range(c, K) if V[r][c])
        V[c], V[piv] = V[piv], V[c]
        inv = pow(V[c][c], -1, p)
        V[c] = [x * inv % p for x in V[c]]
        for r in range(K):
            if r != c and V[r][c]:
                f = V[r][c]
                V[r] = [(x - f * y) % p for x, y in zip(V[r], V[c])]
    return np.array([row[K:] for row in V], dtype=np.int64)


def _interpolate(values: np.ndarray, p: int) -> np.ndarray:
    """values (K, ...) at t = 1..K -> coefficients (K, ...) of the degree < K polynomial."""
    K = values.shape[0]
    Vinv = _inverse_vandermonde(K, p)
    return np.tensordot(Vinv, values % p, axes=(1, 0)) % p


def _scaled_supports(r: MatrixRealization, weights, key: str, trials: int, seed: int,
                     p: int = EVAL_PRIME) -> list[list[set[int]]]:
    """For each trial and invariant, the exponents of t in H_j(Phi(t) X) with nonzero coefficient.

    Phi(t) multiplies the coordinate of basis element b by t^{weights[b]}.
    """
    fam = invariants_of(r)
    B = r.dense_basis()
    w = np.asarray(weights, dtype=np.int64)
    K = int(w.max(initial=0)) * max(fam.degrees) + 1
    ts = np.arange(1, K + 1, dtype=np.int64)
    powers = np.ones((K, len(w)), dtype=np.int64)
    for b, e in enumerate(w):
        for _ in range(int(e)):
            powers[:, b] = powers[:, b] * ts % p
    rng = rng_for(seed, f"classical:{key}:{r.diagram}")
    out = []
    for _ in range(trials):
        coords = rng.integers(0, p, size=len(w), dtype=np.int64)
        scaled = powers * coords % p
        X = np.tensordot(scaled, B, axes=(1, 0)) % p
        coeffs = _interpolate(fam.evaluate(X, p), p)
        out.append([set(int(e) for e in np.nonzero(coeffs[:, j])[0]) for j in range(fam.rank)])
    return out


def phi_weights(r: MatrixRealization) -> tuple[int, ...]:
    """Coordinates on g_k have phi-degree (m - k) mod m."""
    return tuple((r.m - k) % r.m for k in r.degrees)


def _top(supports, j: int) -> int:
    tops = [max(s[j]) for s in supports if s[j]]
    if not tops:
        raise RuntimeError("invariant vanished at every sample point")
    return max(tops)


def phi_degrees(r: MatrixRealization, trials: int = 3, seed: int = 0) -> tuple[int, ...]:
    sup = _scaled_supports(r, phi_weights(r), "phi", trials, seed)
    return tuple(_top(sup, j) for j in range(len(sup[0])))


def phi_degree(j: int, r: MatrixRealization, trials: int = 3, seed: int = 0) -> int:
    """Top phi-degree of the j-th invariant (degree-sorted); a lower bound for the true d_j."""
    return phi_degrees(r, trials, seed)[j]


def nminus_degrees(r: MatrixRealization, trials: int = 3, seed: int = 0) -> tuple[int, ...]:
    """Top degree in the n^- variables: coordinates on positive Z-degrees get weight 1."""
    if r.zdegrees is None:
        raise ValueError("the n^- degree needs an inner realization")
    w = tuple(1 if z > 0 else 0 for z in r.zdegrees)
    sup = _scaled_supports(r, w, "nminus", trials, seed)
    return tuple(_top(sup, j) for j in range(len(sup[0])))


def nminus_degree(j: int, r: MatrixRealization, trials: int = 3, seed: int = 0) -> int:
    return nminus_degrees(r, trials, seed)[j]


def bihom_support(j: int, r: MatrixRealization, trials: int = 3, seed: int = 0) -> frozenset[int]:
    """phi-degrees of the nonzero bi-homogeneous components of H_j, unioned over trials."""
    sup = _scaled_supports(r, phi_weights(r), "phi", trials, seed)
    return frozenset().union(*(s[j] for s in sup))


def ggs_sum_check(r: MatrixRealization, dims=None, trials: int = 3, seed: int = 0) -> tuple[int, int, bool]:
    """(sum of phi-degrees, D_theta, equality); equality certifies a good generating system."""
    dims = r.dimension_vector() if dims is None else tuple(dims)
    s = sum(phi_degrees(r, trials, seed))
    D = int(D_theta(dims))
    return s, D, s == D


def restricted_jacobian_rank(r: MatrixRealization, seed: int = 0, p: int = EVAL_PRIME) -> int:
    """Rank of the Jacobian of the type-(m-1) invariants restricted to g_1, at a random point.

    The other invariants must vanish identically on g_1; this is checked at
    the same point before ranking.
    """
    fam = invariants_of(r)
    types = invariant_types(r, fam)
    m = r.m
    g1 = [b for b, d in enumerate(r.degrees) if d == 1 % m]
    if not g1:
        return 0
    B = r.dense_basis()[g1]
    rng = rng_for(seed, f"classical:jac:{r.diagram}")
    coords = rng.integers(0, p, size=len(g1), dtype=np.int64)
    X = np.tensordot(coords, B, axes=(0, 0)) % p
    vals = fam.evaluate(X[None], p)[0]
    keep = [j for j, ty in enumerate(types) if ty == (m - 1) % m]
    for j in range(fam.rank):
        if j not in keep and vals[j]:
            raise AssertionError(f"invariant of degree {fam.degrees[j]} does not vanish on g_1")
    if not keep:
        return 0
    K = max(fam.degrees) + 1
    s = np.arange(1, K + 1, dtype=np.int64)
    batch = (X[None, None] + s[None, :, None, None] * B[:, None]) % p
    ev = fam.evaluate(batch.reshape(-1, r.N, r.N), p).reshape(len(g1), K, fam.rank)
    coeffs = _interpolate(np.transpose(ev, (1, 0, 2)), p)  # (K, |g1|, l)
    J = [[int(coeffs[1, b, j]) for b in range(len(g1))] for j in keep]
    return rank_mod(J, p)
