"""Index of Lie algebras by modular rank, generic orbit data, nilpotency and stability.

Ranks of B(xi)_ij = xi([x_i, x_j]) are computed over F_p at random xi.  A
modular rank never exceeds the generic rank over Q, so the reported index
is an upper bound for the true one; it is certified only when it meets a
lower bound supplied by the caller.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass

import numpy as np

from .chevalley import LieAlgebraTable
from .grading import GradedAlgebra
from .linalg import rank_exact, rank_mod
from .scalars import PRIME, simplify


@dataclass(frozen=True)
class IndexReport:
    dimension: int
    computed_index: int
    trials: int
    seed: int
    certified: bool
    lower_bound: int | None = None
    ranks: tuple[int, ...] = ()

    @property
    def status(self) -> str:
        return "certified" if self.certified else "observed"


def rng_for(seed: int, key: str) -> np.random.Generator:
    ss = np.random.SeedSequence([seed, zlib.crc32(key.encode())])
    return np.random.Generator(np.random.Philox(ss))


def random_mod(rng: np.random.Generator, n: int, p: int = PRIME) -> list[int]:
    return [int(v) for v in rng.integers(0, p, size=n, dtype=np.uint64)]


_INDEX_CACHE: dict[tuple, tuple[int, ...]] = {}


def pencil_ranks(L: LieAlgebraTable, trials: int, seed: int, p: int = PRIME) -> tuple[int, ...]:
    key = (L.fingerprint(), trials, seed, p)
    if key in _INDEX_CACHE:
        return _INDEX_CACHE[key]
    d = L.dim
    tab = L.mod_table(p)
    rng = rng_for(seed, L.fingerprint())
    ranks = []
    for _ in range(trials):
        xi = random_mod(rng, d, p)
        B = [[0] * d for _ in range(d)]
        for (i, j), vec in tab.items():
            if i < j:
                s = sum(c * xi[k] for k, c in vec.items()) % p
                if s:
                    B[i][j] = s
                    B[j][i] = p - s
        r = rank_mod(B, p)
        if r % 2:
            raise AssertionError("odd rank of an antisymmetric matrix")
        ranks.append(r)
    _INDEX_CACHE[key] = tuple(ranks)
    return tuple(ranks)


def index_of(L: LieAlgebraTable, trials: int = 5, seed: int = 0, lower_bound: int | None = None) -> IndexReport:
    if trials < 1:
        raise ValueError("at least one trial is needed")
    ranks = pencil_ranks(L, trials, seed)
    ind = L.dim - max(ranks)
    return IndexReport(L.dim, ind, trials, seed, lower_bound is not None and ind == lower_bound,
                       lower_bound, ranks)


def generic_orbit_data(G: GradedAlgebra, trials: int = 3, seed: int = 0, p: int = PRIME) -> tuple[int, int]:
    """(generic stabilizer dim in g_0, dim g_1 // G_0) from the rank of y -> [y, x]."""
    pieces = G.pieces
    g0 = pieces[0]
    g1 = pieces[1 % G.m]
    if not g1:
        return len(g0), 0
    pos1 = {k: n for n, k in enumerate(g1)}
    tab = G.algebra.mod_table(p)
    rng = rng_for(seed, "orbit:" + G.algebra.fingerprint() + str(G.diagram))
    best = 0
    for _ in range(trials):
        xs = random_mod(rng, len(g1), p)
        M = [[0] * len(g0) for _ in g1]
        for col, y in enumerate(g0):
            for xi, x in zip(xs, g1):
                for k, c in tab.get((y, x), {}).items():
                    M[pos1[k]][col] = (M[pos1[k]][col] + c * xi) % p
        best = max(best, rank_mod(M, p))
    return len(g0) - best, len(g1) - best


def _mat_mul(A, B):
    n = len(A)
    Bt = list(zip(*B))
    return [[simplify(sum((a * b for a, b in zip(row, col) if a and b), 0)) for col in Bt] for row in A]


def is_nilpotent(L: LieAlgebraTable, x: dict) -> bool:
    """(ad x)^dim == 0, exactly."""
    A = L.ad_matrix(x)
    P = A
    for _ in range(L.dim):
        if not any(any(r) for r in P):
            return True
        P = _mat_mul(P, A)
    return not any(any(r) for r in P)


def is_regular(L: LieAlgebraTable, x: dict, l: int) -> bool:
    """dim ker(ad x) == l, exactly."""
    return L.dim - rank_exact(L.ad_matrix(x)) == l


def ad_semisimple(L: LieAlgebraTable, x: dict) -> bool:
    """ad x is diagonalizable.

    For x in a semisimple Lie algebra this is equivalent to
    rank(ad x) == rank((ad x)^2): a nonzero nilpotent part of x acts
    nontrivially on the generalized 0-eigenspace of ad x.
    """
    A = L.ad_matrix(x)
    return rank_exact(A) == rank_exact(_mat_mul(A, A))


class Inconclusive(RuntimeError):
    pass


def generic_semisimple(G: GradedAlgebra, trials: int = 5, seed: int = 0, bound: int = 5) -> bool:
    """Whether a random element of g_1 (small integer coordinates) is semisimple.

    Majority vote over the trials; an even split raises Inconclusive.
    """
    g1 = G.pieces[1] if G.m > 1 else list(range(G.dim))
    if not g1:
        return True
    rng = rng_for(seed, "ss:" + G.algebra.fingerprint() + str(G.diagram))
    votes = 0
    for _ in range(trials):
        coords = rng.integers(-bound, bound + 1, size=len(g1))
        x = {i: int(c) for i, c in zip(g1, coords) if c}
        votes += 1 if ad_semisimple(G.algebra, x) else -1
    if votes == 0:
        raise Inconclusive("semisimplicity vote is split")
    return votes > 0
