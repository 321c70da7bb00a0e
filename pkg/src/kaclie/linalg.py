"""Gaussian elimination over F_p and over exact fields (Q, Q(omega))."""

from __future__ import annotations

from fractions import Fraction

from .scalars import PRIME, Eisenstein, simplify


def rank_mod(rows, p: int = PRIME) -> int:
    """Rank of an integer matrix (list of rows) over F_p."""
    M = [[x % p for x in r] for r in rows if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for k in range(rank, len(M)):
            if M[k][c]:
                piv = k
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        prow = M[rank]
        inv = pow(prow[c], -1, p)
        prow = [x * inv % p for x in prow]
        M[rank] = prow
        tail = prow[c:]
        for k in range(rank + 1, len(M)):
            f = M[k][c]
            if f:
                row = M[k]
                row[c:] = [(a - f * b) % p for a, b in zip(row[c:], tail)]
        rank += 1
        if rank == len(M):
            break
    return rank


def rref_mod(rows, p: int = PRIME):
    """Reduced row echelon form over F_p: (rows, pivot columns)."""
    M = [[x % p for x in r] for r in rows]
    pivots: list[int] = []
    if not M:
        return M, pivots
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(M)) if M[k][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for k in range(len(M)):
            if k != r and M[k][c]:
                f = M[k][c]
                M[k] = [(a - f * b) % p for a, b in zip(M[k], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace_mod(rows, ncols: int, p: int = PRIME) -> list[list[int]]:
    R, pivots = rref_mod(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, c in zip(R, pivots):
            v[c] = (-row[f]) % p
        basis.append(v)
    return basis


def _zero(x) -> bool:
    return not x


def rref_exact(rows):
    """Reduced row echelon form over Q or Q(omega)."""
    M = [[x for x in r] for r in rows]
    pivots: list[int] = []
    if not M:
        return M, pivots
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(M)) if M[k][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        lead = M[r][c]
        M[r] = [simplify(_div(x, lead)) for x in M[r]]
        for k in range(len(M)):
            if k != r and M[k][c]:
                f = M[k][c]
                M[k] = [simplify(a - f * b) if b else a for a, b in zip(M[k], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def _div(x, y):
    if not x:
        return 0
    if isinstance(x, Eisenstein) or isinstance(y, Eisenstein):
        return Eisenstein.lift(x) / y
    return Fraction(x) / Fraction(y)


def rank_exact(rows) -> int:
    return len(rref_exact(rows)[1]) if rows else 0


def nullspace_exact(rows, ncols: int) -> list[list]:
    R, pivots = rref_exact(rows) if rows else ([], [])
    pset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pset:
            continue
        v: list = [0] * ncols
        v[f] = 1
        for row, c in zip(R, pivots):
            v[c] = simplify(-row[f])
        basis.append(v)
    return basis


def solve_in_span_exact(basis_rref, pivots, v):
    """Coordinates of v in the row space given by an RREF basis; None if outside."""
    coords = [v[c] for c in pivots]
    res = list(v)
    for a, row in zip(coords, basis_rref):
        if a:
            res = [simplify(x - a * y) for x, y in zip(res, row)]
    if any(res):
        return None
    return coords


def solve_in_span_mod(basis_rref, pivots, v, p: int = PRIME):
    coords = [v[c] % p for c in pivots]
    res = [x % p for x in v]
    for a, row in zip(coords, basis_rref):
        if a:
            res = [(x - a * y) % p for x, y in zip(res, row)]
    if any(res):
        return None
    return coords
