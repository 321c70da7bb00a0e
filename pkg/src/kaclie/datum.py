"""Arithmetic data of periodic automorphisms: the datum (m, k), D_theta, bounds,
N-regular dimension formulas, bullet degrees and friendly pairs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .kac import (
    KacDiagram,
    canonicalize,
    dims_of,
    enumerate_diagrams,
    n_regular_inner,
)
from .rootsystem import SimpleType, affine_diagram, build_root_system, supported_twists


@dataclass(frozen=True)
class Datum:
    m: int
    twist: int
    exponents: tuple[int, ...]
    residues: tuple[int, ...]
    k_vector: tuple[int, ...]
    base: SimpleType | None = field(default=None, compare=False)

    @property
    def dim_g(self) -> int:
        return sum(2 * e + 1 for e in self.exponents)

    @property
    def rank(self) -> int:
        return len(self.exponents)


def residues_of(t: SimpleType, twist: int, m: int) -> tuple[int, ...]:
    """Residues r_j (theta acts on H_j by zeta^{r_j}), aligned with the sorted exponents."""
    exps = build_root_system(t).exponents
    if twist == 1:
        return (0,) * len(exps)
    if twist not in supported_twists(t) or m % twist:
        raise ValueError(f"unsupported twist {twist} for {t} with m={m}")
    half = m // 2
    if t.family == "A":
        return tuple(half if (e + 1) % 2 else 0 for e in exps)
    if t.family == "D" and twist == 2:
        # the Pfaffian has degree l (exponent l-1); it is the only negated generator
        pf = t.rank - 1
        out, done = [], False
        for e in exps:
            if e == pf and not done:
                out.append(half)
                done = True
            else:
                out.append(0)
        return tuple(out)
    if t.family == "E":
        return tuple(half if e + 1 in (5, 9) else 0 for e in exps)
    if twist == 3:
        # degrees (2, 4, 4, 6)
        return (0, m // 3, 2 * m // 3, 0)
    raise ValueError(f"unsupported twist {twist} for {t}")


def datum_of(t: SimpleType, twist: int, m: int) -> Datum:
    exps = build_root_system(t).exponents
    res = residues_of(t, twist, m)
    k = [0] * m
    for e, r in zip(exps, res):
        k[(e + r) % m] += 1
    return Datum(m, twist, exps, res, tuple(k), t)


def D_theta(dims) -> int:
    """sum_i i*dim g_i, checked against (m/2)(dim g - dim g_0)."""
    dims = list(dims)
    m = len(dims)
    a = sum(i * x for i, x in enumerate(dims))
    b = Fraction(m, 2) * (sum(dims) - dims[0])
    if a != b:
        raise AssertionError(f"D_theta mismatch: {a} != {b}")
    return a


def upsilon(d: Datum) -> int:
    m = d.m
    v = Fraction((m - 1) * d.dim_g + sum((2 * i + 1 - m) * k for i, k in enumerate(d.k_vector)), 2)
    if v.denominator != 1:
        raise AssertionError("non-integral bound")
    return int(v)


def nreg_dims(d: Datum, dim_g: int | None = None) -> tuple[int, ...]:
    """Dimension vector of the N-regular grading predicted by the datum."""
    m, k = d.m, d.k_vector
    dim_g = d.dim_g if dim_g is None else dim_g
    g0 = Fraction(dim_g + sum((m - 1 - 2 * i) * ki for i, ki in enumerate(k)), m)
    if g0.denominator != 1:
        raise ValueError(f"non-integral dim g_0 = {g0} (wrong residue table?)")
    dims = [int(g0)]
    for i in range(m - 1):
        dims.append(dims[-1] + k[m - 1 - i] - k[i])
    if sum(dims) != dim_g or any(x < 0 for x in dims):
        raise ValueError(f"inconsistent dimension vector {dims}")
    return tuple(dims)


def b_value(dim_g: int, dim_g0: int, rk_g: int, rk_g0: int) -> Fraction:
    return Fraction(dim_g - dim_g0 + rk_g + rk_g0, 2)


def rank_g0(t: SimpleType, twist: int) -> int:
    return affine_diagram(t, twist).node_count - 1


def bullet_degrees(d: Datum) -> list[int]:
    m = d.m
    return [(m - 1) * e + (e + r) % m for e, r in zip(d.exponents, d.residues)]


def main2_sum(d: Datum) -> int:
    tot = 0
    for db, r in zip(bullet_degrees(d), d.residues):
        if (db - r) % d.m:
            raise AssertionError("bullet degree not congruent to its residue")
        tot += (db - r) // d.m + 1
    return tot


def main2_b(d: Datum) -> Fraction:
    """b(g, theta) computed from the N-regular dimension vector."""
    dims = nreg_dims(d)
    rk0 = rank_g0(d.base, d.twist) if d.base is not None else d.rank
    return b_value(d.dim_g, dims[0], d.rank, rk0)


def nreg_candidates(t: SimpleType, twist: int, m: int) -> list[KacDiagram]:
    """Diagrams of minimal dim g_0 for the datum; for twist 1 the exact N-regular one."""
    if twist == 1:
        return [canonicalize(n_regular_inner(t, m))]
    ds = enumerate_diagrams(t, twist, m)
    if not ds:
        return []
    low = min(dims_of(x)[0] for x in ds)
    return [x for x in ds if dims_of(x)[0] == low]


@dataclass(frozen=True)
class FriendlyPair:
    nreg: KacDiagram
    partner: KacDiagram
    nreg_dims: tuple[int, ...]
    partner_dims: tuple[int, ...]
    status: str  # "exact" (inner) or "candidate" (outer)


def friendly_pairs(t: SimpleType, twist: int, m: int) -> list[FriendlyPair]:
    status = "exact" if twist == 1 else "candidate"
    out, seen = [], set()
    ds = enumerate_diagrams(t, twist, m)
    for n in nreg_candidates(t, twist, m):
        nd = dims_of(n)
        for x in ds:
            key = frozenset((x.labels, n.labels))
            if x.labels == n.labels or key in seen:
                continue
            xd = dims_of(x)
            if xd[0] == nd[0]:
                seen.add(key)
                out.append(FriendlyPair(n, x, nd, xd, status))
    return out


@dataclass(frozen=True)
class ShapeReport:
    at_most_one_big: bool
    big_only_at_mark_one: bool
    others_one_when_big: bool
    small_order_zero_one: bool

    @property
    def ok(self) -> bool:
        return self.at_most_one_big and self.big_only_at_mark_one and self.others_one_when_big and self.small_order_zero_one


def nreg_label_shape_check(d: KacDiagram) -> ShapeReport:
    marks = d.diagram.marks
    big = [i for i, p in enumerate(d.labels) if p > 1]
    h = sum(marks)
    return ShapeReport(
        len(big) <= 1,
        all(marks[i] == 1 for i in big),
        all(all(p == 1 for j, p in enumerate(d.labels) if j != i) for i in big),
        d.order > h or all(p <= 1 for p in d.labels),
    )
