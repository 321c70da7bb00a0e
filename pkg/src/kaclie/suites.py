"""Verification suites: each yields one Record per check.

A record's status is "pass"/"fail" for exact checks, and "certified",
"observed" or "fail" for index-type checks where only certification
against a theorem counts as success.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from math import gcd

from . import classical
from .chevalley import chevalley_of, jacobi_holds
from .contraction import contract_zero, gamma_move_to_zero, parabolic_contraction, same_bracket
from .datum import (
    D_theta,
    bullet_degrees,
    datum_of,
    friendly_pairs,
    main2_b,
    main2_sum,
    nreg_candidates,
    nreg_dims,
    nreg_label_shape_check,
    upsilon,
)
from .grading import grading_of
from .index import generic_orbit_data, index_of
from .kac import (
    KacDiagram,
    canonicalize,
    collapse,
    dims_of,
    enumerate_diagrams,
    gamma_images,
    n_regular_inner,
)
from .rootsystem import SimpleType, affine_diagram, all_types, build_root_system, supported_twists


@dataclass(frozen=True)
class Record:
    check: str
    diagram: str
    status: str
    values: dict = field(default_factory=dict)
    runtime: float | None = None

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def as_dict(self, timings: bool = False) -> dict:
        out = {"check": self.check, "diagram": self.diagram, "status": self.status, "values": self.values}
        if timings and self.runtime is not None:
            out["runtime"] = round(self.runtime, 4)
        return out


@dataclass(frozen=True)
class Bounds:
    max_rank: int | None = None
    max_order: int | None = None
    max_N: int | None = None
    trials: int = 5
    seed: int = 0

    def rank(self, default: int) -> int:
        return default if self.max_rank is None else self.max_rank

    def order(self, default: int) -> int:
        return default if self.max_order is None else self.max_order

    def N(self, default: int) -> int:
        return default if self.max_N is None else self.max_N


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _ok(flag: bool) -> str:
    return "pass" if flag else "fail"


def _twists(t: SimpleType, m: int):
    return [w for w in supported_twists(t) if m % w == 0]


def rank_lower_bound(d: KacDiagram) -> int:
    """ind g_(0) >= ind g = rk g by semicontinuity."""
    return d.base.rank


def index_record(check: str, d: KacDiagram, trials: int, seed: int) -> Record:
    rep, dt = _timed(lambda: index_of(contract_zero(grading_of(d)), trials, seed, rank_lower_bound(d)))
    vals = {"order": d.order, "computed_index": rep.computed_index, "lower_bound": rep.lower_bound,
            "trials": trials, "seed": seed}
    return Record(check, str(d), "certified" if rep.certified else "fail", vals, dt)


# -- suites ------------------------------------------------------------------------

def suite_jacobi(b: Bounds):
    """Exhaustive Jacobi on every simple type of dimension at most 250."""
    for t in all_types(b.rank(8)):
        if t.dim > 250:
            continue
        ok, dt = _timed(lambda: jacobi_holds(chevalley_of(t)))
        yield Record("jacobi", str(t), _ok(ok), {"dim": t.dim}, dt)


def suite_dtheta(b: Bounds):
    types = all_types(b.rank(6))
    if b.max_rank is None:
        types.append(SimpleType("E", 7))
    for t in types:
        for m in range(1, b.order(10) + 1):
            for w in _twists(t, m):
                t0 = time.perf_counter()
                n, bad = 0, []
                for d in enumerate_diagrams(t, w, m):
                    n += 1
                    try:
                        D_theta(dims_of(d))
                    except AssertionError:
                        bad.append(str(d))
                yield Record("dtheta", f"{t}^{w} m={m}", _ok(not bad), {"diagrams": n, "failures": bad},
                             time.perf_counter() - t0)


def semidir_types(max_rank: int) -> list[SimpleType]:
    out = all_types(max_rank, exceptional=False)
    out += [SimpleType("G", 2), SimpleType("F", 4)]
    return out


def suite_semidir(b: Bounds):
    for t in semidir_types(b.rank(5)):
        for m in range(1, b.order(8) + 1):
            for d in enumerate_diagrams(t, 1, m):
                g = gamma_move_to_zero(d)
                if g is None:
                    continue
                G = grading_of(g)
                J = {i for i, p in enumerate(g.labels) if p == 0 and i}
                ok, dt = _timed(lambda: same_bracket(contract_zero(G), parabolic_contraction(G.algebra, J, g.labels[1:])))
                yield Record("semidir", str(d), _ok(ok), {"moved": str(g)}, dt)


def collapse_cases(max_rank: int, max_label: int = 3):
    """Canonical diagrams with labels <= max_label that differ from their collapse."""
    for t in all_types(max_rank):
        for w in supported_twists(t):
            a = affine_diagram(t, w)
            for labels in product(range(max_label + 1), repeat=a.node_count):
                if max(labels) < 2:
                    continue
                d = KacDiagram(a, labels)
                if min(gamma_images(d)) != labels:
                    continue
                g = 0
                for p in labels:
                    g = gcd(g, p)
                if g == 1:
                    yield d


def suite_collapse(b: Bounds):
    for d in collapse_cases(b.rank(5)):
        c = collapse(d)
        ok, dt = _timed(lambda: same_bracket(contract_zero(grading_of(d)), contract_zero(grading_of(c))))
        yield Record("collapse", str(d), _ok(ok), {"collapsed": str(c)}, dt)


def suite_index_sl(b: Bounds):
    for n in range(2, b.N(8) + 1):
        t = SimpleType("A", n - 1)
        for m in range(1, b.order(8) + 1):
            for d in enumerate_diagrams(t, 1, m):
                yield index_record("index-sl", d, b.trials, b.seed)


def so_types(max_N: int) -> list[SimpleType]:
    out = []
    for N in range(3, max_N + 1):
        if N % 2:
            out.append(SimpleType("A", 1) if N == 3 else SimpleType("B", (N - 1) // 2))
        elif N == 6:
            out.append(SimpleType("A", 3))
        elif N >= 8:
            out.append(SimpleType("D", N // 2))
    return out


def suite_index_so(b: Bounds):
    for t in so_types(b.N(12)):
        for m in range(1, b.order(8) + 1):
            for w in _twists(t, m):
                if w == 3:
                    continue  # triality is not induced from O(N)
                for d in enumerate_diagrams(t, w, m):
                    yield index_record("index-so", d, b.trials, b.seed)


def suite_index_sp(b: Bounds):
    for l in range(2, b.rank(4) + 1):
        t = SimpleType("C", l)
        for m in range(1, b.order(9) + 1, 2):
            for d in enumerate_diagrams(t, 1, m):
                yield index_record("index-sp", d, b.trials, b.seed)


def suite_index_g2(b: Bounds):
    t = SimpleType("G", 2)
    for m in range(1, b.order(10) + 1):
        for d in enumerate_diagrams(t, 1, m):
            yield index_record("index-g2", d, b.trials, b.seed)


def suite_index_small_m(b: Bounds):
    for t in all_types(b.rank(6)):
        for m in (2, 3):
            for w in _twists(t, m):
                for d in enumerate_diagrams(t, w, m):
                    yield index_record("index-small-m", d, b.trials, b.seed)


def suite_index(b: Bounds):
    yield from suite_index_sl(b)
    yield from suite_index_so(b)
    yield from suite_index_sp(b)
    yield from suite_index_g2(b)
    yield from suite_index_small_m(b)


def height_histogram(t: SimpleType, m: int) -> tuple[int, ...]:
    rs = build_root_system(t)
    out = [0] * m
    out[0] += t.rank
    for r in rs.roots:
        out[sum(r) % m] += 1
    return tuple(out)


def suite_nreg(b: Bounds):
    for t in all_types(b.rank(8)):
        h = build_root_system(t).coxeter_number
        for m in range(1, 2 * h + 1):
            d, dt = _timed(lambda: n_regular_inner(t, m))
            labels = d.labels
            a = labels == (m + 1 - h,) + (1,) * t.rank if m >= h else True
            bb = all(p <= 1 for p in labels) if m <= h else True
            c = nreg_label_shape_check(d).ok
            dims = dims_of(d)
            dd = dims == height_histogram(t, m) == nreg_dims(datum_of(t, 1, m))
            vals = {"labels": list(labels), "m_ge_h": a, "m_le_h": bb, "shape": c, "dims": dd}
            yield Record("nreg", f"{t} m={m}", _ok(a and bb and c and dd), vals, dt)


FRIENDLY_EXPECTED = (
    ("E7", 1, 4, (33, 35, 30, 35), (33, 32, 36, 32)),
    ("E6", 1, 4, (20, 20, 18, 20), (20, 20, 18, 20)),
    ("A7", 2, 4, (16, 16, 15, 16), (16, 16, 15, 16)),
)


def suite_friendly(b: Bounds):
    for name, w, m, nd, pd in FRIENDLY_EXPECTED:
        pairs, dt = _timed(lambda: friendly_pairs(SimpleType.parse(name), w, m))
        got = [(list(p.nreg_dims), list(p.partner_dims), str(p.nreg), str(p.partner), p.status) for p in pairs]
        ok = len(pairs) == 1 and pairs[0].nreg_dims == nd and pairs[0].partner_dims == pd
        yield Record("friendly", f"{name}^{w} m={m}", _ok(ok), {"pairs": got}, dt)


def ggs_cases(max_n: int, max_order: int, max_sp: int):
    for n in range(2, max_n + 1):
        for m in range(1, max_order + 1):
            yield from enumerate_diagrams(SimpleType("A", n - 1), 1, m)
    for l in range(2, max_sp + 1):
        for m in range(1, max_order + 1):
            for d in enumerate_diagrams(SimpleType("C", l), 1, m):
                if d.labels[0] or d.labels[-1]:
                    yield d


def suite_ggs(b: Bounds):
    for d in ggs_cases(b.N(7), b.order(8), b.rank(3)):
        g = gamma_move_to_zero(d)

        def run():
            r = classical.realize(g)
            s, D, cert = classical.ggs_sum_check(r, trials=3, seed=b.seed)
            ph = classical.phi_degrees(r, 3, b.seed)
            nm = classical.nminus_degrees(r, 3, b.seed)
            return s, D, cert, ph, nm, upsilon(datum_of(d.base, 1, d.order))

        (s, D, cert, ph, nm, ups), dt = _timed(run)
        phi_ok = all(x == g.order * y for x, y in zip(ph, nm))
        vals = {"sum_phi": s, "D_theta": D, "upsilon": ups, "phi": list(ph), "nminus": list(nm), "phi_matches_nminus": phi_ok}
        yield Record("ggs", str(d), "certified" if cert and phi_ok and s <= ups else "fail", vals, dt)


def suite_datum(b: Bounds):
    for t in all_types(b.rank(8)):
        for m in range(1, b.order(12) + 1):
            for w in _twists(t, m):
                def run():
                    dat = datum_of(t, w, m)
                    dims = nreg_dims(dat)
                    return main2_sum(dat), main2_b(dat), sum(bullet_degrees(dat)), upsilon(dat), D_theta(dims)

                (s2, bv, bs, ups, D), dt = _timed(run)
                ok = s2 == bv and bs == ups == D
                vals = {"main2_sum": s2, "b": str(bv), "bullet_sum": bs, "upsilon": ups, "D_theta": int(D)}
                yield Record("datum", f"{t}^{w} m={m}", _ok(ok), vals, dt)


def vinberg_shape(d: KacDiagram) -> bool:
    """Labels in {0, 1}, with zero labels at the mark-1 nodes for inner diagrams."""
    if any(p > 1 for p in d.labels):
        return False
    if d.twist == 2:
        return True
    l = d.base.rank
    zero = (0, 1, l - 1, l) if d.base.family == "D" else (0, 1)
    return all(d.labels[i] == 0 for i in zero)


def vinberg_cases(max_N: int, max_order: int):
    for t in so_types(max_N):
        if t.family not in "BD":
            continue
        for m in range(2, max_order + 1, 2):
            for w in _twists(t, m):
                if w == 3:
                    continue
                for d in enumerate_diagrams(t, w, m):
                    if vinberg_shape(d):
                        yield d


def suite_vinberg(b: Bounds):
    for d in vinberg_cases(b.N(14), b.order(8)):
        def run():
            e = classical.eigen_multiplicities(classical.realize(d))
            return e, classical.vinberg_rank_so(e), generic_orbit_data(grading_of(d), seed=b.seed)[1]

        (e, v, q), dt = _timed(run)
        yield Record("vinberg", str(d), _ok(v == q), {"b": list(e.b), "formula": v, "quotient_dim": q}, dt)


def suite_quotient(b: Bounds):
    for t in all_types(b.rank(6)):
        for m in range(1, b.order(6) + 1):
            for w in _twists(t, m):
                k = datum_of(t, w, m).k_vector[m - 1]
                nreg = {canonicalize(x).labels for x in nreg_candidates(t, w, m)} if w == 1 else set()
                for d in enumerate_diagrams(t, w, m):
                    q, dt = _timed(lambda: generic_orbit_data(grading_of(d), seed=b.seed)[1])
                    vals = {"quotient_dim": q, "k_last": k}
                    ok = q <= k
                    if d.labels in nreg:
                        vals["nregular"] = True
                        ok = ok and q == k
                        if t.family in "ABCD":
                            j = classical.restricted_jacobian_rank(classical.realize(d), seed=b.seed)
                            vals["jacobian_rank"] = j
                            ok = ok and j == k
                    yield Record("quotient", str(d), _ok(ok), vals, dt)


SUITES = {
    "jacobi": suite_jacobi,
    "dtheta": suite_dtheta,
    "semidir": suite_semidir,
    "collapse": suite_collapse,
    "index": suite_index,
    "index-sl": suite_index_sl,
    "index-so": suite_index_so,
    "index-sp": suite_index_sp,
    "index-g2": suite_index_g2,
    "index-small-m": suite_index_small_m,
    "nreg": suite_nreg,
    "friendly": suite_friendly,
    "ggs": suite_ggs,
    "datum": suite_datum,
    "vinberg": suite_vinberg,
    "quotient": suite_quotient,
}


def run_suite(name: str, bounds: Bounds | None = None) -> list[Record]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    return list(SUITES[name](bounds or Bounds()))
