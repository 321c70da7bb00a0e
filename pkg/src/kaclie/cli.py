"""Command-line front end: analyze, enumerate, verify, report."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .contraction import contract_zero
from .datum import D_theta, b_value, datum_of, friendly_pairs, nreg_candidates, nreg_dims, rank_g0
from .grading import grading_of
from .index import Inconclusive, generic_semisimple, index_of
from .kac import (
    AllZero,
    NonCoprime,
    canonicalize,
    dims_of,
    enumerate_diagrams,
    equivalent,
    parse,
    readout,
    validate,
)
from .rootsystem import SimpleType, supported_twists
from .suites import SUITES, Bounds, Record

# Diagrams whose contraction index was left open in the literature
OPEN_INDEX = {"F4[0,0,1,0,0]": "unknown per paper"}

STABILITY_MAX_DIM = 80


def _index_notes(d, certified: bool) -> list[str]:
    tail = ("; the modular upper bound meets the lower bound rk g, so equality holds"
            if certified else "; observed value only")
    notes = [note + tail for text, note in OPEN_INDEX.items() if equivalent(d, parse(text))]
    t = d.base
    if (t.family == "C" and d.twist == 1 and d.order > 2 and d.order % 2 == 0
            and not d.labels[0] and not d.labels[-1]):
        notes.append("unknown: sp with even order and p_0 = p_l = 0" + tail)
    return notes


def analyze(text: str, trials: int = 5, seed: int = 0, stability: bool = True) -> Record:
    t0 = time.perf_counter()
    d = validate(parse(text))
    t, m = d.base, d.order
    dims = dims_of(d)
    ro = readout(d)
    rk0 = t.rank if d.twist == 1 else rank_g0(t, d.twist)
    G = grading_of(d)
    rep = index_of(contract_zero(G), trials, seed, lower_bound=t.rank)
    vals: dict = {
        "order": m,
        "twist": d.twist,
        "g0_semisimple_part": [str(c) for c in ro.semisimple_part],
        "g0_center_dim": ro.center_dim,
        "dims": list(dims),
        "D_theta": int(D_theta(dims)),
        "b": str(b_value(t.dim, dims[0], t.rank, rk0)),
        "index": {
            "computed": rep.computed_index,
            "lower_bound": rep.lower_bound,
            "certified": rep.certified,
            "status": rep.status,
            "trials": trials,
            "seed": seed,
        },
    }
    if stability and t.dim <= STABILITY_MAX_DIM:
        try:
            vals["stable"] = {"value": generic_semisimple(G, trials, seed), "status": "observed"}
        except Inconclusive:
            vals["stable"] = {"value": None, "status": "inconclusive"}
    else:
        vals["stable"] = {"value": None, "status": "skipped"}
    dat = datum_of(t, d.twist, m)
    cands = nreg_candidates(t, d.twist, m)
    is_nreg = any(canonicalize(c).labels == canonicalize(d).labels for c in cands)
    try:
        predicted = list(nreg_dims(dat))
    except ValueError:
        predicted = None
    vals["nregular"] = {
        "is_nregular": is_nreg,
        "status": "exact" if d.twist == 1 else "candidate",
        "predicted_dims": predicted,
        "dims_match": predicted == list(dims),
    }
    notes = _index_notes(d, rep.certified)
    if notes:
        vals["notes"] = notes
    return Record("analyze", str(d), rep.status, vals, time.perf_counter() - t0)


def enumerate_records(type_text: str, twist: int, m: int, nreg: bool = False, friendly: bool = False) -> list[Record]:
    t = SimpleType.parse(type_text)
    if twist not in supported_twists(t):
        raise ValueError(f"{t} has no twist {twist}")
    out = []
    marked = {canonicalize(c).labels for c in nreg_candidates(t, twist, m)} if nreg else set()
    for d in enumerate_diagrams(t, twist, m):
        vals = {"order": m, "dims": list(dims_of(d))}
        if nreg:
            vals["nregular"] = d.labels in marked
        out.append(Record("enumerate", str(d), "pass", vals))
    if friendly:
        for p in friendly_pairs(t, twist, m):
            out.append(Record("friendly", f"{p.nreg} ~ {p.partner}", p.status,
                              {"nreg_dims": list(p.nreg_dims), "partner_dims": list(p.partner_dims)}))
    return out


def _emit(records, fmt: str, timings: bool, out) -> None:
    rows = [r.as_dict(timings) for r in records]
    if fmt == "csv":
        buf = io.StringIO()
        cols = ["check", "diagram", "status", "values"] + (["runtime"] if timings else [])
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for row in rows:
            w.writerow([json.dumps(row[c], sort_keys=True) if c == "values" else row.get(c, "") for c in cols])
        out.write(buf.getvalue())
    else:
        for row in rows:
            out.write(json.dumps(row, sort_keys=True) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=5)
    common.add_argument("--format", choices=("structured", "csv"), default="structured")
    common.add_argument("--timings", action="store_true", help="include per-check runtimes (not reproducible)")
    p = argparse.ArgumentParser(prog="kaclie", description="Kac diagrams, periodic contractions and their index.")
    p.add_argument("--version", action="version", version=f"kaclie {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="analyze one diagram, e.g. 'G2[0,1,1]'")
    a.add_argument("diagram")
    a.add_argument("--no-stability", action="store_true")
    e = sub.add_parser("enumerate", parents=[common], help="list the diagrams of one order")
    e.add_argument("type")
    e.add_argument("twist", type=int)
    e.add_argument("m", type=int)
    e.add_argument("--nreg", action="store_true")
    e.add_argument("--friendly", action="store_true")
    for name, helptext in (("verify", "run one verification suite"), ("report", "run every suite")):
        v = sub.add_parser(name, parents=[common], help=helptext)
        if name == "verify":
            v.add_argument("suite", choices=sorted(SUITES))
        v.add_argument("--max-rank", type=int)
        v.add_argument("--max-order", type=int)
        v.add_argument("--max-N", dest="max_N", type=int)
    return p


REPORT_SUITES = ("jacobi", "dtheta", "semidir", "collapse", "index", "nreg", "friendly", "ggs", "datum",
                 "vinberg", "quotient")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            records = [analyze(args.diagram, args.trials, args.seed, not args.no_stability)]
        elif args.command == "enumerate":
            records = enumerate_records(args.type, args.twist, args.m, args.nreg, args.friendly)
        else:
            b = Bounds(args.max_rank, args.max_order, args.max_N, args.trials, args.seed)
            names = [args.suite] if args.command == "verify" else REPORT_SUITES
            records = [r for n in names for r in SUITES[n](b)]
    except (AllZero, NonCoprime, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(records, args.format, args.timings, sys.stdout)
    return 1 if any(r.failed for r in records) else 0


if __name__ == "__main__":
    sys.exit(main())
