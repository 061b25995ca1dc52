"""Command line interface: ``grouplab verify | compute | psl2 | lacunary | wreath``."""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .automorphisms import automorphism_group
from .catalog import parse_group
from .corpus import SUITES, builtin_corpus, report_meta, run_suite
from .errors import GroupLabError, ParseError
from .fields import get_field, lacunary_trial, random_lacunary
from .pgammal2 import gammaL2_group, l3_inner_max, verify_formulas
from .powermaps import l_value
from .report import CheckReport, Summary, emit_report, jsonable
from .wreath import (coordinate_agreement, coset_survivor_fraction, determination_instance,
                     ncycle_inversion_count, opportune_family, wreath_group)


def _dump(obj) -> None:
    print(json.dumps(jsonable(obj), sort_keys=True))


def cmd_verify(args) -> int:
    corpus = builtin_corpus(args.max_order)
    reports = run_suite(args.suite, corpus, seed=args.seed, jobs=args.jobs, timings=args.timings)
    meta = report_meta(args.suite, args.max_order, args.seed)
    text = emit_report(reports, args.format, args.report, meta)
    if args.report is None:
        sys.stdout.write(text)
    counts = Summary.of(reports).counts
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return 1 if counts["fail"] else 0


def cmd_compute(args) -> int:
    g = parse_group(args.group)
    if args.what == "le":
        aut = automorphism_group(g)
        value, wit = l_value(g, args.exponent, aut)
        _dump({"group": args.group, "order": g.order, "exponent": args.exponent,
               "L": value, "l": value / g.order, "aut_order": len(aut),
               "witness": wit.image.tolist()})
    return 0


def cmd_psl2(args) -> int:
    G = gammaL2_group(args.q)
    out = {"q": args.q, "order": G.order, "l3": None, "q_pow_11_4": args.q ** 2.75, "witness": None}
    if args.l3:
        out["l3"], out["witness"] = l3_inner_max(args.q)
    status = 0
    if args.verify_formulas:
        res = verify_formulas(args.q, args.verify_formulas, args.seed)
        out["formulas"] = res
        if res["cube_failures"] or res["conj_failures"]:
            status = 1
    _dump(out)
    return status


def cmd_lacunary(args) -> int:
    F = get_field(args.p, args.k)
    rng = np.random.default_rng(args.seed)
    status = 0
    for _ in range(args.trials):
        f = random_lacunary(F, args.l, args.eps, rng)
        res = lacunary_trial(f, args.l, args.eps)
        if not (res["rootsEqual"] and res["degOk"]):
            status = 1
        _dump({k: res[k] for k in ("q", "degF", "degQ", "bound", "rootsEqual")})
    return status


def cubable_perm(n: int) -> np.ndarray:
    """A permutation conjugate to its own cube: an n-cycle unless 3 | n, else a transposition."""
    perm = np.arange(n)
    if n % 3:
        return np.roll(perm, 1)
    perm[[0, 1]] = perm[[1, 0]]
    return perm


def _wreath_rows(base_spec: str, n: int, check: str, seed: int, trials: int,
                 s_order: int | None = None) -> list[CheckReport]:
    base = parse_group(base_spec)
    label = f"{base_spec}wrS{n}"
    rng = np.random.default_rng(seed)
    rows = []
    if check in ("order", "all"):
        W = wreath_group(base, n)
        ok = W.order == base.order**n * math.factorial(n) and W.random_associativity_check(trials, seed)
        rows.append(CheckReport(label, "order", "pass" if ok else "fail", {"order": W.order}))
    if check in ("coordinate", "all"):
        res = coordinate_agreement(base, n, trials, seed)
        rows.append(CheckReport(label, "coordinate", "fail" if res["disagree"] else "pass", res))
    if check in ("ncycle", "all"):
        aut = automorphism_group(base)
        counts = []
        try:
            for _ in range(min(trials, 50)):
                alphas = [aut.elements[i] for i in rng.integers(0, len(aut), size=n)]
                counts.append(ncycle_inversion_count(base, alphas)[0])
            rows.append(CheckReport(label, "ncycle", "pass", {"max": max(counts), "bound": base.order}))
        except AssertionError as exc:
            rows.append(CheckReport(label, "ncycle", "fail", {"error": str(exc)}))
    if check in ("survivor", "all"):
        aut = automorphism_group(base)
        worst = 0
        rep = None
        for _ in range(min(trials, 100)):
            k = int(rng.integers(base.order))
            a, b = (aut.elements[i] for i in rng.integers(0, len(aut), size=2))
            rep = coset_survivor_fraction(base, k, a, b)
            worst = max(worst, rep.counts[0])
        status = ("pass" if worst <= base.order - 1 else "fail") if rep.strict else "info"
        rows.append(CheckReport(label, "survivor", status, {"max": worst, "order": base.order}))
    if check in ("opportune", "all"):
        bad = 0
        for _ in range(trials):
            fam = opportune_family(rng.permutation(n), rng.permutation(n))
            bad += not fam.verify()
        rows.append(CheckReport(label, "opportune", "fail" if bad else "pass",
                                {"trials": trials, "failures": bad}))
    if check in ("determined", "all"):
        try:
            inst = determination_instance(base, s_order or base.order, n, cubable_perm(n), seed)
        except GroupLabError as exc:
            rows.append(CheckReport(label, "determined", "skipped",
                                    {"reason": f"{type(exc).__name__}: {exc}"}))
            return rows
        ok = all(r.ok for r in inst["reports"])
        rows.append(CheckReport(label, "determined", "pass" if ok else "fail",
                                [{"I": r.I, "C": r.C, "K_beta": r.size_f, "bound": r.bound}
                                 for r in inst["reports"]]))
        rows.append(CheckReport(label, "opportuneRatio", "info",
                                {"ratio": inst["ratio"], "lemma_bound": inst["lemma_bound"],
                                 "opportune": inst["opportune"]}))
    return rows


WREATH_CHECKS = ("order", "coordinate", "ncycle", "survivor", "opportune", "determined", "all")


def cmd_wreath(args) -> int:
    rows = _wreath_rows(args.base, args.n, args.check, args.seed, args.trials, args.s_order)
    text = emit_report(rows, "json", None, {"base": args.base, "n": args.n, "seed": args.seed})
    sys.stdout.write(text)
    return 1 if any(r.failed for r in rows) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grouplab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a check suite on the built-in corpus")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--report", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="record wall-clock times (non-deterministic)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compute", help="compute a single statistic")
    p.add_argument("what", choices=("le",))
    p.add_argument("--group", required=True)
    p.add_argument("--exponent", type=int, required=True)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("psl2", help="PGammaL(2,q) cubing counts and formula checks")
    p.add_argument("--q", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--l3", action="store_true")
    mode.add_argument("--verify-formulas", type=int, metavar="N", default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_psl2)

    p = sub.add_parser("lacunary", help="random lacunary reduction trials")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lacunary)

    p = sub.add_parser("wreath", help="wreath product coordinate checks")
    p.add_argument("--base", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", choices=WREATH_CHECKS, default="all")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--s-order", type=int, default=None,
                   help="order of the simple group S when the base plays Aut(S)")
    p.set_defaults(func=cmd_wreath)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"grouplab: {exc}", file=sys.stderr)
        return 2
    except GroupLabError as exc:
        print(f"grouplab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
