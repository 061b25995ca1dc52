"""Built-in group corpus and the batch verification runner."""

from __future__ import annotations

import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .automorphisms import automorphism_group, is_complete
from .bounds import (CONSTANTS, GTF, PO_SUBJECTS, check_almost_solv,
                     check_external_bounds, check_func_bounds, check_gtf_properties,
                     check_mainTheo, check_po_bound, check_thresholds, constant_rows)
from .catalog import parse_group
from .characters import check_square_root_identity
from .errors import GroupLabError, SizeExceeded
from .groups import GroupTable, is_solvable, normal_subgroups
from .pgammal2 import l3_inner_max
from .powermaps import (char_subgroups, check_fiber_law, check_func_gadget, check_lE,
                        check_lThree, check_lTwo, check_shiftCor, check_shiftTwo_fibers,
                        generalized_count_cosetwise, generalized_p_set, inverted_by_inner)
from .report import CheckReport

MAX_CORPUS_ORDER = 512
SUITES = ("lemmas", "characters", "thresholds", "gtf", "bounds", "mainTheo", "all")
SHIFT_TWO_BUDGET = 200_000
SAMPLES = 20
PSL2_INFO_QS = (2, 3, 4, 5, 7, 8, 9)


@dataclass(frozen=True, eq=False)
class CorpusEntry:
    name: str
    table: GroupTable
    tags: frozenset


def compute_tags(g: GroupTable) -> frozenset:
    tags = set()
    if g.is_abelian:
        tags.add("abelian")
    if is_solvable(g):
        tags.add("solvable")
    if g.order > 1 and len(normal_subgroups(g)) == 2:
        tags.add("simple")
    if is_complete(g):
        tags.add("complete")
    if g.degree is not None:
        tags.add(f"permutation-degree:{g.degree}")
    return frozenset(tags)


def corpus_specs(max_order: int) -> list[tuple[str, int]]:
    """``(spec, order)`` pairs of the corpus, without building any table."""
    specs = [(f"C{n}", n) for n in range(1, max_order + 1)]
    specs += [(f"D{2 * n}", 2 * n) for n in range(4, max_order // 2 + 1)]
    specs += [("Q8", 8), ("V4", 4), ("SL(2,3)", 24)]
    fact = 2
    for n in range(3, 7):
        fact *= n
        specs += [(f"S{n}", fact)]
        if n >= 4:
            specs += [(f"A{n}", fact // 2)]
    for q in (4, 5, 7, 8, 9, 11):
        specs.append((f"PSL(2,{q})", (q**3 - q) // (1 if q % 2 == 0 else 2)))
    specs += [("S3xA5", 360), ("A4xC2", 24), ("A5xA5", 3600)]
    return [(s, o) for s, o in specs if o <= max_order]


def builtin_corpus(max_order: int) -> list[CorpusEntry]:
    if max_order > MAX_CORPUS_ORDER:
        raise SizeExceeded(f"corpus is limited to orders <= {MAX_CORPUS_ORDER}")
    out = []
    for spec, _ in corpus_specs(max_order):
        g = parse_group(spec)
        out.append(CorpusEntry(spec, g, compute_tags(g)))
    return out


def _rng(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(name.encode())])


def _from_lemma(name: str, rep) -> CheckReport:
    status = "pass" if rep.ok else "fail"
    witness = {"passed": rep.passed}
    if rep.failures:
        witness["failures"] = [f for f in rep.failures if f is not None]
    return CheckReport(name, rep.check, status, witness)


def lemma_checks(name: str, g: GroupTable, seed: int) -> list[CheckReport]:
    aut = automorphism_group(g)
    out = [_from_lemma(name, f(g, aut)) for f in
           (check_lE, check_lTwo, check_lThree, check_fiber_law, check_shiftCor)]
    if len(aut) * g.order**2 <= SHIFT_TWO_BUDGET:
        out.append(_from_lemma(name, check_shiftTwo_fibers(g, aut)))
    else:
        out.append(CheckReport(name, "shiftTwoFibers", "skipped", {"reason": "over budget"}))
    try:
        count, h = inverted_by_inner(g, verify=True)
        out.append(CheckReport(name, "sqrtProp", "pass", {"maxsqrt": count, "h": h}))
    except AssertionError as exc:
        out.append(CheckReport(name, "sqrtProp", "fail", {"error": str(exc)}))
    # coset-wise recount of generalized power sets and the commuting gadget on samples
    rng = _rng(seed, name)
    chars = char_subgroups(g, aut)
    bad_shift, bad_gadget = [], []
    for _ in range(SAMPLES):
        e = int(rng.integers(1, 4))
        idx = rng.integers(0, len(aut), size=e + 1)
        a, factors = aut.elements[idx[0]], [aut.elements[i] for i in idx[1:]]
        n = chars[int(rng.integers(0, len(chars)))]
        direct = len(generalized_p_set(a, factors))
        if generalized_count_cosetwise(a, factors, n) != direct:
            bad_shift.append({"aut": idx.tolist(), "N": n.order})
        if not check_func_gadget(g, a, factors[0]):
            bad_gadget.append({"aut": idx[:2].tolist()})
    out.append(CheckReport(name, "shiftProp", "fail" if bad_shift else "pass",
                           {"samples": SAMPLES, "failures": bad_shift} if bad_shift else {"samples": SAMPLES}))
    out.append(CheckReport(name, "funcGadget", "fail" if bad_gadget else "pass",
                           {"samples": SAMPLES, "failures": bad_gadget} if bad_gadget else {"samples": SAMPLES}))
    return out


def character_checks(name: str, g: GroupTable) -> list[CheckReport]:
    rep = check_square_root_identity(g)
    witness = {"primes": rep.primes, "degrees": rep.degrees, "nu2": rep.nu2, "degsum": rep.degsum}
    out = [CheckReport(name, "sqrtIdentity", "fail" if rep.mismatches else "pass",
                       dict(witness, mismatches=rep.mismatches[:10]) if rep.mismatches else witness)]
    out.append(CheckReport(name, "degsumBound", "pass" if rep.cauchy_schwarz else "fail",
                           {"degsum": rep.degsum, "order": g.order}))
    return out


def gtf_checks(name: str, g: GroupTable) -> list[CheckReport]:
    out = []
    for f in GTF:
        out += check_gtf_properties(f, g)
    out.append(check_almost_solv(g))
    return out


def bound_checks(name: str, g: GroupTable) -> list[CheckReport]:
    return check_external_bounds(g) + check_func_bounds(g)


_SUITE_PARTS = {
    "lemmas": ("lemmas",),
    "characters": ("characters",),
    "thresholds": ("thresholds",),
    "gtf": ("gtf",),
    "bounds": ("bounds",),
    "mainTheo": ("mainTheo",),
    "all": ("lemmas", "characters", "thresholds", "gtf", "bounds", "mainTheo"),
}


def _run_part(part: str, name: str, g: GroupTable, seed: int) -> list[CheckReport]:
    if part == "lemmas":
        return lemma_checks(name, g, seed)
    if part == "characters":
        return character_checks(name, g)
    if part == "thresholds":
        return [check_thresholds(g)]
    if part == "gtf":
        return gtf_checks(name, g)
    if part == "bounds":
        return bound_checks(name, g)
    if part == "mainTheo":
        return check_mainTheo(g)
    raise ValueError(part)


def run_entry(suite: str, name: str, seed: int = 0, timings: bool = False) -> list[CheckReport]:
    """All checks of ``suite`` on one corpus member; errors become ``skipped`` rows."""
    out = []
    g = parse_group(name)
    for part in _SUITE_PARTS[suite]:
        start = time.perf_counter()
        try:
            rows = _run_part(part, name, g, seed)
        except GroupLabError as exc:
            rows = [CheckReport(name, part, "skipped", {"reason": f"{type(exc).__name__}: {exc}"})]
        elapsed = (time.perf_counter() - start) / max(1, len(rows)) if timings else 0.0
        for r in rows:
            r.group = name
            r.elapsed = elapsed
        out += rows
    return out


def global_rows(suite: str) -> list[CheckReport]:
    """Rows that belong to no corpus member (fixed simple groups, data constants)."""
    if suite not in ("bounds", "all"):
        return []
    out = []
    for name, q in PO_SUBJECTS.items():
        out += check_po_bound(name, q)
    out += constant_rows()
    for q in PSL2_INFO_QS:
        l3, wit = l3_inner_max(q)
        out.append(CheckReport(f"PGammaL(2,{q})", "l3Inner", "info",
                               {"q": q, "l3": l3, "q_pow_11_4": q ** 2.75, "witness": wit}))
    return out


def run_suite(suite: str, corpus, seed: int = 0, jobs: int = 1, timings: bool = False) -> list[CheckReport]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    names = sorted(e.name if isinstance(e, CorpusEntry) else str(e) for e in corpus)
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(run_entry, [suite] * len(names), names,
                                  [seed] * len(names), [timings] * len(names)))
    else:
        parts = [run_entry(suite, n, seed, timings) for n in names]
    reports = [r for rows in parts for r in rows]
    return reports + global_rows(suite)


def report_meta(suite: str, max_order: int, seed: int) -> dict:
    return {"version": __version__, "suite": suite, "max_order": max_order, "seed": seed,
            "constants": CONSTANTS.as_dict()}
