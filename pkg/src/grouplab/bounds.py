"""Numeric constants, almost-abelianity predicates and the empirical checkers
built on top of them (threshold, structural and bound checks on one group)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .automorphisms import AutGroup, automorphism_group
from .errors import BudgetExceeded, SizeExceeded
from .groups import (GroupTable, Subgroup, characteristic_subgroups,
                     conjugacy_classes, derived_length, exponent, is_nilpotent,
                     is_solvable, normal_subgroups, quotient, socle, solvable_radical)
from .pgammal2 import gammaL2_group
from .powermaps import func_value, l_counts, lhat
from .report import CheckReport, compare_le

LOG_OUT = math.log(12) / math.log(20160)
PSL34_DATUM = (20160, 12)  # |PSL(3,4)| and |Out(PSL(3,4))|
ALMOST_SIMPLE_K_EXPONENT = 0.41
PO_SUBJECTS = {"A5": 4, "PSL(2,7)": 7, "A6": 9, "PSL(2,8)": 8}  # simple S -> q with Aut(S) = PGammaL(2,q)
ORDER_BOUND_EXPONENT = 0.053


def _a() -> float:
    return LOG_OUT + math.log(24, 60) / 3


def t(e: float) -> float:
    a = _a()
    return (e + a) / (1 + a)


@dataclass(frozen=True)
class PaperConstants:
    E0: float
    E1: float
    logOut: float
    dixonBase: float
    thresholds: dict = field(hash=False)

    @classmethod
    def build(cls) -> "PaperConstants":
        e0 = 0.705 * (1 + LOG_OUT)
        thresholds = {
            (-1, "abelian"): 3 / 4, (2, "abelian"): 1 / 2, (3, "abelian"): 3 / 4,
            (-1, "solvable"): 4 / 15, (2, "solvable"): 7 / 60, (3, "solvable"): 4 / 15,
            ("k", "abelian"): 5 / 8, ("k", "nilpotent"): 1 / 2, ("k", "solvable"): 1 / 12,
            ("mao", "abelian"): 1 / 2, ("mao", "solvable"): 1 / 10,
        }
        return cls(e0, 1 / (t(e0) - 1), LOG_OUT, 24 ** (1 / 3), thresholds)

    def as_dict(self) -> dict:
        return {"E0": self.E0, "E1": self.E1, "logOut": self.logOut, "dixonBase": self.dixonBase,
                "thresholds": {f"{k[0]}:{k[1]}": v for k, v in self.thresholds.items()}}


CONSTANTS = PaperConstants.build()


@dataclass(frozen=True)
class AlmostParams:
    I: float
    L: float


def order_bound(rho: float, C: float) -> float:
    """Upper bound ``max(C, rho^(-1/0.053))`` on the simple socle factor."""
    return max(C, rho ** (-1 / ORDER_BOUND_EXPONENT))


def exponent_bound(rho: float, C: float, O: float) -> float:
    """Upper bound on the socle exponent ``n`` given ``C`` and the max outer order ``O``."""
    m = 16 * math.log(rho, 60) / -ORDER_BOUND_EXPONENT
    base = 1 - 1 / order_bound(rho, C)
    return m + math.log(rho / O**m, base)


# -- per-group cached statistics ---------------------------------------------


class GroupStats:
    """Lazily computed invariants of one table, cached on the table itself."""

    def __init__(self, g: GroupTable):
        self.g = g

    @classmethod
    def of(cls, g: GroupTable) -> "GroupStats":
        return g.memo("stats", lambda: cls(g))

    @cached_property
    def aut(self) -> AutGroup:
        return automorphism_group(self.g)

    def L(self, e: int) -> int:
        return self.g.memo(("L", e), lambda: int(l_counts(self.aut, e).max()))

    def l(self, e: int) -> float:
        return self.L(e) / self.g.order

    @cached_property
    def k(self) -> int:
        return conjugacy_classes(self.g).k

    @cached_property
    def mao(self) -> int:
        return int(self.aut.orders.max())

    @cached_property
    def func(self) -> int:
        return func_value(self.g, self.aut)[0]

    def lhat(self, e: int) -> int:
        return self.g.memo(("lhat", e), lambda: lhat(self.g, e, self.aut)[0])

    @cached_property
    def exp(self) -> int:
        return exponent(self.g)

    @cached_property
    def radical(self) -> Subgroup:
        return solvable_radical(self.g)

    @cached_property
    def radical_index(self) -> int:
        return self.g.order // self.radical.order

    @cached_property
    def radical_dl(self) -> int:
        return derived_length(self.g, self.radical)

    @cached_property
    def solvable(self) -> bool:
        return is_solvable(self.g)

    @cached_property
    def dl(self):
        return derived_length(self.g)

    @cached_property
    def nilpotent(self) -> bool:
        return is_nilpotent(self.g)

    @cached_property
    def characteristic(self) -> list:
        """``(N, N as a table, G/N)`` for every characteristic subgroup."""
        out = []
        for n in characteristic_subgroups(self.g, self.aut.images):
            q, _ = quotient(self.g, n)
            out.append((n, n.as_group(), q))
        return out

    @cached_property
    def rad_quotient(self) -> GroupTable:
        return quotient(self.g, self.radical)[0]


# -- named group-theoretic functions -------------------------------------------

GTF = {
    "l-1": lambda s: s.l(-1),
    "l2": lambda s: s.l(2),
    "l3": lambda s: s.l(3),
    "L-1": lambda s: s.L(-1),
    "k_rel": lambda s: s.k / s.g.order,
    "k": lambda s: s.k,
    "exp": lambda s: s.exp,
    "mao_rel": lambda s: s.mao / s.g.order,
    "func_rel": lambda s: s.func / s.g.order,
    "lhat2_rel": lambda s: s.lhat(2) / s.g.order,
    "lhat3_rel": lambda s: s.lhat(3) / s.g.order,
}
CQ_INCREASING = ("l-1", "l2", "l3", "mao_rel")
C_SUBMULTIPLICATIVE = ("L-1", "k_rel", "k", "func_rel", "lhat2_rel", "lhat3_rel")


def gtf_value(name: str, g: GroupTable):
    return GTF[name](GroupStats.of(g))


def is_almost_solvable(g: GroupTable, I: float) -> bool:
    return GroupStats.of(g).radical_index <= I


def is_almost_abelian(g: GroupTable, I: float, L: float) -> bool:
    s = GroupStats.of(g)
    return s.radical_index <= I and s.radical_dl <= L


def is_almost_simple(g: GroupTable) -> bool:
    """Nonabelian simple socle with trivial centralizer."""
    soc = socle(g)
    if soc.order == 1:
        return False
    st = soc.as_group()
    if st.is_abelian or len(normal_subgroups(st)) != 2:
        return False
    gens = list(soc.generators)
    commutes = (g.mul[:, gens] == g.mul[gens, :].T).all(axis=1)
    return int(commutes.sum()) == 1


# -- checkers ----------------------------------------------------------------


def _log(x: float, base: float) -> float:
    return math.log(x) / math.log(base)


def check_mainTheo(g: GroupTable) -> list[CheckReport]:
    s = GroupStats.of(g)
    E1 = CONSTANTS.E1
    out = []
    rho = s.l(-1)
    I1, L1 = rho**E1, max(2.0, _log(2 * rho, 3 / 4) + 3)
    st = _worst(compare_le(s.radical_index, I1), compare_le(s.radical_dl, L1))
    out.append(CheckReport(g.label, "mainTheo(1)", st,
                           {"rho": rho, "index": s.radical_index, "index_bound": I1,
                            "dl_rad": s.radical_dl, "dl_bound": L1}))
    rho = s.l(2)
    I2, L2 = rho**-4, 2 * _log(rho, 3 / 4) + 1
    st = _worst(compare_le(s.radical_index, I2), compare_le(s.radical_dl, L2))
    out.append(CheckReport(g.label, "mainTheo(2)", st,
                           {"rho": rho, "index": s.radical_index, "index_bound": I2,
                            "dl_rad": s.radical_dl, "dl_bound": L2}))
    out.append(CheckReport(g.label, "mainTheo(3)", "info",
                           {"rho": s.l(3), "index": s.radical_index, "dl_rad": s.radical_dl}))
    return out


def _worst(*statuses) -> str:
    for st in ("fail", "marginal"):
        if st in statuses:
            return st
    return "pass"


def check_thresholds(g: GroupTable) -> CheckReport:
    """Ratios above an abelian/nilpotent/solvable threshold force that property."""
    s = GroupStats.of(g)
    n = g.order
    values = {-1: s.L(-1) / n, 2: s.L(2) / n, 3: s.L(3) / n, "k": s.k / n, "mao": s.mao / n}
    holds = {"abelian": g.is_abelian, "nilpotent": s.nilpotent, "solvable": s.solvable}
    violations, statuses = [], []
    for (key, prop), bound in CONSTANTS.thresholds.items():
        if holds[prop]:
            continue
        st = compare_le(values[key], bound)
        statuses.append(st)
        if st != "pass":
            violations.append({"value": str(key), "property": prop, "ratio": values[key], "bound": bound})
    witness = {"ratios": {str(k): v for k, v in values.items()},
               "attains_inversion_bound": (not g.is_abelian) and 4 * s.L(-1) == 3 * n}
    if violations:
        witness["violations"] = violations
    return CheckReport(g.label, "thresholds", _worst(*statuses), witness)


def check_func_bounds(g: GroupTable) -> list[CheckReport]:
    """``Func > 3/4 |G|`` forces abelian; solvable with ``dl >= 2`` forces ``Func <= 3/4 |G|``."""
    s = GroupStats.of(g)
    out = []
    big = 4 * s.func > 3 * g.order
    out.append(CheckReport(g.label, "func:abelian", "fail" if big and not g.is_abelian else "pass",
                           {"func": s.func, "order": g.order, "abelian": g.is_abelian}))
    if s.solvable and s.dl >= 2:
        out.append(CheckReport(g.label, "func:dl", compare_le(s.func / g.order, 3 / 4),
                               {"func": s.func, "order": g.order, "dl": s.dl}))
    return out


def check_gtf_properties(name: str, g: GroupTable) -> list[CheckReport]:
    """Test the claimed characteristic-subgroup inequality of ``name`` on every ``N char G``."""
    s = GroupStats.of(g)
    rows, statuses, skipped = [], [], 0
    cs_witness = None
    try:
        fg = gtf_value(name, g)
    except (BudgetExceeded, SizeExceeded) as exc:
        return [CheckReport(g.label, f"gtf:{name}", "skipped", {"reason": str(exc)})]
    for n, nt, qt in s.characteristic:
        try:
            fn, fq = gtf_value(name, nt), gtf_value(name, qt)
        except (BudgetExceeded, SizeExceeded):
            skipped += 1
            continue
        if name in CQ_INCREASING:
            st = compare_le(fg, fq)
        elif name == "exp":
            st = "pass" if (fn * fq) % fg == 0 else "fail"
        else:
            st = compare_le(fg, fn * fq)
        statuses.append(st)
        if st != "pass":
            rows.append({"N": n.order, "f(G)": fg, "f(N)": fn, "f(G/N)": fq})
        if name == "l2" and fg > fn and cs_witness is None:
            cs_witness = {"N": n.order, "l2(G)": fg, "l2(N)": fn}
    if not statuses:
        status = "skipped"
    else:
        status = _worst(*statuses)
    witness = {"value": fg, "tested": len(statuses), "skipped": skipped}
    if rows:
        witness["violations"] = rows
    out = [CheckReport(g.label, f"gtf:{name}", status, witness)]
    if name == "l2" and cs_witness is not None:
        out.append(CheckReport(g.label, "gtf:l2-not-CS-increasing", "info", cs_witness))
    return out


def check_almost_solv(g: GroupTable) -> CheckReport:
    """``f(G) <= f(G/Rad(G))`` for every CQ-increasing function."""
    s = GroupStats.of(g)
    q = s.rad_quotient
    rows, statuses = {}, []
    for name in CQ_INCREASING:
        fg, fq = gtf_value(name, g), gtf_value(name, q)
        statuses.append(compare_le(fg, fq))
        rows[name] = [fg, fq]
    return CheckReport(g.label, "almostSolv", _worst(*statuses), rows)


def check_external_bounds(g: GroupTable) -> list[CheckReport]:
    s = GroupStats.of(g)
    out = []
    if g.degree is not None:
        out.append(CheckReport(g.label, "classBound", compare_le(s.k, 2 ** (g.degree - 1)),
                               {"k": s.k, "degree": g.degree}))
        if s.solvable:
            bound = 24 ** ((g.degree - 1) / 3)  # dixonBase^(d-1), exact at d = 4
            out.append(CheckReport(g.label, "dixon", compare_le(g.order, bound),
                                   {"order": g.order, "degree": g.degree, "bound": bound}))
    if is_almost_simple(g):
        bound = g.order ** ALMOST_SIMPLE_K_EXPONENT
        out.append(CheckReport(g.label, "almostSimpleK", compare_le(s.k, bound),
                               {"k": s.k, "bound": bound}))
    return out


def maxsqrt_pgammal2(q: int) -> int:
    """Largest number of square roots of one element of PGammaL(2,q)."""
    G = gammaL2_group(q)
    X = G.elements()
    return int(np.bincount(G.index_of(G.mul(X, X)), minlength=X.shape[1]).max())


def check_po_bound(name: str, q: int) -> list[CheckReport]:
    """``maxsqrt(Aut(S)) <= |S|^E0`` and ``log_|S| |Out(S)| <= logOut`` with ``Aut(S) = PGammaL(2,q)``."""
    G = gammaL2_group(q)
    d = math.gcd(2, q - 1)
    order_s = (q**3 - q) // d
    ms = maxsqrt_pgammal2(q)
    bound = order_s ** CONSTANTS.E0
    out_order = G.order // order_s
    log_out = math.log(out_order) / math.log(order_s)
    return [
        CheckReport(name, "poBound", compare_le(ms, bound),
                    {"aut": f"PGammaL(2,{q})", "maxsqrt": ms, "bound": bound, "margin": bound - ms}),
        CheckReport(name, "outBound", compare_le(log_out, CONSTANTS.logOut),
                    {"out": out_order, "log": log_out, "bound": CONSTANTS.logOut}),
    ]


def constant_rows() -> list[CheckReport]:
    order, out = PSL34_DATUM
    return [CheckReport("PSL(3,4)", "outData", "info",
                        {"order": order, "out": out, "log": math.log(out) / math.log(order)})]
