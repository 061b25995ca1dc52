"""Wreath products ``A^n x| Sym_n`` and the coordinate machinery on them.

An element is a pair ``(t, s)``: a length-``n`` tuple of base indices and a
permutation given by its 0-based images.  The product is
``(t, s)(u, r) = (t_i u_{s^-1(i)}, s r)`` and the element acts on ``A^n`` by
``(t, s) . k = (t_i k_{s^-1(i)} t_i^-1)_i`` (conjugation inside the product).
When ``A`` stands for ``Aut(S)`` this is the usual action on ``Aut(S)^n``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .automorphisms import Automorphism
from .errors import PermNotTrivial, PreconditionViolated, SizeExceeded
from .groups import GroupTable, center, is_solvable

WREATH_CAP = 10**7
TABLE_CAP = 4096
TUPLE_CAP = 10**6
DETERMINATION_BASE_CAP = 120
DETERMINATION_N_CAP = 3
OPPORTUNE_EXPONENT = 0.118


def _perm_inverse(P: np.ndarray) -> np.ndarray:
    return np.argsort(P, axis=-1)


class WreathGroup:
    """Vectorised arithmetic in ``base wr Sym_n`` on batches ``(T, P)`` of shape ``(m, n)``."""

    def __init__(self, base: GroupTable, n: int):
        self.base, self.n = base, n
        self.order = base.order**n * math.factorial(n)
        if self.order > WREATH_CAP:
            raise SizeExceeded(f"|{base.label} wr S{n}| = {self.order} exceeds {WREATH_CAP}")

    def __repr__(self):
        return f"WreathGroup({self.base.label}, n={self.n})"

    def identity(self, m: int = 1):
        return np.zeros((m, self.n), dtype=np.int64), np.tile(np.arange(self.n), (m, 1))

    def mul(self, x, y):
        T, P = x
        U, Q = y
        moved = np.take_along_axis(U, _perm_inverse(P), axis=1)
        return self.base.mul[T, moved].astype(np.int64), np.take_along_axis(P, Q, axis=1)

    def inv(self, x):
        T, P = x
        # u_j = t_{s(j)}^-1
        return self.base.inv[np.take_along_axis(T, P, axis=1)].astype(np.int64), _perm_inverse(P)

    def conj(self, a, x):
        return self.mul(self.mul(a, x), self.inv(a))

    def power(self, x, e: int):
        if e < 0:
            x, e = self.inv(x), -e
        result = self.identity(x[0].shape[0])
        while e:
            if e & 1:
                result = self.mul(result, x)
            e >>= 1
            if e:
                x = self.mul(x, x)
        return result

    def random(self, rng: np.random.Generator, m: int, perm=None):
        T = rng.integers(0, self.base.order, size=(m, self.n))
        if perm is None:
            P = np.argsort(rng.random((m, self.n)), axis=1)
        else:
            P = np.tile(np.asarray(perm), (m, 1))
        return T, P

    def equal(self, x, y) -> np.ndarray:
        return (x[0] == y[0]).all(axis=1) & (x[1] == y[1]).all(axis=1)

    def random_associativity_check(self, trials: int = 10_000, seed: int = 0) -> bool:
        rng = np.random.default_rng(seed)
        a, b, c = (self.random(rng, trials) for _ in range(3))
        return bool(self.equal(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c))).all())

    # enumeration -------------------------------------------------------------
    def elements(self):
        """All elements; identity first."""
        if self.order > TABLE_CAP * 256:
            raise SizeExceeded(f"enumeration of order {self.order} refused")
        perms = np.array(list(itertools.permutations(range(self.n))), dtype=np.int64)
        tuples = all_tuples(self.base.order, self.n)
        T = np.repeat(tuples, len(perms), axis=0)
        P = np.tile(perms, (len(tuples), 1))
        return T, P

    def codes(self, x) -> np.ndarray:
        T, P = x
        b, n = self.base.order, self.n
        tcode = np.zeros(T.shape[0], dtype=np.int64)
        pcode = np.zeros(T.shape[0], dtype=np.int64)
        for i in range(n):
            tcode = tcode * b + T[:, i]
            pcode = pcode * n + P[:, i]
        return tcode * n**n + pcode

    def to_table(self) -> GroupTable:
        if self.order > TABLE_CAP:
            raise SizeExceeded(f"table of order {self.order} exceeds {TABLE_CAP}")
        X = self.elements()
        m = X[0].shape[0]
        codes = self.codes(X)
        srt = np.argsort(codes)
        sorted_codes = codes[srt]
        L = (np.repeat(X[0], m, axis=0), np.repeat(X[1], m, axis=0))
        R = (np.tile(X[0], (m, 1)), np.tile(X[1], (m, 1)))
        prod = self.codes(self.mul(L, R))
        mul = srt[np.searchsorted(sorted_codes, prod)].reshape(m, m)
        names = [f"{tuple(int(v) for v in X[0][i])}{tuple(int(v) for v in X[1][i])}" for i in range(m)]
        return GroupTable(mul, names, label=f"{self.base.label}wrS{self.n}")


def wreath_group(base: GroupTable, n: int) -> WreathGroup:
    return WreathGroup(base, n)


@dataclass(frozen=True)
class WreathElement:
    group: WreathGroup
    tuple: tuple
    perm: tuple

    @classmethod
    def make(cls, group: WreathGroup, t, perm=None) -> "WreathElement":
        perm = tuple(range(group.n)) if perm is None else tuple(int(v) for v in perm)
        if sorted(perm) != list(range(group.n)) or len(t) != group.n:
            raise ValueError("malformed wreath element")
        return cls(group, tuple(int(v) for v in t), perm)

    @classmethod
    def from_batch(cls, group: WreathGroup, x, i: int = 0) -> "WreathElement":
        return cls(group, tuple(int(v) for v in x[0][i]), tuple(int(v) for v in x[1][i]))

    @property
    def batch(self):
        return (np.array([self.tuple], dtype=np.int64), np.array([self.perm], dtype=np.int64))

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return WreathElement.from_batch(self.group, self.group.mul(self.batch, other.batch))

    def inverse(self) -> "WreathElement":
        return WreathElement.from_batch(self.group, self.group.inv(self.batch))

    def __pow__(self, e: int) -> "WreathElement":
        return WreathElement.from_batch(self.group, self.group.power(self.batch, e))

    def act(self, k: "WreathElement") -> "WreathElement":
        """``self k self^-1``."""
        return WreathElement.from_batch(self.group, self.group.conj(self.batch, k.batch))

    @property
    def is_base(self) -> bool:
        return self.perm == tuple(range(len(self.perm)))


def all_tuples(b: int, n: int) -> np.ndarray:
    if b**n > TUPLE_CAP:
        raise SizeExceeded(f"{b}^{n} tuples exceed {TUPLE_CAP}")
    return np.indices((b,) * n).reshape(n, -1).T.astype(np.int64)


# -- opportune index sets ---------------------------------------------------------


@dataclass(frozen=True)
class OpportuneFamily:
    n: int
    sigmaAlpha: tuple
    sigmaBeta: tuple
    opportune: tuple
    family: tuple

    def verify(self) -> bool:
        sa, sb = np.array(self.sigmaAlpha), np.array(self.sigmaBeta)
        opp = set(self.opportune)
        seen = set()
        for omega in self.family:
            members = set(omega)
            if not any(members == opportune_set(sa, sb, j) for j in omega if j in opp):
                return False
            if seen & members:
                return False
            seen |= members
        return len(self.family) >= math.ceil(len(opp) / 16)


def opportune_set(sa: np.ndarray, sb: np.ndarray, i: int) -> set:
    ia, ib = np.argsort(sa), np.argsort(sb)
    return {int(i), int(ia[i]), int(ib[i]), int(ib[ib[i]])}


def opportune_family(sigma_alpha, sigma_beta) -> OpportuneFamily:
    """Greedy disjoint family of opportune index sets (0-based permutations)."""
    sa, sb = np.asarray(sigma_alpha, dtype=np.int64), np.asarray(sigma_beta, dtype=np.int64)
    n = sa.size
    if sb.size != n:
        raise ValueError("permutations on different sets")
    ident = np.arange(n)
    opportune = np.flatnonzero((sa != ident) | (sb != ident))
    pool = np.zeros(n, dtype=bool)
    pool[opportune] = True
    family = []
    for i in opportune:
        if not pool[i]:
            continue
        omega = np.array(sorted(opportune_set(sa, sb, int(i))))
        family.append(tuple(int(v) for v in omega))
        pool[omega] = False
        pool[sa[omega]] = False
        pool[sb[omega]] = False
        pool[sb[sb[omega]]] = False
    return OpportuneFamily(n, tuple(sa.tolist()), tuple(sb.tolist()),
                           tuple(int(v) for v in opportune), tuple(family))


# -- coordinate equations -----------------------------------------------------------


def ambient_cubed(alpha: WreathElement, x: WreathElement) -> bool:
    """``alpha x alpha^-1 == x^3``."""
    return alpha.act(x) == x ** 3


def coordinate_condition(alpha: WreathElement, beta: WreathElement, k: WreathElement) -> bool:
    """Coordinate-wise test of ``alpha(k) = k beta(k) beta^2(k)`` for a base element ``k``."""
    if not k.is_base:
        raise PermNotTrivial("k must have trivial permutation part")
    if not ambient_cubed(alpha, beta):
        raise PreconditionViolated("alpha does not cube beta")
    A = alpha.group.base
    mul, inv = A.mul, A.inv
    n = len(k.tuple)
    sa_inv = np.argsort(alpha.perm)
    sb_inv = np.argsort(beta.perm)
    a, b, kk = alpha.tuple, beta.tuple, k.tuple

    def tau(x, y):
        return int(mul[mul[x, y], inv[x]])

    for i in range(n):
        j1 = int(sb_inv[i])
        j2 = int(sb_inv[j1])
        lhs = tau(a[i], kk[sa_inv[i]])
        bb = int(mul[b[i], b[j1]])
        rhs = int(mul[mul[kk[i], tau(b[i], kk[j1])], tau(bb, kk[j2])])
        if lhs != rhs:
            return False
    return True


def coordinate_agreement(base: GroupTable, n: int, trials: int, seed: int = 0,
                         beta_perm=None) -> dict:
    """Sample ``(alpha, beta, k)`` with ``alpha(beta) = beta^3`` and compare the
    coordinate-wise test with the ambient test ``alpha(k beta) = (k beta)^3``."""
    W = wreath_group(base, n)
    rng = np.random.default_rng(seed)
    agree = disagree = 0
    while agree + disagree < trials:
        beta = WreathElement.from_batch(W, W.random(rng, 1, perm=beta_perm))
        cube = beta ** 3
        alpha = _conjugator(W, beta, cube, rng)
        if alpha is None:
            continue
        k = WreathElement.make(W, rng.integers(0, base.order, size=n))
        if coordinate_condition(alpha, beta, k) == ambient_cubed(alpha, k * beta):
            agree += 1
        else:
            disagree += 1
    return {"trials": trials, "agree": agree, "disagree": disagree}


def _conjugator(W: WreathGroup, x: WreathElement, y: WreathElement, rng, tries: int = 2000):
    """Some ``a`` with ``a x a^-1 = y`` found by random search over ``W``; ``None`` if not found."""
    cand = W.random(rng, tries)
    xb = (np.repeat(x.batch[0], tries, axis=0), np.repeat(x.batch[1], tries, axis=0))
    yb = (np.repeat(y.batch[0], tries, axis=0), np.repeat(y.batch[1], tries, axis=0))
    hit = np.flatnonzero(W.equal(W.conj(cand, xb), yb))
    return None if hit.size == 0 else WreathElement.from_batch(W, cand, int(hit[0]))


# -- n-cycle inversion ----------------------------------------------------------------


def ncycle_inversion_count(base: GroupTable, alphas) -> tuple[int, tuple]:
    """Tuples ``s`` in ``base^n`` inverted by ``(a_1 x ... x a_n) o (1 2 ... n)``.

    Counted by brute force and by the recursion ``s_i = a_i(s_(i-1))^-1``
    (``i = 2..n``) closed by ``a_1(s_n) = s_1^-1``; the two must agree.
    """
    n = len(alphas)
    imgs = np.array([a.image for a in alphas], dtype=np.int64)
    S = all_tuples(base.order, n)
    prev = np.roll(np.arange(n), 1)  # coordinate i is fed by i-1
    acted = imgs[np.arange(n), S[:, prev]]
    brute = S[(acted == base.inv[S]).all(axis=1)]
    rec = []
    for s1 in range(base.order):
        s = [s1]
        for i in range(1, n):
            s.append(int(base.inv[imgs[i, s[-1]]]))
        if imgs[0, s[-1]] == base.inv[s1]:
            rec.append(tuple(s))
    brute_set = sorted(tuple(int(v) for v in row) for row in brute)
    if brute_set != sorted(rec):
        raise AssertionError(f"recursion {len(rec)} and brute force {len(brute_set)} disagree")
    if len(rec) > base.order:
        raise AssertionError("more inverted tuples than base elements")
    return len(rec), tuple(brute_set)


# -- coset survivors ------------------------------------------------------------------


@dataclass(frozen=True)
class SurvivorReport:
    counts: tuple
    order: int
    fraction: float
    strict: bool

    @property
    def ok(self) -> bool:
        return not self.strict or all(c <= self.order - 1 for c in self.counts)


def survivor_count(base: GroupTable, kappa: int, alpha: Automorphism, beta: Automorphism) -> int:
    """``#{s : alpha(s) = s (tau_k o beta)(s) (tau_(k beta(k)) o beta^2)(s)}``."""
    xs = np.arange(base.order)
    b1 = beta.image
    b2 = b1[b1]
    kb = int(base.mul[kappa, b1[kappa]])
    rhs = base.mul[base.mul[xs, base.conj(kappa, b1)], base.conj(kb, b2)]
    return int((alpha.image == rhs).sum())


def coset_survivor_fraction(base: GroupTable, kappas, alphas, betas) -> SurvivorReport:
    if isinstance(kappas, (int, np.integer)):
        kappas, alphas, betas = [kappas], [alphas], [betas]
    counts = tuple(survivor_count(base, int(k), a, b) for k, a, b in zip(kappas, alphas, betas))
    strict = center(base).order == 1 and not is_solvable(base)
    fraction = float(np.prod([c / base.order for c in counts]))
    return SurvivorReport(counts, base.order, fraction, strict)


# -- determination ---------------------------------------------------------------------


@dataclass(frozen=True)
class DeterminationReport:
    I: tuple
    C: int
    size_f: int
    size_k: int
    bound: float

    @property
    def ok(self) -> bool:
        return self.size_f <= self.bound + 1e-9


def c_determination_ratio(K_members, K_beta_members, I, S_order: int, n: int) -> DeterminationReport:
    """Smallest ``C`` with ``K_beta`` ``C``-determined by the coordinates ``I``, and
    the resulting bound ``|K_beta| <= C / |S|^(n-|I|) |K|``."""
    K = np.asarray(K_members).reshape(-1, n)
    F = np.asarray(K_beta_members).reshape(-1, n)
    if n > DETERMINATION_N_CAP or (K.size and K.max() >= DETERMINATION_BASE_CAP):
        raise SizeExceeded("determination counting is for tiny instances only")
    I = tuple(sorted(set(int(i) for i in I)))
    if F.shape[0] == 0:
        C = 0
    elif I:
        _, counts = np.unique(F[:, list(I)], axis=0, return_counts=True)
        C = int(counts.max())
    else:
        C = F.shape[0]
    bound = C / S_order ** (n - len(I)) * K.shape[0]
    return DeterminationReport(I, C, F.shape[0], K.shape[0], bound)


def determination_instance(base: GroupTable, S_order: int, n: int, beta_perm, seed: int = 0) -> dict:
    """Tiny full instance ``K = base^n``: pick ``beta`` with the given permutation and an
    ``alpha`` cubing it, collect ``K_beta`` and test every ``I``."""
    W = wreath_group(base, n)
    rng = np.random.default_rng(seed)
    for _ in range(1000):
        beta = WreathElement.from_batch(W, W.random(rng, 1, perm=beta_perm))
        alpha = _conjugator(W, beta, beta ** 3, rng)
        if alpha is not None:
            break
    else:
        raise PreconditionViolated("no cubing pair found")
    K = all_tuples(base.order, n)
    m = K.shape[0]
    kb = W.mul((K, np.tile(np.arange(n), (m, 1))),
               (np.repeat(beta.batch[0], m, axis=0), np.repeat(beta.batch[1], m, axis=0)))
    a = (np.repeat(alpha.batch[0], m, axis=0), np.repeat(alpha.batch[1], m, axis=0))
    hit = W.equal(W.conj(a, kb), W.power(kb, 3))
    F = K[hit]
    reports = [c_determination_ratio(K, F, I, S_order, n)
               for r in range(n + 1) for I in itertools.combinations(range(n), r)]
    fam = opportune_family(alpha.perm, beta.perm)
    M = len(fam.opportune)
    ratio = F.shape[0] / m
    lemma_bound = S_order ** (-OPPORTUNE_EXPONENT * math.ceil(M / 16)) if M else 1.0
    return {"alpha": alpha, "beta": beta, "K_beta": F, "reports": reports,
            "opportune": M, "ratio": ratio, "lemma_bound": lemma_bound}
