"""Power sets ``P_e(a) = {g : a(g) = g^e}``, their maxima ``L_e``, square roots,
the generalized sets ``P_e(a | b1..be)`` and the coset lemma checkers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .automorphisms import (AutGroup, Automorphism, automorphism_group, f_map, fix,
                            identity, induced, inner, restrict, shift, t_map)
from .errors import BudgetExceeded
from .groups import (GroupTable, Subgroup, characteristic_subgroups, conjugacy_classes,
                     quotient)

LHAT_AUT_CAP = 300
LHAT_BUDGET = 5 * 10**7


@dataclass(frozen=True, eq=False)
class PowerSet:
    exponent: int
    automorphism: Automorphism
    members: tuple

    def __len__(self):
        return len(self.members)

    def verify(self) -> bool:
        g = self.automorphism.group
        xs = np.arange(g.order)
        hit = self.automorphism.image == g.power(xs, self.exponent)
        return tuple(np.flatnonzero(hit)) == self.members


@dataclass(frozen=True, eq=False)
class GeneralizedPowerSet:
    target: Automorphism
    factors: tuple
    members: tuple

    def __len__(self):
        return len(self.members)


@dataclass
class LemmaReport:
    """Outcome of one lemma family on one group."""

    check: str
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness=None):
        if ok:
            self.passed += 1
        elif len(self.failures) < 10:
            self.failures.append(witness)
        else:
            self.failures.append(None)


# -- basic counts -------------------------------------------------------------


def power_images(g: GroupTable, e: int) -> np.ndarray:
    return g.power(np.arange(g.order), e)


def p_set(a: Automorphism, e: int) -> PowerSet:
    g = a.group
    hit = a.image == power_images(g, e)
    return PowerSet(e, a, tuple(int(i) for i in np.flatnonzero(hit)))


def l_counts(aut: AutGroup, e: int) -> np.ndarray:
    """``L_e(a)`` for every automorphism, in ``aut`` order."""
    return (aut.images == power_images(aut.group, e)).sum(axis=1)


def l_value(g: GroupTable, e: int, aut: AutGroup | None = None) -> tuple[int, Automorphism]:
    """``(L_e(G), witness)`` by exhaustive search over ``Aut(G)``."""
    aut = aut or automorphism_group(g)
    counts = l_counts(aut, e)
    i = int(np.argmax(counts))
    return int(counts[i]), aut.elements[i]


def sqrt_set(g: GroupTable, x: int) -> tuple:
    sq = g.mul[np.arange(g.order), np.arange(g.order)]
    return tuple(int(i) for i in np.flatnonzero(sq == x))


def sqrt_counts(g: GroupTable) -> np.ndarray:
    """``|sqrt(x)|`` for every element ``x``."""
    sq = g.mul[np.arange(g.order), np.arange(g.order)]
    return np.bincount(sq, minlength=g.order)


def maxsqrt(g: GroupTable) -> int:
    return int(sqrt_counts(g).max())


def inner_inversion_counts(g: GroupTable) -> np.ndarray:
    """``|P_-1(tau_h)|`` for every ``h``."""
    xs = np.arange(g.order)
    out = np.empty(g.order, dtype=np.int64)
    for h in range(g.order):
        out[h] = int((g.conj(h, xs) == g.inv).sum())
    return out


def inverted_by_inner(g: GroupTable, verify: bool = True) -> tuple[int, int]:
    """Max number of elements inverted by one inner automorphism, and a witness ``h``.

    With ``verify`` the identity ``P_-1(tau_h) = sqrt(h^-2) h`` is checked for every ``h``.
    """
    counts = inner_inversion_counts(g)
    if verify:
        xs = np.arange(g.order)
        sq = g.mul[xs, xs]
        for h in range(g.order):
            inverted = np.flatnonzero(g.conj(h, xs) == g.inv)
            roots = np.flatnonzero(sq == g.power(h, -2))
            if not np.array_equal(np.sort(g.mul[roots, h]), inverted):
                raise AssertionError(f"inner inversion identity fails at h={h}")
    h = int(np.argmax(counts))
    return int(counts[h]), h


# -- generalized sets and majorants --------------------------------------------


def generalized_p_set(a: Automorphism, factors) -> GeneralizedPowerSet:
    """``{g : a(g) = b1(g) b2(g) ... be(g)}``."""
    g = a.group
    prod = np.zeros(g.order, dtype=np.int64)
    for b in factors:
        prod = g.mul[prod, b.image]
    hit = a.image == prod
    return GeneralizedPowerSet(a, tuple(factors), tuple(int(i) for i in np.flatnonzero(hit)))


def func_pair(a: Automorphism, b: Automorphism) -> int:
    """``|P_2(a | id, b)| = #{g : a(g) = g b(g)}``."""
    g = a.group
    return int((a.image == g.mul[np.arange(g.order), b.image]).sum())


def func_value(g: GroupTable, aut: AutGroup | None = None) -> tuple[int, tuple[int, int]]:
    """Max of ``|P_2(a | id, b)|`` over pairs, with the witnessing index pair."""
    aut = aut or automorphism_group(g)
    prods = g.mul[np.arange(g.order), aut.images]  # g b(g) for each b
    best, wit = -1, (0, 0)
    for i in range(len(aut)):
        counts = (prods == aut.images[i]).sum(axis=1)
        j = int(np.argmax(counts))
        if counts[j] > best:
            best, wit = int(counts[j]), (i, j)
    return best, wit


def lhat(g: GroupTable, e: int, aut: AutGroup | None = None,
         budget: int = LHAT_BUDGET, reduce_first: bool = True) -> tuple[int, tuple]:
    """Max of ``|P_e(a | b1..be)|`` over all automorphism tuples.

    Left-translating by ``b1^-1`` gives ``|P_e(a|b1,..,be)| = |P_e(b1^-1 a|id, b1^-1 b2, ..)|``,
    so with ``reduce_first`` the search fixes ``b1 = id``.  Raises
    :class:`BudgetExceeded` when the enumeration would exceed ``budget``
    table lookups.
    """
    if e < 1:
        raise ValueError("lhat needs e >= 1")
    aut = aut or automorphism_group(g)
    A, n = len(aut), g.order
    free = e if reduce_first else e + 1
    if A > LHAT_AUT_CAP or A**free * n > budget:
        raise BudgetExceeded(f"lhat(e={e}) over |Aut|={A} exceeds budget")
    imgs = aut.images.astype(np.int64)
    id_idx = aut.index(identity(g))
    best, wit = -1, None
    first = [id_idx] if reduce_first else range(A)
    for b1 in first:
        for rest in itertools.product(range(A), repeat=e - 1):
            prod = imgs[b1]
            for j in rest:
                prod = g.mul[prod, imgs[j]]
            counts = (imgs == prod).sum(axis=1)
            i = int(np.argmax(counts))
            if counts[i] > best:
                best, wit = int(counts[i]), (i, b1) + tuple(rest)
    return best, wit


# -- lemma checkers ----------------------------------------------------------------


def char_subgroups(g: GroupTable, aut: AutGroup) -> list[Subgroup]:
    return characteristic_subgroups(g, aut.images)


def check_lE(g: GroupTable, aut: AutGroup | None = None, exponents=(-1, 2, 3)) -> LemmaReport:
    """``L_e(a) <= k(G) |fix(a)|`` for every automorphism and exponent."""
    aut = aut or automorphism_group(g)
    k = conjugacy_classes(g).k
    fixed = (aut.images == np.arange(g.order)).sum(axis=1)
    rep = LemmaReport("lE")
    for e in exponents:
        counts = l_counts(aut, e)
        for i in range(len(aut)):
            ok = counts[i] <= k * fixed[i]
            rep.record(ok, None if ok else {"e": e, "aut": i, "L": int(counts[i]),
                                            "k": k, "fix": int(fixed[i])})
    return rep


def check_lTwo(g: GroupTable, aut: AutGroup | None = None) -> LemmaReport:
    """``L_2(a) <= [N : fix(a|N)] L_2(a~)`` for every characteristic ``N``."""
    return _coset_bound(g, aut, e=2)


def check_lThree(g: GroupTable, aut: AutGroup | None = None) -> LemmaReport:
    """``L_3(a) <= [N : fix(a|N)] L_-1(N) L_3(a~)`` for every characteristic ``N``."""
    return _coset_bound(g, aut, e=3)


def _coset_bound(g, aut, e):
    aut = aut or automorphism_group(g)
    rep = LemmaReport(f"l{'Two' if e == 2 else 'Three'}")
    own = l_counts(aut, e)
    for n in char_subgroups(g, aut):
        qg, proj = quotient(g, n)
        qpow = power_images(qg, e)
        ntab = n.as_group()
        lm1_n = None
        if e == 3:
            naut = automorphism_group(ntab)
            lm1_n = int(l_counts(naut, -1).max())
        for i, a in enumerate(aut.elements):
            a_q = induced(a, qg, proj)
            l_tilde = int((a_q.image == qpow).sum())
            a_n, _ = restrict(a, n)
            index = n.order // int((a_n.image == np.arange(n.order)).sum())
            bound = index * l_tilde * (lm1_n if e == 3 else 1)
            ok = own[i] <= bound
            rep.record(ok, None if ok else {"N": n.order, "aut": i,
                                            "L": int(own[i]), "bound": bound})
    return rep


def check_shiftCor(g: GroupTable, aut: AutGroup | None = None,
                   exponents=(-1, 2, 3)) -> LemmaReport:
    """Coset membership: for ``g0`` in ``P_e(a)`` and ``n`` in characteristic ``N``,
    ``n g0`` lies in ``P_e(a)`` iff ``a(n) = sh_{tau_g0}^(e)(n)``.

    Negative exponents have no shift, so only positive ones are tested.
    """
    aut = aut or automorphism_group(g)
    rep = LemmaReport("shiftCor")
    for e in [x for x in exponents if x > 0]:
        pw = power_images(g, e)
        for n in char_subgroups(g, aut):
            nn = n.array
            for i, a in enumerate(aut.elements):
                in_p = a.image == pw
                for g0 in np.flatnonzero(in_p):
                    lhs = in_p[g.mul[nn, g0]]
                    rhs = a.image[nn] == shift(inner(g, int(g0)), e, nn)
                    ok = bool(np.array_equal(lhs, rhs))
                    rep.record(ok, None if ok else {"e": e, "N": n.order, "aut": i, "g": int(g0)})
    return rep


def check_fiber_law(g: GroupTable, aut: AutGroup | None = None) -> LemmaReport:
    """Fibers of ``T_a`` are exactly the right cosets ``fix(a) x``."""
    aut = aut or automorphism_group(g)
    rep = LemmaReport("fiberLaw")
    xs = np.arange(g.order)
    for i, a in enumerate(aut.elements):
        t = t_map(a, xs)
        f = fix(a).array
        # same T-value  <=>  same right coset of fix(a)
        coset_id = np.full(g.order, -1)
        for x in xs:
            if coset_id[x] < 0:
                coset_id[g.mul[f, x]] = x
        _, t_id = np.unique(t, return_inverse=True)
        _, c_id = np.unique(coset_id, return_inverse=True)
        ok = np.array_equal(_canon(t_id), _canon(c_id))
        rep.record(ok, None if ok else {"aut": i})
    return rep


def _canon(labels: np.ndarray) -> np.ndarray:
    """Relabel a partition by first occurrence so equal partitions compare equal."""
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    return rank[np.unique(labels, return_inverse=True)[1]]


def check_shiftTwo_fibers(g: GroupTable, aut: AutGroup | None = None) -> LemmaReport:
    """Fiber of ``f_{c,a}`` through ``g1`` equals ``P_-1(tau_g1 o tau_c o a) g1``."""
    aut = aut or automorphism_group(g)
    rep = LemmaReport("shiftTwoFibers")
    xs = np.arange(g.order)
    for i, a in enumerate(aut.elements):
        for c in range(g.order):
            vals = f_map(c, a, xs)
            tc_a = inner(g, c) @ a
            for g1 in xs:
                fiber = np.flatnonzero(vals == vals[g1])
                b = inner(g, int(g1)) @ tc_a
                inv_set = np.flatnonzero(b.image == g.inv)
                ok = np.array_equal(fiber, np.sort(g.mul[inv_set, g1]))
                rep.record(ok, None if ok else {"aut": i, "c": c, "g1": int(g1)})
    return rep


def generalized_count_cosetwise(a: Automorphism, factors, n: Subgroup) -> int:
    """``|P_e(a | b1..be)|`` recomputed one coset of a characteristic ``N`` at a time.

    Within a coset ``N g0`` with ``g0`` in the set, ``n g0`` belongs to it iff
    ``a(n) = prod_j c_j b_j(n) c_j^-1`` with ``c_j = b1(g0) ... b_{j-1}(g0)``.
    """
    g = a.group
    full = np.zeros(g.order, dtype=np.int64)
    for b in factors:
        full = g.mul[full, b.image]
    in_set = a.image == full
    nn = n.array
    seen = np.zeros(g.order, dtype=bool)
    total = 0
    for x in range(g.order):
        if seen[x]:
            continue
        coset = g.mul[nn, x]
        seen[coset] = True
        hits = coset[in_set[coset]]
        if hits.size == 0:
            continue
        g0 = int(hits[0])
        prod = np.zeros(nn.size, dtype=np.int64)
        c = 0
        for b in factors:
            prod = g.mul[prod, g.conj(c, b.image[nn])]
            c = int(g.mul[c, b.image[g0]])
        total += int((a.image[nn] == prod).sum())
    return total


def check_func_gadget(g: GroupTable, a: Automorphism, b: Automorphism) -> bool:
    """If ``x, y, xy`` all satisfy ``a(z) = z b(z)`` then ``y`` commutes with ``b(x)``."""
    xs = np.arange(g.order)
    members = np.flatnonzero(a.image == g.mul[xs, b.image])
    if members.size == 0:
        return True
    in_p = np.zeros(g.order, dtype=bool)
    in_p[members] = True
    X, Y = np.meshgrid(members, members, indexing="ij")
    closed = in_p[g.mul[X, Y]]
    bx = b.image[X]
    commute = g.mul[Y, bx] == g.mul[bx, Y]
    return bool(commute[closed].all())
