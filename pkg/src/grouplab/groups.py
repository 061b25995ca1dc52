"""Finite groups as dense multiplication tables.

Elements are the indices ``0..n-1`` with the identity at ``0``.  Products
follow functional composition for permutation groups: ``mul[x, y]`` is the
element ``x o y`` (apply ``y`` first).
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import ClosureExceeded, NotBijective, NotNormal, ParseError

DEFAULT_CLOSURE_CAP = 10**6
SUBGROUP_ENUM_CAP = 256
NORMAL_ENUM_CAP = 4096
FULL_CHECK_CAP = 4096
SPOT_CHECK_TRIALS = 10_000


def closure_cap() -> int:
    """Closure cap, overridable through the ``GROUPLAB_CAP`` environment variable."""
    return int(os.environ.get("GROUPLAB_CAP", DEFAULT_CLOSURE_CAP))


def index_dtype(n: int):
    return np.int16 if n < 2**15 else np.int32


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse cycle notation such as ``"(1 2)(3 4 5)"`` into 0-based images."""
    text = text.strip()
    if _CYCLE_RE.sub("", text).strip():
        raise ParseError(f"not in cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        points = [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
        cycles.append(points)
    return perm_from_cycles(cycles, degree)


def perm_from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> tuple[int, ...]:
    image = list(range(degree))
    seen: set[int] = set()
    for cyc in cycles:
        for pt in cyc:
            if not 1 <= pt <= degree:
                raise NotBijective(f"point {pt} outside 1..{degree}")
            if pt in seen:
                raise NotBijective(f"point {pt} repeated in cycles")
            seen.add(pt)
        for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
            image[a - 1] = b - 1
    return tuple(image)


def coerce_perm(p, degree: int) -> tuple[int, ...]:
    """Accept cycle strings, lists of 1-based cycles or 1-based image lists."""
    if isinstance(p, str):
        return parse_cycles(p, degree)
    p = list(p)
    if p and all(isinstance(c, (list, tuple)) for c in p):
        return perm_from_cycles(p, degree)
    if len(p) != degree:
        raise NotBijective(f"image list of length {len(p)} for degree {degree}")
    image = tuple(int(v) - 1 for v in p)
    if sorted(image) != list(range(degree)):
        raise NotBijective(f"{p} is not a bijection of 1..{degree}")
    return image


def cycle_string(perm: Sequence[int]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = perm[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


# ---------------------------------------------------------------------------
# the table
# ---------------------------------------------------------------------------


class GroupTable:
    """A finite group given by its Cayley table.

    Parameters
    ----------
    mul : array_like, shape (n, n)
        ``mul[x, y]`` is the index of ``x*y``; index 0 must be the identity.
    names : sequence of str, optional
        Display names of the elements.
    generators : sequence of int, optional
        Generating set; computed greedily when omitted.
    label : str, optional
        Human readable name, e.g. ``"S3"``.
    perms : array_like, shape (n, degree), optional
        Faithful permutation action (0-based images) when the group came
        from permutations.
    check : bool
        Validate the group axioms.  Associativity is proved with Light's
        test over the generating set up to ``FULL_CHECK_CAP`` elements and
        spot-checked on random triples above.
    """

    def __init__(self, mul, names=None, generators=None, *, label=None,
                 perms=None, check=True):
        mul = np.asarray(mul)
        n = mul.shape[0]
        if mul.ndim != 2 or mul.shape != (n, n) or n == 0:
            raise ValueError("multiplication table must be a nonempty square array")
        mul = np.ascontiguousarray(mul, dtype=index_dtype(n))
        if check:
            if mul.min() < 0 or mul.max() >= n:
                raise ValueError("table entries out of range")
            if not (np.array_equal(mul[0], np.arange(n)) and np.array_equal(mul[:, 0], np.arange(n))):
                raise ValueError("index 0 is not a two-sided identity")
            srt = np.sort(mul, axis=1)
            if not (srt == np.arange(n)).all():
                raise ValueError("table rows are not permutations")
            if not (np.sort(mul, axis=0) == np.arange(n)[:, None]).all():
                raise ValueError("table columns are not permutations")
        inv = np.argmin(mul, axis=1).astype(mul.dtype)  # position of the identity
        mul.flags.writeable = False
        inv.flags.writeable = False
        self.mul = mul
        self.inv = inv
        self.order = n
        self.identity = 0
        self.label = label or f"G{n}"
        if names is None:
            names = [f"g{i}" for i in range(n)]
        self.names = tuple(names)
        if perms is not None:
            perms = np.asarray(perms, dtype=np.int32)
            perms.flags.writeable = False
        self.perms = perms
        self.degree = None if perms is None else int(perms.shape[1])
        if generators is None:
            generators = greedy_generators(self)
        self.generators = tuple(int(s) for s in generators)
        self._memo: dict = {}
        if check:
            if not (mul[np.arange(n), inv] == 0).all():
                raise ValueError("inverse table is not two-sided")
            if closure_mask(self, self.generators).sum() != n:
                raise ValueError("generators do not generate the table")
            ok = (self.is_associative() if n <= FULL_CHECK_CAP
                  else self.random_associativity_check(SPOT_CHECK_TRIALS))
            if not ok:
                raise ValueError("table is not associative")

    def __repr__(self):
        return f"GroupTable({self.label!r}, order={self.order})"

    def __len__(self):
        return self.order

    def memo(self, key, fn):
        """Cache a derived object on the table (tables are immutable)."""
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    def is_associative(self) -> bool:
        # Light's test: (xy)s == x(ys) for all x, y and generators s.
        for s in self.generators:
            right = self.mul[:, s]
            if not np.array_equal(right[self.mul], self.mul[:, right]):
                return False
        return True

    def random_associativity_check(self, trials=10_000, seed=0) -> bool:
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, self.order, size=(3, trials))
        m = self.mul
        return bool((m[m[x, y], z] == m[x, m[y, z]]).all())

    # element arithmetic -------------------------------------------------

    def power(self, x, e: int):
        """``x**e`` for an index or an index array; negative ``e`` allowed."""
        x = np.asarray(x)
        if e < 0:
            x = self.inv[x]
            e = -e
        result = np.zeros_like(x)
        base = x
        while e:
            if e & 1:
                result = self.mul[result, base]
            e >>= 1
            if e:
                base = self.mul[base, base]
        return result if result.ndim else int(result)

    def conj(self, g: int, x):
        """``g x g^-1``."""
        return self.mul[self.mul[g, x], self.inv[g]]

    def commutator(self, x, y):
        """``x^-1 y^-1 x y``."""
        m, i = self.mul, self.inv
        return m[m[i[x], i[y]], m[x, y]]

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.zeros(n, dtype=np.int64)
        k = 0
        while (orders == 0).any():
            k += 1
            cur = self.mul[cur, np.arange(n)]
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
        orders.flags.writeable = False
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        gens = list(self.generators)
        return bool((self.mul[:, gens] == self.mul[gens, :].T).all())


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: GroupTable
    members: tuple

    @classmethod
    def from_mask(cls, parent: GroupTable, mask) -> "Subgroup":
        return cls(parent, tuple(int(i) for i in np.flatnonzero(mask)))

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return int(x) in self._set

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.label})"

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.members)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.array] = True
        return m

    @cached_property
    def key(self) -> bytes:
        return np.packbits(self.mask).tobytes()

    def issubset(self, other: "Subgroup") -> bool:
        return bool(other.mask[self.array].all())

    @cached_property
    def generators(self) -> tuple:
        return tuple(greedy_generators(self.parent, self.mask))

    def is_normal(self) -> bool:
        g = self.parent
        for s in g.generators:
            if not self.mask[g.conj(s, self.array)].all():
                return False
        return True

    def as_group(self, label=None) -> GroupTable:
        """Re-index the subgroup as a standalone table (identity stays first)."""
        g = self.parent
        idx = self.array
        pos = np.full(g.order, -1, dtype=np.int64)
        pos[idx] = np.arange(idx.size)
        sub_mul = pos[g.mul[np.ix_(idx, idx)]]
        gens = [int(pos[s]) for s in self.generators]
        perms = None if g.perms is None else g.perms[idx]
        return GroupTable(sub_mul, [g.names[i] for i in idx], gens,
                          label=label or f"{g.label}>{idx.size}", perms=perms,
                          check=False)


def closure_mask(g: GroupTable, gens, start=None, cap=None) -> np.ndarray:
    """Boolean mask of the subgroup generated by ``gens`` (and ``start``)."""
    cap = closure_cap() if cap is None else cap
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    mask = np.zeros(g.order, dtype=bool)
    mask[0] = True
    if start is not None:
        mask |= start
    frontier = np.flatnonzero(mask)
    if gens.size == 0:
        return mask
    while frontier.size:
        cand = g.mul[np.ix_(frontier, gens)].ravel()
        new = np.unique(cand[~mask[cand]])
        mask[new] = True
        frontier = new
        if mask.sum() > cap:
            raise ClosureExceeded(f"closure exceeded cap {cap}")
    return mask


def greedy_generators(g: GroupTable, mask=None) -> list[int]:
    """A small generating set of the subgroup given by ``mask`` (default: all)."""
    if mask is None:
        mask = np.ones(g.order, dtype=bool)
    target = int(mask.sum())
    orders = g.element_orders
    pool = np.flatnonzero(mask)
    # prefer elements of large order; ties by index for determinism
    pool = pool[np.lexsort((pool, -orders[pool]))]
    gens: list[int] = []
    cur = np.zeros(g.order, dtype=bool)
    cur[0] = True
    for x in pool:
        if cur.sum() == target:
            break
        if cur[x]:
            continue
        gens.append(int(x))
        cur = closure_mask(g, gens)
    return gens


def subgroup(g: GroupTable, gens) -> Subgroup:
    return Subgroup.from_mask(g, closure_mask(g, gens))


def whole(g: GroupTable) -> Subgroup:
    return Subgroup(g, tuple(range(g.order)))


def trivial(g: GroupTable) -> Subgroup:
    return Subgroup(g, (0,))


def join(g: GroupTable, subs: Iterable[Subgroup]) -> Subgroup:
    gens: list[int] = []
    for s in subs:
        gens.extend(s.generators)
    return subgroup(g, gens)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def group_from_permutations(degree: int, gens, *, label=None, cap=None) -> GroupTable:
    """Cayley table of the permutation group generated by ``gens``.

    Generators may be cycle strings (``"(1 2 3)"``), lists of 1-based cycles
    or 1-based image lists.  Raises :class:`ClosureExceeded` past ``cap``.
    """
    cap = closure_cap() if cap is None else cap
    if degree < 1:
        raise NotBijective("degree must be positive")
    perms = [coerce_perm(p, degree) for p in gens]
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    gen_idx = []
    for p in perms:
        if p not in index:
            index[p] = len(elements)
            elements.append(p)
        gen_idx.append(index[p])
    # BFS by right multiplication with the generators
    frontier = list(range(len(elements)))
    while frontier:
        nxt = []
        for x in frontier:
            px = elements[x]
            for p in perms:
                prod = tuple(px[i] for i in p)  # x o p
                if prod not in index:
                    index[prod] = len(elements)
                    elements.append(prod)
                    nxt.append(index[prod])
                    if len(elements) > cap:
                        raise ClosureExceeded(f"group exceeds closure cap {cap}")
        frontier = nxt
    n = len(elements)
    P = np.array(elements, dtype=np.int32).reshape(n, degree)
    mul = _table_from_right_actions(P, index, perms, gen_idx)
    names = [cycle_string(e) for e in elements]
    gens_clean = sorted({i for i in gen_idx if i != 0})
    return GroupTable(mul, names, gens_clean, label=label, perms=P,
                      check=True)


def _table_from_right_actions(P, index, perms, gen_idx) -> np.ndarray:
    n = P.shape[0]
    dt = index_dtype(n)
    right = []
    for p in perms:
        comp = P[:, list(p)]
        right.append(np.array([index[tuple(r)] for r in comp.tolist()], dtype=np.int64))
    # spanning tree of the right Cayley graph
    mul = np.empty((n, n), dtype=dt)
    mul[:, 0] = np.arange(n)
    done = np.zeros(n, dtype=bool)
    done[0] = True
    frontier = [0]
    while frontier:
        nxt = []
        for b in frontier:
            col = mul[:, b].astype(np.int64)
            for r in right:
                c = int(r[b])
                if not done[c]:
                    mul[:, c] = r[col]
                    done[c] = True
                    nxt.append(c)
        frontier = nxt
    return mul


def direct_product(a: GroupTable, b: GroupTable, *, label=None, cap=None) -> GroupTable:
    cap = closure_cap() if cap is None else cap
    n = a.order * b.order
    if n > cap:
        raise ClosureExceeded(f"|a|*|b| = {n} exceeds cap {cap}")
    nb = b.order
    idx = np.arange(n)
    ia, ib = idx // nb, idx % nb
    mul = (a.mul[np.ix_(ia, ia)].astype(np.int64) * nb + b.mul[np.ix_(ib, ib)])
    names = [f"({a.names[i]}, {b.names[j]})" for i, j in zip(ia, ib)]
    gens = [s * nb for s in a.generators] + list(b.generators)
    perms = None
    if a.perms is not None and b.perms is not None:
        perms = np.concatenate([a.perms[ia], b.perms[ib] + a.degree], axis=1)
    return GroupTable(mul, names, gens, label=label or f"{a.label}x{b.label}",
                      perms=perms, check=True)


# ---------------------------------------------------------------------------
# conjugacy
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjClassPartition:
    classes: tuple
    class_of: np.ndarray
    representatives: tuple

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


def conjugacy_classes(g: GroupTable) -> ConjClassPartition:
    def build():
        n = g.order
        class_of = np.full(n, -1, dtype=np.int64)
        classes = []
        everything = np.arange(n)
        for x in range(n):
            if class_of[x] >= 0:
                continue
            orbit = np.unique(g.mul[g.mul[everything, x], g.inv])
            class_of[orbit] = len(classes)
            classes.append(tuple(int(v) for v in orbit))
        class_of.flags.writeable = False
        return ConjClassPartition(tuple(classes), class_of, tuple(c[0] for c in classes))
    return g.memo("classes", build)


def centralizer(g: GroupTable, x: int) -> Subgroup:
    return Subgroup.from_mask(g, g.mul[:, x] == g.mul[x, :])


def center(g: GroupTable) -> Subgroup:
    def build():
        gens = list(g.generators)
        mask = (g.mul[:, gens] == g.mul[gens, :].T).all(axis=1)
        return Subgroup.from_mask(g, mask)
    return g.memo("center", build)


# ---------------------------------------------------------------------------
# subgroup lattice
# ---------------------------------------------------------------------------


def _sorted_subs(subs) -> list[Subgroup]:
    return sorted(subs, key=lambda s: (s.order, s.members))


def subgroups(g: GroupTable, cap: int = SUBGROUP_ENUM_CAP) -> list[Subgroup]:
    """All subgroups, by joining cyclic subgroups breadth first."""
    if g.order > cap:
        raise ClosureExceeded(f"subgroup enumeration capped at |G| <= {cap}")

    def build():
        cyclic: dict[bytes, tuple[np.ndarray, int]] = {}
        for x in range(g.order):
            m = closure_mask(g, [x])
            cyclic.setdefault(np.packbits(m).tobytes(), (m, x))
        found: dict[bytes, tuple[np.ndarray, list[int]]] = {}
        queue = []
        for key, (m, x) in cyclic.items():
            found[key] = (m, [x] if x else [])
            queue.append(key)
        cyc = list(cyclic.values())
        while queue:
            key = queue.pop()
            m, gens = found[key]
            for cm, x in cyc:
                if m[x]:
                    continue
                jm = closure_mask(g, gens + [x], start=m)
                jk = np.packbits(jm).tobytes()
                if jk not in found:
                    found[jk] = (jm, gens + [x])
                    queue.append(jk)
        return _sorted_subs(Subgroup.from_mask(g, m) for m, _ in found.values())
    return g.memo("subgroups", build)


def normal_closure(g: GroupTable, elements, within=None) -> np.ndarray:
    """Mask of the smallest subgroup containing ``elements`` normalized by ``within``.

    ``within`` is a list of conjugating elements (default: generators of g).
    """
    conjugators = list(g.generators if within is None else within)
    gens = list(dict.fromkeys(int(e) for e in elements if int(e) != 0))
    while True:
        mask = closure_mask(g, gens)
        members = np.flatnonzero(mask)
        outside = None
        for h in conjugators:
            c = g.conj(h, members)
            bad = c[~mask[c]]
            if bad.size:
                outside = int(bad[0])
                break
        if outside is None:
            return mask
        gens.append(outside)


def normal_subgroups(g: GroupTable, cap: int = NORMAL_ENUM_CAP) -> list[Subgroup]:
    """All normal subgroups, as joins of normal closures of conjugacy classes."""
    if g.order > cap:
        raise ClosureExceeded(f"normal subgroup enumeration capped at |G| <= {cap}")

    def build():
        cc = conjugacy_classes(g)
        basic = []
        seen = set()
        for cls in cc.classes[1:]:
            m = closure_mask(g, cls[:1] + tuple(cls))
            key = np.packbits(m).tobytes()
            if key not in seen:
                seen.add(key)
                basic.append((m, cls[0]))
        triv = np.zeros(g.order, dtype=bool)
        triv[0] = True
        found = {np.packbits(triv).tobytes(): triv}
        queue = [triv]
        while queue:
            m = queue.pop()
            for bm, rep in basic:
                if not (bm & ~m).any():
                    continue
                jm = _join_masks(g, m, bm)
                key = np.packbits(jm).tobytes()
                if key not in found:
                    found[key] = jm
                    queue.append(jm)
        return _sorted_subs(Subgroup.from_mask(g, m) for m in found.values())
    return g.memo("normal_subgroups", build)


def _join_masks(g: GroupTable, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # products of two normal subgroups: AB is already the join
    ia, ib = np.flatnonzero(a), np.flatnonzero(b)
    m = np.zeros(g.order, dtype=bool)
    m[g.mul[np.ix_(ia, ib)].ravel()] = True
    return m


def characteristic_subgroups(g: GroupTable, aut_images) -> list[Subgroup]:
    """Normal subgroups invariant under every supplied automorphism image array."""
    imgs = np.asarray(aut_images)
    if imgs.ndim == 1:
        imgs = imgs[None, :]
    out = []
    for n in normal_subgroups(g):
        if n.mask[imgs[:, n.array]].all():
            out.append(n)
    return out


# ---------------------------------------------------------------------------
# quotients
# ---------------------------------------------------------------------------


def quotient(g: GroupTable, n: Subgroup, label=None) -> tuple[GroupTable, np.ndarray]:
    """Coset table of ``g/n`` and the projection ``element -> coset index``."""
    if not n.is_normal():
        raise NotNormal(f"{n} is not normal in {g.label}")
    proj = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if proj[x] < 0:
            proj[g.mul[x, n.array]] = len(reps)
            reps.append(x)
    reps_a = np.array(reps)
    qmul = proj[g.mul[np.ix_(reps_a, reps_a)]]
    gens = sorted({int(proj[s]) for s in g.generators} - {0})
    names = [f"{g.names[r]}N" for r in reps]
    q = GroupTable(qmul, names, gens, label=label or f"{g.label}/{n.order}", check=False)
    proj.flags.writeable = False
    return q, proj


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


def commutator_subgroup(g: GroupTable, h: Subgroup) -> Subgroup:
    gens = list(h.generators)
    comms = {int(g.commutator(a, b)) for a in gens for b in gens}
    return Subgroup.from_mask(g, normal_closure(g, comms, within=gens))


def derived_series(g: GroupTable, h: Subgroup | None = None) -> list[Subgroup]:
    cur = whole(g) if h is None else h
    series = [cur]
    while True:
        nxt = commutator_subgroup(g, cur)
        if nxt == cur:
            return series
        series.append(nxt)
        cur = nxt


def derived_length(g: GroupTable, h: Subgroup | None = None):
    """Derived length, or ``None`` when the subgroup is not solvable."""
    series = derived_series(g, h)
    if series[-1].order != 1:
        return None
    return len(series) - 1


def is_solvable(g: GroupTable, h: Subgroup | None = None) -> bool:
    return derived_length(g, h) is not None


def lower_central_series(g: GroupTable) -> list[Subgroup]:
    """``G = g_1 > g_2 > ...`` with ``g_(i+1) = [g_i, G]``, until it stabilises."""
    cur = whole(g)
    series = [cur]
    while True:
        comms = {int(g.commutator(a, s)) for a in cur.generators for s in g.generators}
        nxt = Subgroup.from_mask(g, normal_closure(g, comms))
        if nxt == cur:
            return series
        series.append(nxt)
        cur = nxt


def is_nilpotent(g: GroupTable) -> bool:
    return lower_central_series(g)[-1].order == 1


NONSOLVABLE = "nonsolvable"


@dataclass(frozen=True)
class SeriesReport:
    derived_series: list
    dl: object
    radical: Subgroup
    socle: Subgroup


def minimal_normal_subgroups(g: GroupTable) -> list[Subgroup]:
    nontriv = [n for n in normal_subgroups(g) if n.order > 1]
    return [n for n in nontriv
            if not any(m.order < n.order and m.issubset(n) for m in nontriv)]


def solvable_radical(g: GroupTable) -> Subgroup:
    def build():
        if is_solvable(g):
            return whole(g)
        solv = [n for n in normal_subgroups(g) if is_solvable(g, n)]
        rad = trivial(g)
        # iterated join; each join of solvable normal subgroups stays solvable
        for n in solv:
            if not n.issubset(rad):
                rad = Subgroup.from_mask(g, _join_masks(g, rad.mask, n.mask))
        return rad
    return g.memo("radical", build)


def socle(g: GroupTable) -> Subgroup:
    def build():
        soc = trivial(g)
        for n in minimal_normal_subgroups(g):
            soc = Subgroup.from_mask(g, _join_masks(g, soc.mask, n.mask))
        return soc
    return g.memo("socle", build)


def series_report(g: GroupTable) -> SeriesReport:
    series = derived_series(g)
    dl = len(series) - 1 if series[-1].order == 1 else NONSOLVABLE
    return SeriesReport(series, dl, solvable_radical(g), socle(g))


def exponent(g: GroupTable) -> int:
    return reduce(math.lcm, (int(o) for o in np.unique(g.element_orders)), 1)
