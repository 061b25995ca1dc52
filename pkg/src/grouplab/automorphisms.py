"""Automorphisms of table groups: brute-force search, inner automorphisms,
fixed points, the translation map ``T_a(g) = g^-1 a(g)`` and shifts."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import AutCapExceeded, NotAHomomorphism, NotBijective, SizeExceeded
from .groups import (GroupTable, Subgroup, center, conjugacy_classes,
                     FULL_CHECK_CAP, SPOT_CHECK_TRIALS)

AUT_CAP = 100_000
AUT_GROUP_ORDER_CAP = 512
_BATCH = 1 << 22  # entries per vectorised block


class Automorphism:
    """An automorphism stored as its full image array."""

    __slots__ = ("group", "image", "_key")

    def __init__(self, group: GroupTable, image, check: bool = True):
        image = np.asarray(image, dtype=group.mul.dtype)
        if check:
            _validate(group, image)
        image.flags.writeable = False
        self.group = group
        self.image = image
        self._key = None

    def __call__(self, x):
        out = self.image[x]
        return out if np.ndim(out) else int(out)

    def __repr__(self):
        return f"Automorphism({self.group.label}, order={self.order})"

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = self.image.tobytes()
        return self._key

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.group is other.group and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __matmul__(self, other: "Automorphism") -> "Automorphism":
        """Composition ``self o other``."""
        return Automorphism(self.group, self.image[other.image], check=False)

    def inverse(self) -> "Automorphism":
        inv = np.empty_like(self.image)
        inv[self.image] = np.arange(self.group.order, dtype=inv.dtype)
        return Automorphism(self.group, inv, check=False)

    def __pow__(self, e: int) -> "Automorphism":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        img = np.arange(self.group.order, dtype=self.image.dtype)
        b = base.image
        while e:
            if e & 1:
                img = b[img]
            e >>= 1
            if e:
                b = b[b]
        return Automorphism(self.group, img, check=False)

    @property
    def is_identity(self) -> bool:
        return bool((self.image == np.arange(self.group.order)).all())

    @property
    def order(self) -> int:
        return permutation_order(self.image)


def permutation_order(perm) -> int:
    perm = np.asarray(perm)
    seen = np.zeros(perm.size, dtype=bool)
    result = 1
    for start in range(perm.size):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        result = math.lcm(result, length)
    return result


def _validate(g: GroupTable, image: np.ndarray):
    n = g.order
    if image.shape != (n,) or image.min() < 0 or image.max() >= n:
        raise NotBijective("image array has the wrong shape or range")
    if np.unique(image).size != n:
        raise NotBijective("image array is not a bijection")
    if image[0] != 0:
        raise NotAHomomorphism("identity is not fixed")
    if n <= FULL_CHECK_CAP:
        # a bijection respecting right multiplication by generators is a homomorphism
        for s in g.generators:
            if not np.array_equal(image[g.mul[:, s]], g.mul[image, image[s]]):
                raise NotAHomomorphism(f"fails on generator {s}")
    else:
        rng = np.random.default_rng(0)
        x, y = rng.integers(0, n, size=(2, SPOT_CHECK_TRIALS))
        if not (image[g.mul[x, y]] == g.mul[image[x], image[y]]).all():
            raise NotAHomomorphism("fails on a random pair")


def identity(g: GroupTable) -> Automorphism:
    return Automorphism(g, np.arange(g.order), check=False)


def inner(g: GroupTable, x: int) -> Automorphism:
    """``tau_x : y -> x y x^-1``."""
    return Automorphism(g, g.conj(x, np.arange(g.order)), check=False)


def fix(a: Automorphism) -> Subgroup:
    g = a.group
    return Subgroup.from_mask(g, a.image == np.arange(g.order))


def t_map(a: Automorphism, x):
    """``T_a(x) = x^-1 a(x)`` (vectorised over ``x``)."""
    g = a.group
    out = g.mul[g.inv[x], a.image[x]]
    return out if np.ndim(out) else int(out)


def shift(a: Automorphism, e: int, x):
    """``x a(x) a^2(x) ... a^(e-1)(x)``; ``e = 0`` gives the identity."""
    if e < 0:
        raise ValueError("shift exponent must be >= 0")
    g = a.group
    x = np.asarray(x)
    result = np.zeros_like(x)
    cur = x
    for _ in range(e):
        result = g.mul[result, cur]
        cur = a.image[cur]
    return result if result.ndim else int(result)


def f_map(c: int, a: Automorphism, x):
    """``x c a(x)``."""
    g = a.group
    out = g.mul[g.mul[x, c], a.image[x]]
    return out if np.ndim(out) else int(out)


def restrict(a: Automorphism, n: Subgroup) -> tuple[Automorphism, GroupTable]:
    """Restriction to an ``a``-invariant subgroup, as an automorphism of ``n.as_group()``."""
    sub = n.as_group()
    pos = np.full(a.group.order, -1, dtype=np.int64)
    pos[n.array] = np.arange(n.order)
    img = pos[a.image[n.array]]
    if (img < 0).any():
        raise NotAHomomorphism("subgroup is not invariant")
    return Automorphism(sub, img, check=False), sub


def induced(a: Automorphism, quotient: GroupTable, proj: np.ndarray) -> Automorphism:
    """The automorphism induced on ``G/N`` (``N`` must be ``a``-invariant)."""
    reps = np.full(quotient.order, -1, dtype=np.int64)
    reps[proj[::-1]] = np.arange(proj.size)[::-1]
    img = proj[a.image[reps]]
    return Automorphism(quotient, img, check=True)


# ---------------------------------------------------------------------------
# the automorphism group
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class AutGroup:
    group: GroupTable
    elements: list
    inner_count: int
    images: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def _index(self) -> dict:
        return {a.key: i for i, a in enumerate(self.elements)}

    def index(self, a: Automorphism) -> int:
        return self._index[a.key]

    def __contains__(self, a: Automorphism) -> bool:
        return a.key in self._index

    @cached_property
    def orders(self) -> np.ndarray:
        """Element orders of all automorphisms (vectorised power iteration)."""
        imgs = self.images.astype(np.int64)
        n = self.group.order
        ident = np.arange(n)
        orders = np.zeros(len(self), dtype=np.int64)
        cur = imgs.copy()
        rows = np.arange(len(self))
        k = 1
        while rows.size:
            done = (cur == ident).all(axis=1)
            orders[rows[done]] = k
            rows, cur = rows[~done], cur[~done]
            cur = np.take_along_axis(imgs[rows], cur, axis=1)
            k += 1
        return orders

    def is_closed(self) -> bool:
        keys = set(self._index)
        for a in self.elements:
            if a.inverse().key not in keys:
                return False
            for b in self.generators():
                if (a @ b).key not in keys:
                    return False
        return True

    def generators(self) -> list:
        """A small generating set, found greedily."""
        gens = []
        reached = {identity(self.group).key}
        for a in sorted(self.elements, key=lambda a: -self.orders[self.index(a)]):
            if len(reached) == len(self):
                break
            if a.key in reached:
                continue
            gens.append(a)
            frontier = [identity(self.group)]
            reached = {frontier[0].key}
            while frontier:
                nxt = []
                for x in frontier:
                    for s in gens:
                        y = x @ s
                        if y.key not in reached:
                            reached.add(y.key)
                            nxt.append(y)
                frontier = nxt
        return gens

    def inner_automorphisms(self) -> list:
        g = self.group
        seen = {}
        for x in range(g.order):
            a = inner(g, x)
            seen.setdefault(a.key, a)
        return list(seen.values())


def _profile(g: GroupTable) -> np.ndarray:
    """Automorphism invariants per element: order and class size."""
    cc = conjugacy_classes(g)
    sizes = np.array(cc.sizes)[cc.class_of]
    return np.asarray(g.element_orders) * (g.order + 1) + sizes


def _spanning_tree(g: GroupTable, gens) -> tuple[np.ndarray, list]:
    """BFS order of <gens> and tree edges ``(parent, generator position, child)``."""
    members = [0]
    seen = {0}
    edges = []
    i = 0
    while i < len(members):
        x = members[i]
        for j, s in enumerate(gens):
            y = int(g.mul[x, s])
            if y not in seen:
                seen.add(y)
                members.append(y)
                edges.append((x, j, y))
        i += 1
    return np.array(members), edges


def _extend(g: GroupTable, edges, imgs: np.ndarray, members) -> np.ndarray:
    """Extend generator images (rows of ``imgs``) along tree edges."""
    B = imgs.shape[0]
    M = np.zeros((B, g.order), dtype=np.int64)
    for parent, j, child in edges:
        M[:, child] = g.mul[M[:, parent], imgs[:, j]]
    return M


def _consistent(g: GroupTable, gens, imgs, M, members) -> np.ndarray:
    ok = np.ones(imgs.shape[0], dtype=bool)
    for j, s in enumerate(gens):
        lhs = M[:, g.mul[members, s]]
        rhs = g.mul[M[:, members], imgs[:, j][:, None]]
        ok &= (lhs == rhs).all(axis=1)
    return ok


def automorphism_group(g: GroupTable, cap: int = AUT_CAP, limit: int | None = None) -> AutGroup:
    """All automorphisms of ``g`` by backtracking over generator images.

    Candidate images of each generator share its order and class size; partial
    assignments are extended along a spanning tree of the prefix subgroup and
    kept only if they define a homomorphism on it.  ``limit`` stops the
    search early (the result is then incomplete and flagged by ``len``).
    """
    if g.order > AUT_GROUP_ORDER_CAP:
        raise SizeExceeded(f"automorphism search needs |G| <= {AUT_GROUP_ORDER_CAP}")
    if limit is None:
        key = ("aut", cap)
        if key in g._memo:
            return g._memo[key]
    gens = list(g.generators)
    prof = _profile(g)
    cands = [np.flatnonzero(prof == prof[s]) for s in gens]
    # prefix data
    prefix = []
    for j in range(1, len(gens) + 1):
        members, edges = _spanning_tree(g, gens[:j])
        prefix.append((members, edges))
    partial = np.zeros((1, 0), dtype=np.int64)
    maps = np.zeros((1, g.order), dtype=np.int64)  # trivial group
    for j, (members, edges) in enumerate(prefix):
        blocks = []
        # expand partial assignments by every candidate for generator j
        step = max(1, _BATCH // (g.order * len(cands[j])))
        for start in range(0, partial.shape[0], step):
            part = partial[start:start + step]
            imgs = np.concatenate([np.repeat(part, len(cands[j]), axis=0),
                                   np.tile(cands[j], part.shape[0])[:, None]], axis=1)
            M = _extend(g, edges, imgs, members)
            ok = _consistent(g, gens[: j + 1], imgs, M, members)
            if j == len(gens) - 1:
                Mi = M[ok]
                bij = (np.sort(Mi, axis=1) == np.arange(g.order)).all(axis=1)
                ok_idx = np.flatnonzero(ok)[bij]
                blocks.append((imgs[ok_idx], Mi[bij]))
                found = sum(b[0].shape[0] for b in blocks)
                if limit is not None and found >= limit:
                    break
                if found > cap:
                    raise AutCapExceeded(f"|Aut({g.label})| exceeds cap {cap}")
            else:
                blocks.append((imgs[ok], None))
                if sum(b[0].shape[0] for b in blocks) > 50 * cap:
                    raise AutCapExceeded(f"partial assignments for {g.label} exceed budget")
        if j < len(gens) - 1:
            partial = np.concatenate([b[0] for b in blocks]) if blocks else np.zeros((0, j + 1), np.int64)
        else:
            maps = np.concatenate([b[1] for b in blocks]) if blocks else np.zeros((0, g.order), np.int64)
    if limit is not None:
        maps = maps[:limit]
    order = np.lexsort(maps.T[::-1])
    maps = maps[order].astype(g.mul.dtype)
    elements = [Automorphism(g, m, check=False) for m in maps]
    inner_count = g.order // center(g).order
    result = AutGroup(g, elements, inner_count, maps)
    if limit is None:
        g._memo[("aut", cap)] = result
    return result


def mao(g: GroupTable, aut: AutGroup | None = None) -> int:
    """Maximum order of an automorphism."""
    aut = aut or automorphism_group(g)
    return int(aut.orders.max())


def is_complete(g: GroupTable) -> bool:
    """Trivial center and every automorphism inner."""
    if center(g).order != 1:
        return False
    aut = automorphism_group(g, limit=g.order + 1)
    return len(aut) == g.order


def inversion(g: GroupTable) -> Automorphism:
    """``x -> x^-1``; an automorphism only for abelian groups."""
    return Automorphism(g, g.inv.copy(), check=True)


def power_automorphism(g: GroupTable, e: int) -> Automorphism:
    return Automorphism(g, g.power(np.arange(g.order), e), check=True)
