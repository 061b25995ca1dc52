"""PGammaL(2,q) = PGL(2,q) x| Gal(F_q/F_p) in normalized matrix form.

An element is ``(a, b, c, d, M)``: a projective matrix ``[[a, b], [c, d]]``
scaled so that ``d = 1``, or ``d = 0`` and ``b = 1``, together with the field
automorphism ``Frob^M``.  The product is
``(A, Frob^M) (B, Frob^N) = (A Frob^M(B), Frob^(M+N))``.

Batches of elements are int64 arrays of shape ``(5, n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import ScanTooLarge, SizeExceeded
from .fields import FqField, field_of_order
from .groups import GroupTable

MAX_Q = 2**13
SCAN_CAP = 5 * 10**6
TABLE_CAP = 4096
_CHUNK = 1 << 20


class GammaL2:
    """Arithmetic in PGammaL(2,q) on batches of normalized elements."""

    def __init__(self, q: int):
        if q > MAX_Q:
            raise SizeExceeded(f"q = {q} exceeds {MAX_Q}")
        self.F: FqField = field_of_order(q)
        self.q, self.p, self.K = q, self.F.p, self.F.K
        self.order = (q**3 - q) * self.K

    def __repr__(self):
        return f"GammaL2(q={self.q})"

    # field helpers -----------------------------------------------------------
    def frob(self, x, M):
        """``x ** (p ** M)`` with ``M`` a scalar or an array matching ``x``."""
        x = np.asarray(x, dtype=np.int64)
        if np.ndim(M) == 0:
            return self.F.frob(x, int(M))
        M = np.asarray(M) % self.K
        out = x.copy()
        for m in np.unique(M):
            if m:
                sel = M == m
                out[sel] = self.F.frob(x[sel], int(m))
        return out

    def _dot(self, *pairs):
        F = self.F
        acc = None
        for u, v in pairs:
            t = F.mul(u, v)
            acc = t if acc is None else F.add(acc, t)
        return acc

    # normal form ---------------------------------------------------------
    def normalize(self, a, b, c, d, M) -> np.ndarray:
        F = self.F
        a, b, c, d = (np.asarray(v, dtype=np.int64) for v in (a, b, c, d))
        det = F.sub(F.mul(a, d), F.mul(b, c))
        if (det == 0).any():
            raise ValueError("singular matrix")
        scale = np.where(d != 0, d, b)
        s = F.inv(scale)
        out = np.stack([F.mul(a, s), F.mul(b, s), F.mul(c, s), F.mul(d, s),
                        np.asarray(M, dtype=np.int64) % self.K + 0 * a])
        return out

    def is_normalized(self, x) -> np.ndarray:
        a, b, c, d, M = x
        return ((d == 1) | ((d == 0) & (b == 1))) & (M >= 0) & (M < self.K)

    # group law -------------------------------------------------------------
    def identity(self, n: int = 1) -> np.ndarray:
        out = np.zeros((5, n), dtype=np.int64)
        out[0] = out[3] = 1
        return out

    def mul(self, x, y) -> np.ndarray:
        a, b, c, d, M = x
        e, f, g, h = (self.frob(y[i], M) for i in range(4))
        N = y[4]
        return self.normalize(self._dot((a, e), (b, g)), self._dot((a, f), (b, h)),
                              self._dot((c, e), (d, g)), self._dot((c, f), (d, h)), M + N)

    def inv(self, x) -> np.ndarray:
        a, b, c, d, M = x
        F = self.F
        back = (-M) % self.K
        adj = [d, F.neg(b), F.neg(c), a]
        return self.normalize(*(self.frob(v, back) for v in adj), back)

    def power(self, x, e: int) -> np.ndarray:
        x = np.asarray(x)
        if e < 0:
            x, e = self.inv(x), -e
        result = self.identity(x.shape[1])
        while e:
            if e & 1:
                result = self.mul(result, x)
            e >>= 1
            if e:
                x = self.mul(x, x)
        return result

    def conj(self, a, b) -> np.ndarray:
        """``a b a^-1`` by generic multiplication."""
        return self.mul(self.mul(a, b), self.inv(a))

    # enumeration and coding -----------------------------------------------
    def codes(self, x) -> np.ndarray:
        q = self.q
        a, b, c, d, M = x
        return (((a * q + b) * q + c) * q + d) * self.K + M

    @lru_cache(maxsize=None)
    def elements(self) -> np.ndarray:
        """All elements, identity first, then increasing code."""
        if self.order > SCAN_CAP:
            raise ScanTooLarge(f"|PGammaL(2,{self.q})| = {self.order} exceeds {SCAN_CAP}")
        F, q = self.F, self.q
        r = np.arange(q, dtype=np.int64)
        A, B, C = np.meshgrid(r, r, r, indexing="ij")
        A, B, C = A.ravel(), B.ravel(), C.ravel()
        ok = A != F.mul(B, C)  # det with d = 1
        first = np.stack([A[ok], B[ok], C[ok], np.ones(ok.sum(), dtype=np.int64)])
        A2, C2 = np.meshgrid(r, r[1:], indexing="ij")
        second = np.stack([A2.ravel(), np.ones(A2.size, dtype=np.int64), C2.ravel(),
                           np.zeros(A2.size, dtype=np.int64)])
        mats = np.concatenate([first, second], axis=1)
        Ms = np.repeat(np.arange(self.K), mats.shape[1])
        allx = np.concatenate([np.tile(mats, self.K), Ms[None, :]], axis=0)
        ident_code = self.codes(self.identity())[0]
        codes = self.codes(allx)
        order = np.argsort(codes != ident_code, kind="stable")  # identity first
        allx = allx[:, order]
        rest = np.argsort(self.codes(allx[:, 1:]), kind="stable") + 1
        allx = np.concatenate([allx[:, :1], allx[:, rest]], axis=1)
        allx.flags.writeable = False
        return allx

    @lru_cache(maxsize=None)
    def _code_index(self):
        codes = self.codes(self.elements())
        srt = np.argsort(codes)
        return codes[srt], srt

    def index_of(self, x) -> np.ndarray:
        sorted_codes, srt = self._code_index()
        c = self.codes(x)
        pos = np.searchsorted(sorted_codes, c)
        if (pos >= sorted_codes.size).any() or (sorted_codes[np.minimum(pos, sorted_codes.size - 1)] != c).any():
            raise ValueError("element not in normal form")
        return srt[pos]

    def generators(self) -> np.ndarray:
        F = self.F
        w = F.primitive
        gens = [(1, 1, 0, 1, 0), (w, 0, 0, 1, 0), (0, 1, 1, 0, 0)]
        if self.K > 1:
            gens.append((1, 0, 0, 1, 1))
        return np.array(gens, dtype=np.int64).T

    def random(self, rng: np.random.Generator, n: int, M=None) -> np.ndarray:
        """``n`` uniformly random elements (optionally with a fixed Frobenius power)."""
        q, F = self.q, self.F
        out = np.empty((5, 0), dtype=np.int64)
        while out.shape[1] < n:
            a, b, c, d = rng.integers(0, q, size=(4, 2 * n))
            det = F.sub(F.mul(a, d), F.mul(b, c))
            keep = det != 0
            Ms = rng.integers(0, self.K, size=2 * n) if M is None else np.full(2 * n, M)
            x = self.normalize(a[keep], b[keep], c[keep], d[keep], Ms[keep])
            out = np.concatenate([out, x], axis=1)
        return out[:, :n]

    def to_table(self) -> GroupTable:
        """Cayley table (identity first); only for orders up to ``TABLE_CAP``."""
        if self.order > TABLE_CAP:
            raise SizeExceeded(f"table of order {self.order} exceeds {TABLE_CAP}")
        X = self.elements()
        n = X.shape[1]
        mul = np.empty((n, n), dtype=np.int64)
        rows = max(1, _CHUNK // n)
        for start in range(0, n, rows):
            idx = np.arange(start, min(n, start + rows))
            left = np.repeat(X[:, idx], n, axis=1)
            right = np.tile(X, idx.size)
            mul[idx] = self.index_of(self.mul(left, right)).reshape(idx.size, n)
        gens = sorted(set(self.index_of(self.generators()).tolist()) - {0})
        names = [self.name(X[:, i]) for i in range(n)]
        return GroupTable(mul, names, gens, label=f"PGammaL(2,{self.q})")

    def name(self, x) -> str:
        a, b, c, d, M = (int(v) for v in x)
        frob = f" F^{M}" if M else ""
        return f"[{a} {b}; {c} {d}]{frob}"


@lru_cache(maxsize=None)
def gammaL2_group(q: int) -> GammaL2:
    return GammaL2(q)


@dataclass(frozen=True)
class GammaL2Element:
    """A single element with operator syntax; wraps a ``(5,)`` column."""

    group: GammaL2
    a: int
    b: int
    c: int
    d: int
    M: int

    @classmethod
    def make(cls, group: GammaL2, a, b, c, d, M=0) -> "GammaL2Element":
        x = group.normalize([a], [b], [c], [d], [M])
        return cls.from_column(group, x[:, 0])

    @classmethod
    def from_column(cls, group: GammaL2, col) -> "GammaL2Element":
        return cls(group, *(int(v) for v in col))

    @property
    def column(self) -> np.ndarray:
        return np.array([[self.a], [self.b], [self.c], [self.d], [self.M]], dtype=np.int64)

    def __mul__(self, other: "GammaL2Element") -> "GammaL2Element":
        return GammaL2Element.from_column(self.group, self.group.mul(self.column, other.column)[:, 0])

    def inverse(self) -> "GammaL2Element":
        return GammaL2Element.from_column(self.group, self.group.inv(self.column)[:, 0])


# -- closed formulas ---------------------------------------------------------


def psi_constraint_filter(q: int) -> frozenset:
    """Frobenius powers ``M`` in ``[0, K)`` with ``Frob^(2M) = id``."""
    K = field_of_order(q).K
    return frozenset({0, K // 2} if K % 2 == 0 else {0})


def cube_batch(G: GammaL2, x) -> np.ndarray:
    """Cubes of a batch.  Entries with ``psi^2 = id`` use the closed formula
    ``B psi(B) B``; the rest go through generic multiplication."""
    e, f, g, h, M = x
    ok = (2 * M) % G.K == 0
    out = np.empty_like(x)
    if ok.any():
        F = G.F
        E, Fv, Gv, H = e[ok], f[ok], g[ok], h[ok]
        Mo = M[ok]
        pe, pf, pg, ph = (G.frob(v, Mo) for v in (E, Fv, Gv, H))
        d = G._dot
        top_left = d((F.mul(E, E), pe), (F.mul(E, Fv), pg), (F.mul(E, Gv), pf), (F.mul(Fv, Gv), ph))
        bot_left = d((F.mul(E, Gv), pe), (F.mul(E, H), pg), (F.mul(Gv, Gv), pf), (F.mul(Gv, H), ph))
        top_right = d((F.mul(E, Fv), pe), (F.mul(Fv, Fv), pg), (F.mul(E, H), pf), (F.mul(Fv, H), ph))
        bot_right = d((F.mul(Fv, Gv), pe), (F.mul(Fv, H), pg), (F.mul(Gv, H), pf), (F.mul(H, H), ph))
        out[:, ok] = G.normalize(top_left, top_right, bot_left, bot_right, Mo)
    if (~ok).any():
        out[:, ~ok] = G.power(x[:, ~ok], 3)
    return out


def conj_batch(G: GammaL2, a_el, x) -> np.ndarray:
    """``alpha(beta) = (A sigma(B) psi(adj A), psi)`` for conjugation by ``(A, sigma)``.

    ``a_el`` is a ``(5,)`` or ``(5, n)`` array; the formula holds for every ``psi``.
    """
    F = G.F
    a_el = np.asarray(a_el).reshape(5, -1)
    a, b, c, d, L = (v if v.size > 1 else v[0] for v in a_el)
    e, f, g, h, M = x
    se, sf, sg, sh = (G.frob(v, L) for v in (e, f, g, h))
    pa, pb, pc, pd = (G.frob(np.broadcast_to(v, e.shape), M) for v in (a, b, c, d))
    d_ = G._dot
    neg = F.neg
    top_left = d_((a, F.mul(se, pd)), (b, F.mul(sg, pd)), (neg(a), F.mul(sf, pc)), (neg(b), F.mul(sh, pc)))
    bot_left = d_((c, F.mul(se, pd)), (d, F.mul(sg, pd)), (neg(c), F.mul(sf, pc)), (neg(d), F.mul(sh, pc)))
    top_right = d_((neg(a), F.mul(se, pb)), (neg(b), F.mul(sg, pb)), (a, F.mul(sf, pa)), (b, F.mul(sh, pa)))
    bot_right = d_((neg(c), F.mul(se, pb)), (neg(d), F.mul(sg, pb)), (c, F.mul(sf, pa)), (d, F.mul(sh, pa)))
    return G.normalize(top_left, top_right, bot_left, bot_right, M)


def cube(b: GammaL2Element) -> GammaL2Element:
    return GammaL2Element.from_column(b.group, cube_batch(b.group, b.column)[:, 0])


def conj_apply(a: GammaL2Element, b: GammaL2Element) -> GammaL2Element:
    return GammaL2Element.from_column(b.group, conj_batch(b.group, a.column, b.column)[:, 0])


def verify_formulas(q: int, trials: int, seed: int = 0) -> dict:
    """Compare both closed formulas with generic arithmetic on random elements."""
    G = gammaL2_group(q)
    rng = np.random.default_rng(seed)
    half = trials // 2
    # half the cube samples carry psi^2 = id so the formula path is exercised
    Ms = sorted(psi_constraint_filter(q))
    betas = np.concatenate([G.random(rng, half, M=int(rng.choice(Ms))),
                            G.random(rng, trials - half)], axis=1)
    alphas = G.random(rng, trials)
    cube_ok = (cube_batch(G, betas) == G.power(betas, 3)).all(axis=0)
    conj_ok = (conj_batch(G, alphas, betas) == G.conj(alphas, betas)).all(axis=0)
    return {"q": q, "trials": trials, "cube_failures": int((~cube_ok).sum()),
            "conj_failures": int((~conj_ok).sum())}


@dataclass(frozen=True)
class GoodCount:
    q: int
    conjugator: tuple
    count: int
    bound: float


def good_mask(G: GammaL2, conjugator) -> np.ndarray:
    """Mask over :meth:`GammaL2.elements` of ``beta`` with ``alpha(beta) = beta^3``."""
    X = G.elements()
    out = np.zeros(X.shape[1], dtype=bool)
    for start in range(0, X.shape[1], _CHUNK):
        x = X[:, start:start + _CHUNK]
        out[start:start + _CHUNK] = (conj_batch(G, conjugator, x) == cube_batch(G, x)).all(axis=0)
    return out


def count_good(q: int, conjugator, eps: float = 0.0) -> GoodCount:
    G = gammaL2_group(q)
    conjugator = np.asarray(conjugator, dtype=np.int64).reshape(5)
    count = int(good_mask(G, conjugator).sum())
    return GoodCount(q, tuple(int(v) for v in conjugator), count, q ** (11 / 4 + eps))


def count_good_generic(q: int, conjugator) -> int:
    """Same count through generic multiplication only (the oracle)."""
    G = gammaL2_group(q)
    X = G.elements()
    a = np.asarray(conjugator, dtype=np.int64).reshape(5, 1)
    A = np.repeat(a, X.shape[1], axis=1)
    return int((G.conj(A, X) == G.power(X, 3)).all(axis=0).sum())


def class_representatives(q: int) -> list[int]:
    """Indices (into :meth:`GammaL2.elements`) of one element per conjugacy class."""
    G = gammaL2_group(q)
    X = G.elements()
    n = X.shape[1]
    src, dst = [], []
    gens = G.generators()
    for i in range(gens.shape[1]):
        s = np.repeat(gens[:, i:i + 1], n, axis=1)
        src.append(np.arange(n))
        dst.append(G.index_of(G.conj(s, X)))
    src, dst = np.concatenate(src), np.concatenate(dst)
    graph = coo_matrix((np.ones(src.size), (src, dst)), shape=(n, n))
    ncomp, labels = connected_components(graph, directed=True, connection="weak")
    _, first = np.unique(labels, return_index=True)
    return sorted(first.tolist())


def l3_inner_max(q: int, eps: float = 0.0) -> tuple[int, tuple]:
    """``max_a #{beta : a beta a^-1 = beta^3}`` over class representatives ``a``."""
    G = gammaL2_group(q)
    X = G.elements()
    if G.order * len(class_representatives(q)) > 50 * SCAN_CAP:
        raise ScanTooLarge(f"L3 scan for q = {q} is too large")
    best, wit = -1, None
    for r in class_representatives(q):
        c = int(good_mask(G, X[:, r]).sum())
        if c > best:
            best, wit = c, tuple(int(v) for v in X[:, r])
    return best, wit


def good_type(G: GammaL2, x) -> int:
    """Diagnostic partition of ``beta`` with ``psi^2 = id``:
    1 if ``f = 0`` or ``g = 0``; 2 if the bottom-right cube entry vanishes; else 3."""
    F = G.F
    e, f, g, h, M = (int(v) for v in x)
    if f == 0 or g == 0:
        return 1
    pe, pf, pg, ph = (int(G.frob(np.array(v), M)) for v in (e, f, g, h))
    br = G._dot((F.mul(f, g), pe), (F.mul(f, h), pg), (F.mul(g, h), pf), (F.mul(h, h), ph))
    return 2 if int(br) == 0 else 3
