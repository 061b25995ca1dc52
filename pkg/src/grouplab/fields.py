"""Explicit finite fields F_{p^K}, sparse polynomials and the lacunary reduction.

An element ``sum c_i X^i`` of ``F_p[X]/(m)`` is coded as the integer
``sum c_i p^i``, so ``0`` and ``1`` are the usual zero and one and a prime
field is coded by residues.  Multiplication goes through exp/log tables of
the smallest primitive element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import FieldTooLarge, NotPrimePower, PreconditionViolated, ZeroResult

MAX_FIELD = 2**20
MAX_ROOT_SCAN = 2**20


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def prime_power(q: int) -> tuple[int, int]:
    """``(p, K)`` with ``q = p**K``, or :class:`NotPrimePower`."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    fac = prime_factors(q)
    if len(fac) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    p = fac[0]
    return p, round(math.log(q, p))


# -- dense polynomials over F_p, coefficient lists low -> high ----------------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim(a[:dm] if len(a) > dm else a)


def _polymulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _polymod(out, m, p)


def _polypowmod(a, e, m, p):
    result = [1]
    base = _polymod(a, m, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, m, p)
        e >>= 1
        if e:
            base = _polymulmod(base, base, m, p)
    return result


def _polygcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _polymod(a, b, p)
    return a


def is_irreducible(m, p) -> bool:
    """Rabin's test for a monic polynomial ``m`` over F_p."""
    K = len(m) - 1
    if K == 1:
        return True
    x = [0, 1]
    if _polypowmod(x, p**K, m, p) != _polymod(x, m, p):
        return False
    for r in prime_factors(K):
        h = _polypowmod(x, p ** (K // r), m, p)
        h = h + [0] * (2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_polygcd(m, _trim(h), p)) != 1:
            return False
    return True


def least_irreducible(p: int, K: int) -> tuple[int, ...]:
    """The monic degree-K irreducible whose low coefficients, read as base-p digits, are least."""
    for code in range(p**K):
        low = [(code // p**i) % p for i in range(K)]
        m = low + [1]
        if is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")


class FqField:
    """The field F_{p^K} with arrays of coded elements as the working type."""

    def __init__(self, p: int, K: int):
        if not is_prime(p) or K < 1:
            raise NotPrimePower(f"p={p}, K={K} do not describe a field")
        q = p**K
        if q > MAX_FIELD:
            raise FieldTooLarge(f"q = {q} exceeds {MAX_FIELD}")
        self.p, self.K, self.q = p, K, q
        self.modulus = least_irreducible(p, K)
        self._pows = p ** np.arange(K, dtype=np.int64)
        self._build_tables()

    def __repr__(self):
        return f"FqField(q={self.q})"

    # coding
    def digits(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._pows) % self.p

    def from_digits(self, d) -> np.ndarray:
        return (np.asarray(d, dtype=np.int64) % self.p) @ self._pows

    def _mul_matrix(self, c: int) -> np.ndarray:
        """Matrix of ``x -> c*x`` on digit row vectors."""
        p, K, m = self.p, self.K, self.modulus
        rows = []
        cur = [int(v) for v in self.digits(c)]
        for _ in range(K):
            rows.append(list(cur))
            # multiply by X
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(cur[j] - top * m[j]) % p for j in range(K)]
        return np.array(rows, dtype=np.int64)

    def _power_code(self, c: int, e: int) -> int:
        M = self._mul_matrix(c)
        vec = self.digits(1)
        base = M
        while e:
            if e & 1:
                vec = vec @ base % self.p
            e >>= 1
            if e:
                base = base @ base % self.p
        return int(self.from_digits(vec))

    def _build_tables(self):
        q, p = self.q, self.p
        n = q - 1
        fac = prime_factors(n) if n > 1 else []
        prim = 1
        if n > 1:
            for c in range(2, q):
                if all(self._power_code(c, n // r) != 1 for r in fac):
                    prim = c
                    break
        self.primitive = prim
        # powers of prim by doubling: rows g^0..g^{k-1} times g^k
        rows = self.digits(np.array([1]))
        while rows.shape[0] < n:
            gk = int(self.from_digits(rows[-1] @ self._mul_matrix(prim) % p))
            rows = np.concatenate([rows, rows @ self._mul_matrix(gk) % p])
        exp = self.from_digits(rows[:n])
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(exp.size)
        if len(np.unique(exp)) != n:
            raise AssertionError("primitive element search failed")
        self.exp = np.concatenate([exp, exp]).astype(np.int64)
        self.log = log
        for arr in (self.exp, self.log):
            arr.flags.writeable = False

    # arithmetic (numpy broadcasting)
    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, dtype=np.int64), b)
        if self.K == 1:
            return (np.asarray(a, dtype=np.int64) + b) % self.p
        return self.from_digits(self.digits(a) + self.digits(b))

    def neg(self, a):
        if self.p == 2:
            return np.asarray(a, dtype=np.int64)
        if self.K == 1:
            return (-np.asarray(a, dtype=np.int64)) % self.p
        return self.from_digits(-self.digits(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        zero = (a == 0) | (b == 0)
        r = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where(zero, 0, r)

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            self._check_nonzero(a)
        n = self.q - 1
        r = self.exp[(self.log[a] * (e % n)) % n]
        return np.where(a == 0, 0, r)

    @staticmethod
    def _check_nonzero(a):
        if (np.asarray(a) == 0).any():
            raise ZeroDivisionError("zero has no inverse in F_q")

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        self._check_nonzero(a)
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frob(self, a, m: int = 1):
        """``a ** (p**m)``."""
        m %= self.K
        return self.pow(a, self.p**m) if m else np.asarray(a, dtype=np.int64)

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)


@lru_cache(maxsize=None)
def get_field(p: int, K: int) -> FqField:
    return FqField(p, K)


def field_of_order(q: int) -> FqField:
    p, K = prime_power(q)
    return get_field(p, K)


# -- sparse polynomials -------------------------------------------------------


@dataclass(frozen=True)
class FqPoly:
    """Sparse polynomial: ``terms`` are ``(exponent, coefficient)`` pairs,
    exponents strictly increasing, coefficients nonzero field codes."""

    field: FqField
    terms: tuple

    @classmethod
    def from_terms(cls, field: FqField, terms) -> "FqPoly":
        acc: dict[int, int] = {}
        for e, c in terms:
            e, c = int(e), int(c)
            if e < 0:
                raise ValueError("negative exponent")
            acc[e] = int(field.add(acc.get(e, 0), c))
        return cls(field, tuple(sorted((e, c) for e, c in acc.items() if c)))

    def __post_init__(self):
        exps = [e for e, _ in self.terms]
        if any(b <= a for a, b in zip(exps, exps[1:])) or any(c == 0 for _, c in self.terms):
            raise ValueError("terms must have increasing exponents and nonzero coefficients")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg(self) -> int:
        return self.terms[-1][0] if self.terms else -1

    @property
    def mindeg(self) -> int:
        return self.terms[0][0] if self.terms else -1

    def __add__(self, other: "FqPoly") -> "FqPoly":
        return FqPoly.from_terms(self.field, self.terms + other.terms)

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x) -> np.ndarray:
        F = self.field
        x = np.asarray(x, dtype=np.int64)
        total = np.zeros_like(x)
        for e, c in self.terms:
            total = F.add(total, F.mul(c, F.pow(x, e)))
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*X^{e}" for e, c in reversed(self.terms))


def frobenius_poly(f: FqPoly, iterations: int) -> FqPoly:
    """Raise every term to the ``p**iterations``-th power: ``(e, c) -> (e p^i, c^{p^i})``."""
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    F = f.field
    s = F.p**iterations
    return FqPoly(F, tuple((e * s, int(F.frob(c, iterations))) for e, c in f.terms))


def roots(f: FqPoly) -> frozenset:
    """All roots in F_q by exhaustive evaluation."""
    F = f.field
    if F.q > MAX_ROOT_SCAN:
        raise FieldTooLarge(f"root scan over q = {F.q} exceeds {MAX_ROOT_SCAN}")
    xs = F.elements()
    return frozenset(int(v) for v in xs[f.evaluate(xs) == 0])


def _check_lacunary_params(F: FqField, L: int, eps: float):
    if not (3 * F.K <= 4 * L and L < F.K):
        raise PreconditionViolated(f"need 3K/4 <= L < K, got K={F.K}, L={L}")
    if not 0 < eps < 0.25:
        raise PreconditionViolated(f"need 0 < eps < 1/4, got {eps}")


def lacunary_split(f: FqPoly, L: int) -> tuple[FqPoly, FqPoly]:
    """``(P1, P2)`` with ``P2`` the terms of exponent at least ``p**L``."""
    cut = f.field.p**L
    return (FqPoly(f.field, tuple(t for t in f.terms if t[0] < cut)),
            FqPoly(f.field, tuple(t for t in f.terms if t[0] >= cut)))


def lacunary_bounds(F: FqField, L: int, eps: float) -> dict:
    q = F.q
    half = q ** (0.5 + eps)
    return {
        "deg_p1": half,
        "mindeg_p2": F.p**L,
        "deg_p2": min(q ** (L / F.K) + half - 1, q - 1),
        "deg_q": q ** (0.75 + eps),
    }


def lacunary_reduce(f: FqPoly, L: int, eps: float) -> FqPoly:
    """Low-degree polynomial with the same roots in F_q as the lacunary ``f``.

    ``f`` must split as ``P1 + P2`` with ``deg P1 <= q^(1/2+eps)`` and the
    exponents of ``P2`` in ``[p^L, q^(L/K) + q^(1/2+eps) - 1]`` (and below q).
    Both parts go through ``K-L`` Frobenius steps; the exponents of the second
    part then lie in ``[q, 2q)`` and drop by ``q-1``.
    """
    F = f.field
    _check_lacunary_params(F, L, eps)
    p1, p2 = lacunary_split(f, L)
    b = lacunary_bounds(F, L, eps)
    if p1.deg > b["deg_p1"]:
        raise PreconditionViolated(f"deg P1 = {p1.deg} > q^(1/2+eps) = {b['deg_p1']:.3f}")
    if not p2.is_zero and p2.deg > b["deg_p2"]:
        raise PreconditionViolated(f"deg P2 = {p2.deg} > {b['deg_p2']:.3f}")
    m = F.K - L
    t1 = frobenius_poly(p1, m)
    t2 = frobenius_poly(p2, m)
    q = F.q
    lowered = []
    for e, c in t2.terms:
        assert q <= e < 2 * q, "exponent outside the single-reduction window"
        lowered.append((e - (q - 1), c))
    Q = FqPoly.from_terms(F, t1.terms + tuple(lowered))
    if Q.is_zero:
        raise ZeroResult("reduced polynomial vanished; the input cannot meet the preconditions")
    return Q


def random_lacunary(F: FqField, L: int, eps: float, rng: np.random.Generator,
                    max_terms: int = 5, plant_root: bool = True) -> FqPoly:
    """A random admissible input for :func:`lacunary_reduce`.

    With ``plant_root`` the constant term is adjusted so a random point is a root.
    """
    _check_lacunary_params(F, L, eps)
    b = lacunary_bounds(F, L, eps)
    hi1 = math.floor(b["deg_p1"])
    lo2, hi2 = b["mindeg_p2"], math.floor(b["deg_p2"])

    def part(lo, hi):
        k = int(rng.integers(1, max_terms + 1))
        exps = rng.integers(lo, hi + 1, size=k)
        coefs = rng.integers(1, F.q, size=k)
        return list(zip(exps.tolist(), coefs.tolist()))

    terms = part(1, hi1)
    if hi2 >= lo2 and rng.random() < 0.9:
        terms += part(lo2, hi2)
    f = FqPoly.from_terms(F, terms)
    if plant_root:
        x0 = int(rng.integers(0, F.q))
        v = int(f.evaluate(x0))
        f = FqPoly.from_terms(F, f.terms + ((0, int(F.neg(v))),))
    else:
        f = FqPoly.from_terms(F, f.terms + ((0, int(rng.integers(0, F.q))),))
    if f.is_zero:
        f = FqPoly.from_terms(F, [(1, 1)])
    return f


def lacunary_trial(f: FqPoly, L: int, eps: float) -> dict:
    """Apply the reduction and compare root sets exhaustively."""
    F = f.field
    Q = lacunary_reduce(f, L, eps)
    bound = lacunary_bounds(F, L, eps)["deg_q"]
    return {
        "q": F.q,
        "degF": f.deg,
        "degQ": Q.deg,
        "bound": bound,
        "rootsEqual": roots(f) == roots(Q),
        "degOk": Q.deg <= bound,
    }
