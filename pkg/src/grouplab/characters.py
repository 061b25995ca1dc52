"""Character tables modulo a prime by the class-matrix eigenvector method.

For a prime ``p`` with ``p = 1 (mod exp G)`` and ``p > 2|G|`` every irreducible
character has all its values in F_p, and each integer we lift (degrees,
square-root counts) is smaller than ``p`` so the lift is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _modp
from .errors import (DegenerateEigenspace, LiftAmbiguous, LiftOutOfRange,
                     NoSplittingPrime, SizeExceeded)
from .groups import ConjClassPartition, GroupTable, conjugacy_classes, exponent

MAX_CLASSES = 64
MAX_ORDER = 1024
_PRIME_SEARCH = 10**6
_REFINE_ROUNDS = 30


def splitting_primes(g: GroupTable, count: int = 2, start: int = 0) -> list[int]:
    """The ``count`` smallest primes ``p = 1 (mod exp G)`` above ``2|G|`` (skipping ``start``)."""
    e = exponent(g)
    lo = 2 * g.order + 1
    p = lo + ((1 - lo) % e)
    found = []
    while p < _PRIME_SEARCH:
        if _modp.is_prime(p):
            found.append(p)
            if len(found) == start + count:
                return found[start:]
        p += e
    raise NoSplittingPrime(f"no suitable prime below {_PRIME_SEARCH} for exp={e}")


@dataclass(frozen=True, eq=False)
class CharacterTableMod:
    group: GroupTable
    prime: int
    classes: ConjClassPartition
    values: np.ndarray  # k x k residues, rows are characters
    degrees: tuple

    @property
    def k(self) -> int:
        return self.classes.k

    def value(self, i: int, x: int) -> int:
        return int(self.values[i, self.classes.class_of[x]])

    def check_orthogonality(self) -> bool:
        p, n = self.prime, self.group.order
        cc = self.classes
        sizes = np.array(cc.sizes, dtype=np.int64)
        inv_cls = _inverse_classes(self.group, cc)
        V = self.values
        rows = (V * sizes) % p @ V[:, inv_cls].T % p
        cols = V.T @ V[:, inv_cls] % p  # column relation: sum_chi chi(r) chi(s^-1) = delta |C(r)|
        cent = np.array([n // s for s in cc.sizes], dtype=np.int64) % p
        return (np.array_equal(rows, np.eye(self.k, dtype=np.int64) * (n % p))
                and np.array_equal(cols, np.diag(cent)))


@dataclass(frozen=True, eq=False)
class FSIndicators:
    table: CharacterTableMod
    nu2: tuple


def _inverse_classes(g: GroupTable, cc: ConjClassPartition) -> np.ndarray:
    return np.array([cc.class_of[g.inv[r]] for r in cc.representatives])


def class_matrices(g: GroupTable, cc: ConjClassPartition) -> np.ndarray:
    """``C[r, s, t] = #{x in C_r : x^-1 z_t in C_s}``: structure constants of class sums."""
    k = cc.k
    C = np.zeros((k, k, k), dtype=np.int64)
    reps = np.array(cc.representatives)
    for r, cls in enumerate(cc.classes):
        xinv = g.inv[np.array(cls)]
        prods = cc.class_of[g.mul[np.ix_(xinv, reps)]]  # |C_r| x k
        for t in range(k):
            C[r, :, t] = np.bincount(prods[:, t], minlength=k)
    return C


def _split(W: np.ndarray, M: np.ndarray, p: int) -> list[np.ndarray]:
    """Split the M-invariant column space ``W`` into eigenspaces of ``M``."""
    X = _modp.solve_in_basis(W, M @ W % p, p)
    d = X.shape[0]
    roots = _modp.roots_mod_p(_modp.charpoly(X, p), p)
    parts = []
    for lam in roots:
        N = _modp.nullspace((X - lam * np.eye(d, dtype=np.int64)) % p, p)
        if N.shape[1]:
            parts.append(W @ N % p)
    if sum(P.shape[1] for P in parts) != d:
        raise DegenerateEigenspace("class matrix not diagonalisable over F_p")
    return parts


def character_table(g: GroupTable, prime: int | None = None, seed: int = 0) -> CharacterTableMod:
    """Irreducible characters of ``g`` as residues modulo a splitting prime."""
    if g.order > MAX_ORDER:
        raise SizeExceeded(f"character tables need |G| <= {MAX_ORDER}")
    cc = conjugacy_classes(g)
    k = cc.k
    if k > MAX_CLASSES:
        raise SizeExceeded(f"character tables need k(G) <= {MAX_CLASSES}")
    p = prime or splitting_primes(g, 1)[0]
    if (p - 1) % exponent(g) or p <= 2 * g.order:
        raise NoSplittingPrime(f"{p} is not a splitting prime for {g.label}")
    C = class_matrices(g, cc) % p
    rng = np.random.default_rng(seed)
    spaces = [np.eye(k, dtype=np.int64)]
    # refine by the class matrices themselves, then by random combinations
    for step in range(k + _REFINE_ROUNDS):
        if all(W.shape[1] == 1 for W in spaces):
            break
        if step < k:
            M = C[step]
        else:
            M = np.tensordot(rng.integers(0, p, size=k), C, axes=1) % p
        spaces = [part for W in spaces
                  for part in (_split(W, M, p) if W.shape[1] > 1 else [W])]
    if not all(W.shape[1] == 1 for W in spaces):
        raise DegenerateEigenspace(f"eigenspaces did not separate mod {p}")
    sizes = np.array(cc.sizes, dtype=np.int64)
    inv_sizes = np.array([_modp.inv_mod(h, p) for h in sizes], dtype=np.int64)
    inv_cls = _inverse_classes(g, cc)
    rows, degrees = [], []
    for W in spaces:
        v = W[:, 0] % p
        omega = v * _modp.inv_mod(v[0], p) % p
        s = int((omega * omega[inv_cls] % p * inv_sizes % p).sum() % p)
        d2 = g.order * _modp.inv_mod(s, p) % p
        d = math.isqrt(d2)
        if d * d != d2 or d == 0:
            raise DegenerateEigenspace(f"degree square {d2} is not a square mod {p}")
        rows.append(omega * d % p * inv_sizes % p)
        degrees.append(d)
    order = sorted(range(k), key=lambda i: (degrees[i], rows[i].tolist()))
    values = np.array([rows[i] for i in order], dtype=np.int64)
    degrees = tuple(degrees[i] for i in order)
    table = CharacterTableMod(g, p, cc, values, degrees)
    if sum(d * d for d in degrees) != g.order or not table.check_orthogonality():
        raise DegenerateEigenspace("orthogonality relations fail")
    return table


def _lift_signed(x: int, p: int) -> int:
    x %= p
    return x if x <= p // 2 else x - p


def fs_indicators(t: CharacterTableMod) -> FSIndicators:
    """``nu2(chi) = |G|^-1 sum_g chi(g^2)``, lifted to ``{-1, 0, 1}``."""
    g, p, cc = t.group, t.prime, t.classes
    reps = np.array(cc.representatives)
    sq_cls = cc.class_of[g.mul[reps, reps]]
    sizes = np.array(cc.sizes, dtype=np.int64)
    inv_n = _modp.inv_mod(g.order, p)
    raw = (t.values[:, sq_cls] * sizes % p).sum(axis=1) % p * inv_n % p
    nu = []
    for r in raw:
        v = _lift_signed(int(r), p)
        if v not in (-1, 0, 1):
            raise LiftAmbiguous(f"indicator residue {int(r)} mod {p} is not in {{-1,0,1}}")
        nu.append(v)
    return FSIndicators(t, tuple(nu))


def sqrt_via_characters(t: CharacterTableMod, nu2: FSIndicators, x: int) -> int:
    """``sum_chi nu2(chi) chi(x)`` lifted to ``[0, |G|]``.

    The closed upper end is reached by ``x = e`` in elementary abelian 2-groups.
    """
    p = t.prime
    c = t.classes.class_of[x]
    s = int((np.array(nu2.nu2, dtype=np.int64) * t.values[:, c]).sum() % p)
    if s > t.group.order:
        raise LiftOutOfRange(f"residue {s} mod {p} exceeds |G| = {t.group.order}")
    return s


def degsum(t: CharacterTableMod) -> int:
    return sum(t.degrees)


@dataclass
class CharacterReport:
    primes: tuple
    degrees: tuple
    nu2: tuple
    mismatches: list
    degsum: int
    cauchy_schwarz: bool

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.cauchy_schwarz


def check_square_root_identity(g: GroupTable, primes: int = 2) -> CharacterReport:
    """Compare ``sum nu2 chi(x)`` with ``|sqrt(x)|`` for every ``x``, under each prime."""
    xs = np.arange(g.order)
    direct = np.bincount(g.mul[xs, xs], minlength=g.order)
    mismatches = []
    tables = []
    for p in splitting_primes(g, primes):
        t = character_table(g, prime=p)
        nu = fs_indicators(t)
        tables.append((t, nu))
        for x in xs:
            v = sqrt_via_characters(t, nu, int(x))
            if v != direct[x]:
                mismatches.append({"prime": p, "x": int(x), "characters": v, "direct": int(direct[x])})
    t, nu = tables[0]
    ds = degsum(t)
    k = t.k
    signature = sorted(zip(t.degrees, nu.nu2))
    if any(sorted(zip(tt.degrees, n2.nu2)) != signature for tt, n2 in tables[1:]):
        mismatches.append({"reason": "tables differ between primes"})
    return CharacterReport(tuple(tt.prime for tt, _ in tables), t.degrees, nu.nu2, mismatches,
                           ds, ds <= math.sqrt(k * g.order) + 1e-9)
