"""Dense linear algebra over F_p with int64 numpy arrays (p < 2**31)."""

from __future__ import annotations

import numpy as np


def inv_mod(x: int, p: int) -> int:
    return pow(int(x) % p, -1, p)


def rref(A, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod ``p`` and the pivot columns."""
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = R[r] * inv_mod(R[r, c], p) % p
        others = np.flatnonzero(R[:, c])
        others = others[others != r]
        if others.size:
            R[others] = (R[others] - np.outer(R[others, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def nullspace(A, p: int) -> np.ndarray:
    """Basis of ``{v : A v = 0}`` as the columns of the returned matrix."""
    A = np.asarray(A, dtype=np.int64)
    R, pivots = rref(A, p)
    n = A.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, c in enumerate(pivots):
            basis[c, j] = (-R[i, f]) % p
    return basis


def solve_in_basis(W: np.ndarray, Y: np.ndarray, p: int) -> np.ndarray:
    """``X`` with ``W X = Y`` for ``W`` of full column rank (columns of Y in span W)."""
    d = W.shape[1]
    R, pivots = rref(np.concatenate([W, Y], axis=1), p)
    if pivots[:d] != list(range(d)) or any(c >= d for c in pivots):
        raise ValueError("right-hand side not in the column span")
    return R[:d, d:]


def charpoly(X, p: int) -> list[int]:
    """Characteristic polynomial coefficients, highest degree first (Faddeev-LeVerrier)."""
    X = np.asarray(X, dtype=np.int64) % p
    d = X.shape[0]
    if d >= p:
        raise ValueError("Faddeev-LeVerrier needs d < p")
    coeffs = [1]
    M = np.zeros_like(X)
    ident = np.eye(d, dtype=np.int64)
    for k in range(1, d + 1):
        M = (X @ M + coeffs[-1] * ident) % p
        c = (-inv_mod(k, p) * int(np.trace(X @ M % p) % p)) % p
        coeffs.append(c)
    return coeffs


def roots_mod_p(coeffs, p: int) -> list[int]:
    """All roots in F_p by exhaustive Horner evaluation."""
    xs = np.arange(p, dtype=np.int64)
    val = np.zeros(p, dtype=np.int64)
    for c in coeffs:
        val = (val * xs + c) % p
    return [int(x) for x in np.flatnonzero(val == 0)]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True
