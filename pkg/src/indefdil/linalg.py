"""Exact dense linear algebra over a :class:`~indefdil.ring.Ring`.

Matrices are 2-d ``int64`` numpy arrays of element masks. Addition is XOR.
GF(2) products use ordinary integer matmul reduced mod 2; other rings go
through the ring's elementwise kernel and an XOR reduction.

Inversion over a field is Gauss-Jordan elimination. Over a quotient ring with
zero divisors a matrix may be invertible without any unit pivot in a column,
so there the inverse comes from the division-free Berkowitz characteristic
polynomial and the Cayley-Hamilton adjugate.
"""

from __future__ import annotations

import numpy as np

from .errors import GramSingular, NotAUnit, ShapeError
from .ring import Ring


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def zeros(n: int, m: int | None = None) -> np.ndarray:
    return np.zeros((n, n if m is None else m), dtype=np.int64)


def matmul(ring: Ring, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[-1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    if ring.k == 1:
        return (a @ b) & 1
    if b.ndim == 1:
        return np.bitwise_xor.reduce(ring.mul_arrays(a, b[None, :]), axis=-1)
    prods = ring.mul_arrays(a[:, :, None], b[None, :, :])
    if prods.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return np.bitwise_xor.reduce(prods, axis=1)


def matvec(ring: Ring, a: np.ndarray, x: np.ndarray) -> np.ndarray:
    return matmul(ring, a, x)


def scale(ring: Ring, c: int, a: np.ndarray) -> np.ndarray:
    return ring.mul_arrays(np.int64(c), a)


def star_transpose(ring: Ring, a: np.ndarray) -> np.ndarray:
    return ring.star_arrays(a.T)


def matpow(ring: Ring, a: np.ndarray, n: int) -> np.ndarray:
    result = identity(a.shape[0])
    base = a
    while n:
        if n & 1:
            result = matmul(ring, result, base)
        base = matmul(ring, base, base)
        n >>= 1
    return result


def block_diag(blocks: list[np.ndarray]) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = zeros(n)
    i = 0
    for b in blocks:
        m = b.shape[0]
        out[i : i + m, i : i + m] = b
        i += m
    return out


def charpoly(ring: Ring, a: np.ndarray) -> list[int]:
    """Coefficients ``[1, c1, ..., cn]`` of ``det(xI - a)`` (Berkowitz).

    Division-free, so valid over any commutative ring. In characteristic 2 the
    usual minus signs disappear.
    """
    n = a.shape[0]
    if n == 0:
        return [1]
    sub = charpoly(ring, a[1:, 1:])
    corner = int(a[0, 0])
    row = a[0, 1:]
    col = a[1:, 0]
    toeplitz = [1, corner]
    v = col
    for _ in range(n - 1):
        toeplitz.append(int(np.bitwise_xor.reduce(ring.mul_arrays(row, v))))
        v = matvec(ring, a[1:, 1:], v)
    out = []
    for i in range(n + 1):
        acc = 0
        for j in range(min(i, n - 1) + 1):
            acc ^= ring.mul(toeplitz[i - j], sub[j])
        out.append(acc)
    return out


def det(ring: Ring, a: np.ndarray) -> int:
    return charpoly(ring, a)[-1]


def adjugate(ring: Ring, a: np.ndarray) -> np.ndarray:
    """``a^(n-1) + c1 a^(n-2) + ... + c_{n-1} I``, so that ``a @ adj = det * I``."""
    coeffs = charpoly(ring, a)
    n = a.shape[0]
    acc = identity(n)
    for c in coeffs[1:n]:
        acc = matmul(ring, acc, a) ^ scale(ring, c, identity(n))
    return acc


def _gauss_jordan_inverse(ring: Ring, a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    m = [[int(v) for v in row] + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c]), None)
        if pivot is None:
            raise GramSingular("matrix is singular")
        m[c], m[pivot] = m[pivot], m[c]
        inv = ring.inv(m[c][c])
        m[c] = [ring.mul(inv, v) for v in m[c]]
        for r in range(n):
            f = m[r][c]
            if r != c and f:
                m[r] = [x ^ ring.mul(f, y) for x, y in zip(m[r], m[c])]
    return np.array([row[n:] for row in m], dtype=np.int64).reshape(n, n)


def inverse(ring: Ring, a: np.ndarray) -> np.ndarray:
    """Exact inverse; raises :class:`GramSingular` if none exists."""
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"inverse of non-square {a.shape}")
    if ring.is_field:
        return _gauss_jordan_inverse(ring, a)
    d = det(ring, a)
    try:
        dinv = ring.inv(d)
    except NotAUnit:
        raise GramSingular(f"determinant {d:x} is not a unit") from None
    return scale(ring, dinv, adjugate(ring, a))
