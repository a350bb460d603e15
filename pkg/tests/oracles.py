"""Slow, independent reference computations used to check the library.

Nothing here imports the library's arithmetic kernels: polynomials are
lists of bits, matrices are lists of lists, and the infinite dilation
matrices are built entry by entry from their index definitions.
"""

from __future__ import annotations

import itertools


def bits(a: int, n: int) -> list[int]:
    return [(a >> i) & 1 for i in range(n)]


def schoolbook_mulmod(a: int, b: int, modulus: int) -> int:
    """Multiply coefficient lists, then reduce by long division from the top."""
    k = modulus.bit_length() - 1
    ca, cb = bits(a, k), bits(b, k)
    prod = [0] * (2 * k)
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            prod[i + j] ^= x & y
    mod = bits(modulus, k + 1)
    for top in range(2 * k - 1, k - 1, -1):
        if prod[top]:
            for i in range(k + 1):
                prod[top - k + i] ^= mod[i]
    return sum(c << i for i, c in enumerate(prod[:k]))


def reducible_by_products(p: int) -> bool:
    """p is reducible iff it equals a product of two polynomials of degree >= 1."""
    deg = p.bit_length() - 1
    for da in range(1, deg):
        db = deg - da
        for a in range(1 << da, 1 << (da + 1)):
            for b in range(1 << db, 1 << (db + 1)):
                prod = 0
                for i in range(da + 1):
                    if (a >> i) & 1:
                        prod ^= b << i
                if prod == p:
                    return True
    return False


class Scalar:
    """Tiny ring wrapper over the schoolbook product."""

    def __init__(self, modulus: int, star_exp: int = 0):
        self.modulus = modulus
        self.star_exp = star_exp

    def mul(self, a: int, b: int) -> int:
        return schoolbook_mulmod(a, b, self.modulus)

    def star(self, a: int) -> int:
        for _ in range(self.star_exp):
            a = self.mul(a, a)
        return a


def mat_mul(r: Scalar, a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        for j in range(p):
            acc = 0
            for t in range(m):
                acc ^= r.mul(a[i][t], b[t][j])
            out[i][j] = acc
    return out


def mat_eye(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def leibniz_det(r: Scalar, a) -> int:
    n = len(a)
    acc = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term = r.mul(term, a[i][j])
        acc ^= term
    return acc


def inner_sum(r: Scalar, gram, x, y) -> int:
    """sum_ij x_i G_ij star(y_j)"""
    acc = 0
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            acc ^= r.mul(r.mul(xi, gram[i][j]), r.star(yj))
    return acc


def halmos_by_hand(t):
    d = len(t)
    it = [[t[i][j] ^ int(i == j) for j in range(d)] for i in range(d)]
    top = [t[i] + it[i] for i in range(d)]
    bottom = [it[i] + t[i] for i in range(d)]
    return top + bottom


def sznagy_entry(t, n: int, m: int):
    """Block u_{n,m} of the bilateral dilation from its index definition."""
    d = len(t)
    eye = mat_eye(d)
    it = [[t[i][j] ^ eye[i][j] for j in range(d)] for i in range(d)]
    if (n, m) == (0, 0):
        return t
    if (n, m) == (0, 1):
        return it
    if (n, m) == (-1, 0):
        return it
    if (n, m) == (-1, 1):
        return t
    if m == n + 1 and n not in (-1, 0):
        return eye
    return None


def isometric_entry(t, n: int, m: int):
    """Block u_{n,m} of the unilateral dilation as displayed (T at (0,0),
    I+T at (1,0), identity on the rest of the subdiagonal)."""
    d = len(t)
    eye = mat_eye(d)
    if (n, m) == (0, 0):
        return t
    if (n, m) == (1, 0):
        return [[t[i][j] ^ eye[i][j] for j in range(d)] for i in range(d)]
    if n == m + 1 and m >= 1:
        return eye
    return None


def truncated(t, entry, lo: int, hi: int):
    """Finite section of a block matrix on positions lo..hi."""
    d = len(t)
    size = (hi - lo + 1) * d
    out = [[0] * size for _ in range(size)]
    for n in range(lo, hi + 1):
        for m in range(lo, hi + 1):
            blk = entry(t, n, m)
            if blk is None:
                continue
            for i in range(d):
                for j in range(d):
                    out[(n - lo) * d + i][(m - lo) * d + j] = blk[i][j]
    return out


def compressed_powers_by_truncation(r: Scalar, t, entry, max_power: int, bilateral: bool):
    """(0,0) blocks of powers 1..max_power of a finite section around position 0.

    Entries couple positions at most 2 apart, so a path of ``n`` steps from 0
    back to 0 never leaves ``[-2n, 2n]``; the section is exact there.
    """
    d = len(t)
    reach = 2 * max_power
    lo = -reach if bilateral else 0
    m = truncated(t, entry, lo, reach)
    off = -lo * d
    acc = mat_eye(len(m))
    out = []
    for _ in range(max_power):
        acc = mat_mul(r, acc, m)
        out.append([row[off : off + d] for row in acc[off : off + d]])
    return out
