"""Indefinite inner product modules realised as free modules ``R^d``.

The pairing is ``<x, y> = x^T G star(y)`` for an invertible Gram matrix ``G``
with ``star(G^T) = G``. Linear in the first slot, star-hermitian, and
nondegenerate exactly when ``G`` is invertible.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import linalg
from .errors import GramNotHermitian, ShapeError, SpaceMismatch
from .ring import Elem, Ring


def as_matrix(ring: Ring, rows, d: int | None = None) -> np.ndarray:
    """Coerce nested sequences of ints/Elems (or an array) to a checked mask array."""
    if isinstance(rows, np.ndarray):
        arr = rows.astype(np.int64, copy=True)
    else:
        arr = np.array([[ring(v).value for v in row] for row in rows], dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {arr.shape}")
    if d is not None and arr.shape[0] != d:
        raise ShapeError(f"expected {d}x{d}, got {arr.shape[0]}x{arr.shape[1]}")
    if arr.size and (arr.min() < 0 or (arr >> ring.k).any()):
        bad = int(arr[(arr < 0) | ((arr >> ring.k) != 0)][0])
        ring.check(bad)
    return arr


class Space:
    """Free module ``R^d`` with a hermitian invertible Gram form.

    Direct sums remember their summand in ``component`` and the number of
    copies in ``copies``; a plain space has ``component=None, copies=1``.
    """

    def __init__(self, ring: Ring, d: int, gram=None, *, _gram_inv=None):
        if d < 1:
            raise ShapeError(f"dimension must be positive, got {d}")
        self.ring = ring
        self.dim = d
        if gram is None:
            gram = linalg.identity(d)
        self.gram = as_matrix(ring, gram, d)
        self.gram.setflags(write=False)
        if not np.array_equal(linalg.star_transpose(ring, self.gram), self.gram):
            raise GramNotHermitian("Gram matrix is not equal to its star-transpose")
        if _gram_inv is None:
            _gram_inv = linalg.inverse(ring, self.gram)
        self.gram_inv = _gram_inv
        self.gram_inv.setflags(write=False)
        self.component: Space | None = None
        self.copies = 1

    # vectors

    def vector(self, values) -> Vector:
        arr = np.array([self.ring(v).value for v in values], dtype=np.int64)
        if arr.shape != (self.dim,):
            raise ShapeError(f"expected {self.dim} entries, got {len(arr)}")
        return Vector(self, arr)

    def zero_vector(self) -> Vector:
        return Vector(self, np.zeros(self.dim, dtype=np.int64))

    def basis(self, i: int) -> Vector:
        arr = np.zeros(self.dim, dtype=np.int64)
        arr[i] = 1
        return Vector(self, arr)

    def random_vector(self, rng: np.random.Generator) -> Vector:
        return Vector(self, rng.integers(0, self.ring.order, self.dim, dtype=np.int64))

    def pairing(self, x: np.ndarray, y: np.ndarray) -> int:
        """Inner product on raw mask arrays (no checks)."""
        gy = linalg.matvec(self.ring, self.gram, self.ring.star_arrays(y))
        return int(np.bitwise_xor.reduce(self.ring.mul_arrays(x, gy)))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, Space)
            and self.ring == other.ring
            and self.dim == other.dim
            and np.array_equal(self.gram, other.gram)
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.dim, self.gram.tobytes()))

    def __repr__(self) -> str:
        return f"Space({self.ring!r}, d={self.dim})"


class Vector:
    __slots__ = ("space", "entries")

    def __init__(self, space: Space, entries: np.ndarray):
        self.space = space
        self.entries = entries

    def _same(self, other: Vector) -> None:
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatch("vectors live in different spaces")

    def __add__(self, other: Vector) -> Vector:
        if not isinstance(other, Vector):
            return NotImplemented
        self._same(other)
        return Vector(self.space, self.entries ^ other.entries)

    __sub__ = __add__

    def __rmul__(self, a) -> Vector:
        a = self.space.ring(a)
        return Vector(self.space, self.space.ring.mul_arrays(a.value, self.entries))

    def __getitem__(self, i: int) -> Elem:
        return Elem(self.space.ring, int(self.entries[i]))

    def __len__(self) -> int:
        return self.space.dim

    def is_zero(self) -> bool:
        return not self.entries.any()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.space == other.space and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    def __repr__(self) -> str:
        return "Vector[" + " ".join(format(int(v), "x") for v in self.entries) + "]"


def space_make(ring: Ring, d: int, gram=None) -> Space:
    return Space(ring, d, gram)


def inner(x: Vector, y: Vector) -> Elem:
    x._same(y)
    return Elem(x.space.ring, x.space.pairing(x.entries, y.entries))


def hyperbolic_gram(d: int) -> np.ndarray:
    """Block diagonal of ``[[0, 1], [1, 0]]``; ``d`` must be even."""
    if d % 2:
        raise ShapeError("hyperbolic form needs even dimension")
    h = np.array([[0, 1], [1, 0]], dtype=np.int64)
    return linalg.block_diag([h] * (d // 2))


def direct_sum_space(s: Space, copies: int) -> Space:
    """``copies`` orthogonal copies of ``s``; Gram and its inverse are block diagonal."""
    if copies < 2:
        raise ShapeError(f"direct sum needs at least 2 copies, got {copies}")
    out = Space(
        s.ring,
        s.dim * copies,
        linalg.block_diag([s.gram] * copies),
        _gram_inv=linalg.block_diag([s.gram_inv] * copies),
    )
    out.component = s
    out.copies = copies
    return out


def direct_sum_vector(parts: Sequence[Vector], space: Space | None = None) -> Vector:
    if space is None:
        space = direct_sum_space(parts[0].space, len(parts))
    return Vector(space, np.concatenate([p.entries for p in parts]))
