"""Adjointable operators on a :class:`~indefdil.space.Space`.

The adjoint with respect to ``<x, y> = x^T G star(y)`` is
``star(G^-1 A^T G)``, the unique matrix with ``<Ax, y> = <x, A* y>``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ShapeError, SpaceMismatch
from .ring import Elem
from .space import Space, Vector, as_matrix


class Operator:
    """Square matrix over the ring of ``space``, acting on column vectors."""

    __slots__ = ("space", "entries", "_adjoint")

    def __init__(self, space: Space, entries):
        self.space = space
        self.entries = as_matrix(space.ring, entries, space.dim)
        self.entries.setflags(write=False)
        self._adjoint: Operator | None = None

    @classmethod
    def _raw(cls, space: Space, entries: np.ndarray) -> Operator:
        # trusted constructor for arrays produced by the kernels
        op = cls.__new__(cls)
        op.space = space
        op.entries = entries
        entries.setflags(write=False)
        op._adjoint = None
        return op

    @classmethod
    def identity(cls, space: Space) -> Operator:
        return cls._raw(space, linalg.identity(space.dim))

    @classmethod
    def zero(cls, space: Space) -> Operator:
        return cls._raw(space, linalg.zeros(space.dim))

    @property
    def ring(self):
        return self.space.ring

    @property
    def dim(self) -> int:
        return self.space.dim

    def _check(self, other: Operator) -> None:
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatch("operators act on different spaces")

    def __matmul__(self, other):
        if isinstance(other, Operator):
            self._check(other)
            return Operator._raw(self.space, linalg.matmul(self.ring, self.entries, other.entries))
        if isinstance(other, Vector):
            if other.space is not self.space and other.space != self.space:
                raise SpaceMismatch("vector is not in the operator's space")
            return Vector(self.space, linalg.matvec(self.ring, self.entries, other.entries))
        return NotImplemented

    __call__ = __matmul__

    def __add__(self, other: Operator) -> Operator:
        if not isinstance(other, Operator):
            return NotImplemented
        self._check(other)
        return Operator._raw(self.space, self.entries ^ other.entries)

    __sub__ = __add__

    def __rmul__(self, a) -> Operator:
        a = self.ring(a)
        return Operator._raw(self.space, linalg.scale(self.ring, a.value, self.entries))

    def __pow__(self, n: int) -> Operator:
        if n < 0:
            raise ValueError("negative operator power")
        return Operator._raw(self.space, linalg.matpow(self.ring, self.entries, n))

    def adjoint(self) -> Operator:
        if self._adjoint is None:
            ring, g = self.ring, self.space
            m = linalg.matmul(ring, linalg.matmul(ring, g.gram_inv, self.entries.T), g.gram)
            self._adjoint = Operator._raw(self.space, ring.star_arrays(m))
            self._adjoint._adjoint = self
        return self._adjoint

    @property
    def H(self) -> Operator:
        return self.adjoint()

    def __getitem__(self, idx) -> Elem:
        i, j = idx
        return Elem(self.ring, int(self.entries[i, j]))

    def rows(self) -> list[list[int]]:
        return self.entries.tolist()

    def is_zero(self) -> bool:
        return not self.entries.any()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Operator):
            return NotImplemented
        return self.space == other.space and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.space, self.entries.tobytes()))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format(v, "x") for v in row) for row in self.rows())
        return f"Operator[{body}]"


@dataclass(frozen=True)
class OperatorClass:
    self_adjoint: bool
    unitary: bool
    isometry: bool
    projection: bool


def op_mul(a: Operator, b: Operator) -> Operator:
    return a @ b


def adjoint(a: Operator) -> Operator:
    return a.adjoint()


def is_self_adjoint(a: Operator) -> bool:
    return a.adjoint() == a


def classify(a: Operator) -> OperatorClass:
    eye = Operator.identity(a.space)
    star = a.adjoint()
    isometry = star @ a == eye
    return OperatorClass(
        self_adjoint=star == a,
        unitary=isometry and a @ star == eye,
        isometry=isometry,
        projection=a @ a == a and star == a,
    )


def compress(u: Operator, block: int = 0, block_dim: int | None = None) -> Operator:
    """The ``(block, block)`` diagonal block of ``u``, i.e. ``P_V u |_V``.

    On a direct-sum space the result lives on the summand; otherwise a space is
    built from the matching diagonal block of the Gram matrix.
    """
    space = u.space
    if block_dim is None:
        if space.component is None:
            raise ShapeError("block_dim required for an operator not on a direct sum")
        block_dim = space.component.dim
    if block_dim < 1 or space.dim % block_dim:
        raise ShapeError(f"block size {block_dim} does not divide dimension {space.dim}")
    nblocks = space.dim // block_dim
    if not 0 <= block < nblocks:
        raise ShapeError(f"block index {block} outside 0..{nblocks - 1}")
    lo, hi = block * block_dim, (block + 1) * block_dim
    if space.component is not None and space.component.dim == block_dim:
        target = space.component
    else:
        target = Space(space.ring, block_dim, space.gram[lo:hi, lo:hi])
    return Operator._raw(target, u.entries[lo:hi, lo:hi].copy())


def symmetrize(s: Operator) -> Operator:
    """``s + s*``, always self-adjoint (but with a restricted range in char 2)."""
    return s + s.adjoint()


def self_adjoint_from_hermitian(space: Space, k: np.ndarray) -> Operator:
    """The self-adjoint ``T`` with ``T^T G = k``; ``k`` must be hermitian.

    ``T`` is self-adjoint exactly when ``T^T G`` is hermitian, so this is a
    bijection between hermitian matrices and self-adjoint operators.
    """
    ring = space.ring
    t = linalg.matmul(ring, k, space.gram_inv).T.copy()
    return Operator._raw(space, t)


def random_hermitian(space: Space, rng: np.random.Generator) -> np.ndarray:
    ring, d = space.ring, space.dim
    k = rng.integers(0, ring.order, (d, d), dtype=np.int64)
    upper = np.triu(k, 1)
    k = upper ^ ring.star_arrays(upper.T)
    fixed = ring.fixed_elements
    k[np.diag_indices(d)] = fixed[rng.integers(0, len(fixed), d)]
    return k


def random_self_adjoint(
    space: Space, seed: int | np.random.Generator = 0, nonzero: bool = False
) -> Operator:
    """Uniformly random self-adjoint operator; deterministic for a fixed seed."""
    rng = np.random.default_rng(seed)
    while True:
        t = self_adjoint_from_hermitian(space, random_hermitian(space, rng))
        if not (nonzero and t.is_zero()):
            return t
