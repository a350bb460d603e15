"""Finitely supported sequences of vectors and banded operators acting on them.

A :class:`FinSuppSeq` is an element of the direct sum of copies of a space
``V`` indexed by the integers (bilateral) or the naturals (unilateral); only
nonzero entries are stored. The inner product is the finite sum of
componentwise inner products.

:class:`LazyBandedOp` stores only the generator ``T`` and applies the infinite
dilation matrices by rule, so ``U**n x`` is exact for every ``n``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from . import linalg
from .errors import LateralityMismatch, ShapeError, SpaceMismatch
from .operator import Operator
from .ring import Elem
from .space import Space, Vector

BILATERAL = "bilateral"
UNILATERAL = "unilateral"

SZNAGY = "sznagy"
ISOMETRIC = "isometric"

_LATERALITY = {SZNAGY: BILATERAL, ISOMETRIC: UNILATERAL}


class FinSuppSeq:
    """Immutable sparse sequence ``position -> vector`` with zero entries pruned."""

    __slots__ = ("space", "laterality", "_data")

    def __init__(self, space: Space, data: dict[int, np.ndarray], laterality: str = BILATERAL):
        if laterality not in (BILATERAL, UNILATERAL):
            raise ValueError(f"unknown laterality {laterality!r}")
        self.space = space
        self.laterality = laterality
        self._data = {p: v for p, v in sorted(data.items()) if v.any()}
        if laterality == UNILATERAL and self._data and min(self._data) < 0:
            raise ShapeError("unilateral sequence has a negative position")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._data)

    def raw(self, pos: int) -> np.ndarray | None:
        return self._data.get(pos)

    def __getitem__(self, pos: int) -> Vector:
        v = self._data.get(pos)
        if v is None:
            return self.space.zero_vector()
        return Vector(self.space, v)

    def items(self) -> Iterator[tuple[int, Vector]]:
        for p, v in self._data.items():
            yield p, Vector(self.space, v)

    def _check(self, other: FinSuppSeq) -> None:
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatch("sequences over different component spaces")
        if other.laterality != self.laterality:
            raise LateralityMismatch(f"{self.laterality} vs {other.laterality}")

    def __add__(self, other: FinSuppSeq) -> FinSuppSeq:
        if not isinstance(other, FinSuppSeq):
            return NotImplemented
        self._check(other)
        out = dict(self._data)
        for p, v in other._data.items():
            out[p] = out[p] ^ v if p in out else v
        return FinSuppSeq(self.space, out, self.laterality)

    __sub__ = __add__

    def __rmul__(self, a) -> FinSuppSeq:
        a = self.space.ring(a)
        mul = self.space.ring.mul_arrays
        return FinSuppSeq(
            self.space, {p: mul(a.value, v) for p, v in self._data.items()}, self.laterality
        )

    def __len__(self) -> int:
        return len(self._data)

    def is_zero(self) -> bool:
        return not self._data

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinSuppSeq):
            return NotImplemented
        return (
            self.space == other.space
            and self.laterality == other.laterality
            and self._data.keys() == other._data.keys()
            and all(np.array_equal(v, other._data[p]) for p, v in self._data.items())
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{p}: {Vector(self.space, v)!r}" for p, v in self._data.items())
        return f"FinSuppSeq({self.laterality}, {{{body}}})"


def seq_make(
    entries: Iterable[tuple[int, Vector]], laterality: str = BILATERAL, space: Space | None = None
) -> FinSuppSeq:
    """Build a sequence from ``(position, vector)`` pairs; positions must be distinct."""
    data: dict[int, np.ndarray] = {}
    for pos, vec in entries:
        if space is None:
            space = vec.space
        elif vec.space != space:
            raise SpaceMismatch("entries from different spaces")
        if pos in data:
            raise ShapeError(f"duplicate position {pos}")
        if laterality == UNILATERAL and pos < 0:
            raise ShapeError(f"negative position {pos} in a unilateral sequence")
        data[int(pos)] = vec.entries
    if space is None:
        raise ShapeError("empty entry list needs an explicit space")
    return FinSuppSeq(space, data, laterality)


def delta(pos: int, vec: Vector, laterality: str = BILATERAL) -> FinSuppSeq:
    return seq_make([(pos, vec)], laterality)


def random_seq(
    space: Space, rng: np.random.Generator, window: int, laterality: str = BILATERAL
) -> FinSuppSeq:
    """Random entries on ``[-window, window]`` (``[0, window]`` if unilateral)."""
    lo = 0 if laterality == UNILATERAL else -window
    data = {
        p: rng.integers(0, space.ring.order, space.dim, dtype=np.int64)
        for p in range(lo, window + 1)
    }
    return FinSuppSeq(space, data, laterality)


def seq_inner(x: FinSuppSeq, y: FinSuppSeq) -> Elem:
    x._check(y)
    acc = 0
    for p, v in x._data.items():
        w = y._data.get(p)
        if w is not None:
            acc ^= x.space.pairing(v, w)
    return Elem(x.space.ring, acc)


class LazyBandedOp:
    """Rule-based dilation operator generated by a self-adjoint ``T``.

    ``kind="sznagy"`` (bilateral)::

        (Ux)_{-1} = (I+T) x_0 + T x_1
        (Ux)_0    = T x_0 + (I+T) x_1
        (Ux)_n    = x_{n+1}                  otherwise

        (U*x)_0   = (I+T) x_{-1} + T x_0
        (U*x)_1   = T x_{-1} + (I+T) x_0
        (U*x)_n   = x_{n-1}                  otherwise

    ``kind="isometric"`` (unilateral)::

        Ux  = (T x_0, (I+T) x_0, x_1, x_2, ...)
        U*x = (T x_0 + (I+T) x_1, x_2, x_3, ...)
    """

    band_radius = 1

    def __init__(self, generator: Operator, kind: str):
        if kind not in _LATERALITY:
            raise ValueError(f"unknown lazy operator kind {kind!r}")
        self.generator = generator
        self.kind = kind

    @property
    def space(self) -> Space:
        return self.generator.space

    @property
    def laterality(self) -> str:
        return _LATERALITY[self.kind]

    def _t(self, v: np.ndarray) -> np.ndarray:
        return linalg.matvec(self.space.ring, self.generator.entries, v)

    def _check(self, x: FinSuppSeq) -> None:
        if x.laterality != self.laterality:
            raise LateralityMismatch(f"{self.kind} operator applied to a {x.laterality} sequence")
        if x.space is not self.space and x.space != self.space:
            raise SpaceMismatch("sequence is not over the generator's space")

    def _mix(self, a, b):
        # [[I+T, T], [T, I+T]] applied to (a, b)
        zero = np.zeros(self.space.dim, dtype=np.int64)
        a = zero if a is None else a
        b = zero if b is None else b
        s = self._t(a ^ b)
        return a ^ s, b ^ s

    def apply(self, x: FinSuppSeq) -> FinSuppSeq:
        self._check(x)
        data = x._data
        out: dict[int, np.ndarray] = {}
        if self.kind == SZNAGY:
            for p, v in data.items():
                if p not in (0, 1):
                    out[p - 1] = v
            if 0 in data or 1 in data:
                out[-1], out[0] = self._mix(data.get(0), data.get(1))
        else:
            for p, v in data.items():
                if p >= 1:
                    out[p + 1] = v
            x0 = data.get(0)
            if x0 is not None:
                tx0 = self._t(x0)
                out[0] = tx0
                out[1] = x0 ^ tx0
        return FinSuppSeq(self.space, out, x.laterality)

    def apply_adjoint(self, x: FinSuppSeq) -> FinSuppSeq:
        self._check(x)
        data = x._data
        out: dict[int, np.ndarray] = {}
        if self.kind == SZNAGY:
            for p, v in data.items():
                if p not in (-1, 0):
                    out[p + 1] = v
            if -1 in data or 0 in data:
                out[0], out[1] = self._mix(data.get(-1), data.get(0))
        else:
            for p, v in data.items():
                if p >= 2:
                    out[p - 1] = v
            if 0 in data or 1 in data:
                # T x0 + (I+T) x1 = x1 + T(x0 + x1)
                out[0] = self._mix(data.get(0), data.get(1))[1]
        return FinSuppSeq(self.space, out, x.laterality)

    __call__ = apply

    def compress_powers(self, max_n: int, adjoint: bool = False) -> list[Operator]:
        """``[P U^1 |_V, ..., P U^max_n |_V]`` by probing ``delta_0 e_i``."""
        if max_n < 1:
            raise ValueError("power must be at least 1")
        step = self.apply_adjoint if adjoint else self.apply
        d = self.space.dim
        cols = np.zeros((max_n, d, d), dtype=np.int64)
        for i in range(d):
            seq = delta(0, self.space.basis(i), self.laterality)
            for n in range(max_n):
                seq = step(seq)
                v = seq.raw(0)
                if v is not None:
                    cols[n, :, i] = v
        return [Operator._raw(self.space, cols[n]) for n in range(max_n)]

    def compress_power(self, n: int, adjoint: bool = False) -> Operator:
        return self.compress_powers(n, adjoint)[-1]

    def positions(self, window: int) -> range:
        lo = 0 if self.laterality == UNILATERAL else -window
        return range(lo, window + 1)

    def window_blocks(self, window: int, adjoint: bool = False) -> dict[tuple[int, int], np.ndarray]:
        """Nonzero ``d x d`` blocks ``(row, col)`` of the matrix of ``U`` (or ``U*``)
        for every column position in the window."""
        step = self.apply_adjoint if adjoint else self.apply
        d = self.space.dim
        blocks: dict[tuple[int, int], np.ndarray] = {}
        for col in self.positions(window):
            for i in range(d):
                image = step(delta(col, self.space.basis(i), self.laterality))
                for row, v in image._data.items():
                    blk = blocks.setdefault((row, col), np.zeros((d, d), dtype=np.int64))
                    blk[:, i] = v
        return blocks

    def __repr__(self) -> str:
        return f"LazyBandedOp({self.kind}, T={self.generator!r})"


def lazy_apply(op: LazyBandedOp, x: FinSuppSeq) -> FinSuppSeq:
    return op.apply(x)


def lazy_apply_adjoint(op: LazyBandedOp, x: FinSuppSeq) -> FinSuppSeq:
    return op.apply_adjoint(x)


def lazy_compress_power(op: LazyBandedOp, n: int, adjoint: bool = False) -> Operator:
    return op.compress_power(n, adjoint)
