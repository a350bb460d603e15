"""Halmos, Egervary and Sz.-Nagy dilations of a self-adjoint operator.

All four constructions only use ``T`` and ``I + T``. In characteristic 2,
``T^2 + (I+T)^2 = I`` and ``T(I+T) + (I+T)T = 0``, which is what makes the
block matrices below unitary (or isometric) for any self-adjoint ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg
from .errors import NotSelfAdjoint, ShapeError
from .operator import Operator, compress, is_self_adjoint
from .seqspace import ISOMETRIC, SZNAGY, LazyBandedOp, delta
from .space import direct_sum_space

HALMOS = "halmos"
EGERVARY = "egervary"
KINDS = (HALMOS, EGERVARY, SZNAGY, ISOMETRIC)

DEFAULT_MAX_POWER = 8
DEFAULT_WINDOW = 8


def _require_self_adjoint(t: Operator) -> None:
    if not is_self_adjoint(t):
        raise NotSelfAdjoint(f"{t!r} is not self-adjoint")


def block_operator(t: Operator, grid: Sequence[Sequence[np.ndarray | None]]) -> Operator:
    """Assemble an operator on ``len(grid)`` copies of ``t.space`` from d x d blocks
    (``None`` means a zero block)."""
    n = len(grid)
    d = t.dim
    out = linalg.zeros(n * d)
    for r, row in enumerate(grid):
        if len(row) != n:
            raise ShapeError("block grid is not square")
        for c, blk in enumerate(row):
            if blk is not None:
                out[r * d : (r + 1) * d, c * d : (c + 1) * d] = blk
    return Operator._raw(direct_sum_space(t.space, n), out)


def _parts(t: Operator):
    eye = linalg.identity(t.dim)
    return t.entries, eye ^ t.entries, eye


def halmos_dilate(t: Operator) -> Operator:
    """``[[T, I+T], [I+T, T]]`` on ``V + V``; its own inverse and adjoint."""
    _require_self_adjoint(t)
    tt, it, _ = _parts(t)
    return block_operator(t, [[tt, it], [it, tt]])


def egervary_dilate(t: Operator, n: int) -> Operator:
    """Unitary on ``N+1`` copies of ``V`` whose powers compress to ``T^k`` for ``k <= N``.

    Row 0 is ``[T, 0, ..., 0, I+T]``, row 1 is ``[I+T, 0, ..., 0, T]`` and row
    ``r`` (``2 <= r <= N``) has ``I`` in column ``r-1``.
    """
    _require_self_adjoint(t)
    if n < 1:
        raise ShapeError(f"N must be at least 1, got {n}")
    tt, it, eye = _parts(t)
    size = n + 1
    grid: list[list[np.ndarray | None]] = [[None] * size for _ in range(size)]
    grid[0][0], grid[0][n] = tt, it
    grid[1][0], grid[1][n] = it, tt
    for r in range(2, size):
        grid[r][r - 1] = eye
    return block_operator(t, grid)


def egervary_inverse(t: Operator, n: int) -> Operator:
    """The explicit inverse of :func:`egervary_dilate`.

    Row 0 is ``[T, I+T, 0, ...]``, row ``r`` (``1 <= r <= N-1``) has ``I`` in
    column ``r+1`` and row ``N`` is ``[I+T, T, 0, ...]``.
    """
    _require_self_adjoint(t)
    if n < 1:
        raise ShapeError(f"N must be at least 1, got {n}")
    tt, it, eye = _parts(t)
    size = n + 1
    grid: list[list[np.ndarray | None]] = [[None] * size for _ in range(size)]
    grid[0][0], grid[0][1] = tt, it
    for r in range(1, n):
        grid[r][r + 1] = eye
    grid[n][0], grid[n][1] = it, tt
    return block_operator(t, grid)


def sznagy_dilate(t: Operator) -> LazyBandedOp:
    """Bilateral unitary dilation on finitely supported ``Z``-indexed sequences."""
    _require_self_adjoint(t)
    return LazyBandedOp(t, SZNAGY)


def isometric_sznagy_dilate(t: Operator) -> LazyBandedOp:
    """Unilateral isometric dilation on finitely supported ``N``-indexed sequences."""
    _require_self_adjoint(t)
    return LazyBandedOp(t, ISOMETRIC)


# -- verification -------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    """One exact identity test.

    ``required=False`` marks a finding the theorem does not promise (for
    example the Egervary identity at ``N+1``); it never fails a report.
    """

    name: str
    holds: bool
    n: int | None = None
    required: bool = True
    detail: str = ""

    def describe(self) -> str:
        label = self.name if self.n is None else f"{self.name}[{self.n}]"
        status = "ok" if self.holds else "FAIL"
        if not self.required:
            status += " (informational)"
        text = f"{label}: {status}"
        if self.detail and not self.holds:
            text += f" -- {self.detail}"
        return text


@dataclass
class DilationReport:
    kind: str
    params: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def _flag(self, name: str) -> bool | None:
        found = [c.holds for c in self.checks if c.name == name]
        return all(found) if found else None

    @property
    def unitary_ok(self) -> bool | None:
        return self._flag("unitary")

    @property
    def isometry_ok(self) -> bool | None:
        return self._flag("isometry")

    @property
    def power_checks(self) -> list[tuple[int, bool]]:
        return [(c.n, c.holds) for c in self.checks if c.name == "power"]

    @property
    def adjoint_power_checks(self) -> list[tuple[int, bool]]:
        return [(c.n, c.holds) for c in self.checks if c.name == "adjoint_power"]

    @property
    def witness(self) -> str | None:
        for c in self.checks:
            if not c.holds:
                return c.describe()
        return None

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks if c.required)

    def human_lines(self) -> list[str]:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{self.kind} dilation {params}".rstrip()]
        lines += ["  " + c.describe() for c in self.checks]
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return lines

    def machine_lines(self) -> list[str]:
        params = "".join(f" {k}={v}" for k, v in self.params.items())
        lines = [f"report kind={self.kind}{params} ok={int(self.ok)}"]
        for c in self.checks:
            n = "" if c.n is None else f" n={c.n}"
            lines.append(f"check name={c.name}{n} holds={int(c.holds)} required={int(c.required)}")
        if self.witness is not None:
            lines.append(f"witness {self.witness}")
        return lines


def _show(op: Operator) -> str:
    return "[" + "; ".join(" ".join(format(v, "x") for v in row) for row in op.rows()) + "]"


def _power_checks(
    name: str, got: Sequence[Operator], base: Operator, guaranteed: int
) -> list[Check]:
    out = []
    expected = Operator.identity(base.space)
    for k, op in enumerate(got, start=1):
        expected = expected @ base
        holds = op == expected
        detail = "" if holds else f"compression {_show(op)} != {_show(expected)}"
        out.append(Check(name, holds, k, required=k <= guaranteed, detail=detail))
    return out


def _finite_report(kind: str, t: Operator, u: Operator, proof_inverse: Operator,
                   max_power: int, guaranteed: int, params: dict) -> DilationReport:
    eye = Operator.identity(u.space)
    ustar = u.adjoint()
    checks = [
        Check("unitary", u @ ustar == eye and ustar @ u == eye, detail="U U* or U* U differs from I"),
        Check("isometry", ustar @ u == eye, detail="U* U differs from I"),
        Check(
            "proof_inverse",
            u @ proof_inverse == eye and proof_inverse @ u == eye and ustar == proof_inverse,
            detail="explicit inverse is not U^-1 = U*",
        ),
    ]
    powers, apowers = [], []
    p, q = eye, eye
    for _ in range(max_power):
        p, q = p @ u, q @ ustar
        powers.append(compress(p, 0, t.dim))
        apowers.append(compress(q, 0, t.dim))
    checks += _power_checks("power", powers, t, guaranteed)
    checks += _power_checks("adjoint_power", apowers, t.adjoint(), guaranteed)
    return DilationReport(kind, params, checks)


def _block_adjoint(t: Operator, blk: np.ndarray) -> np.ndarray:
    ring, s = t.ring, t.space
    m = linalg.matmul(ring, linalg.matmul(ring, s.gram_inv, blk.T), s.gram)
    return ring.star_arrays(m)


def _lazy_report(kind: str, t: Operator, op: LazyBandedOp, max_power: int, window: int,
                 params: dict) -> DilationReport:
    iso_fail = None
    uni_fail = None
    for p in op.positions(window):
        for i in range(t.dim):
            x = delta(p, t.space.basis(i), op.laterality)
            if iso_fail is None and op.apply_adjoint(op.apply(x)) != x:
                iso_fail = f"U* U delta_{p} e_{i} != delta_{p} e_{i}"
            if uni_fail is None and op.apply(op.apply_adjoint(x)) != x:
                uni_fail = f"U U* delta_{p} e_{i} != delta_{p} e_{i}"
    checks = [Check("isometry", iso_fail is None, detail=iso_fail or "")]
    unitary_holds = iso_fail is None and uni_fail is None
    checks.insert(0, Check("unitary", unitary_holds, required=kind == SZNAGY,
                           detail=iso_fail or uni_fail or ""))

    # <U x, y> = <x, U* y> on all basis pairs inside the window
    fwd = op.window_blocks(window)
    bwd = op.window_blocks(window, adjoint=True)
    inside = set(op.positions(window))
    keys = {(r, c) for r, c in fwd if r in inside} | {(c, r) for r, c in bwd if r in inside}
    zero = linalg.zeros(t.dim)
    adj_fail = None
    for r, c in sorted(keys):
        want = _block_adjoint(t, fwd.get((r, c), zero))
        if not np.array_equal(want, bwd.get((c, r), zero)):
            adj_fail = f"block ({c},{r}) of U* is not the adjoint of block ({r},{c}) of U"
            break
    checks.append(Check("adjoint_rule", adj_fail is None, detail=adj_fail or ""))

    checks += _power_checks("power", op.compress_powers(max_power), t, max_power)
    checks += _power_checks(
        "adjoint_power", op.compress_powers(max_power, adjoint=True), t.adjoint(), max_power
    )
    return DilationReport(kind, params, checks)


def verify_dilation(
    t: Operator,
    kind: str,
    n: int | None = None,
    max_power: int | None = None,
    window: int = DEFAULT_WINDOW,
) -> DilationReport:
    """Build the ``kind`` dilation of ``t`` and check every identity it promises.

    Finite kinds are checked by full matrix products. Lazy kinds are checked on
    all singly supported basis sequences with position in the window, which is
    a complete certificate on that window since the operators have band
    radius 1. Halmos powers beyond 1 and Egervary powers beyond ``n`` are
    reported but not required.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown dilation kind {kind!r}")
    if kind == HALMOS:
        u = halmos_dilate(t)
        max_power = max_power or 1
        return _finite_report(kind, t, u, u, max_power, 1, {"max_power": max_power})
    if kind == EGERVARY:
        n = 1 if n is None else n
        u = egervary_dilate(t, n)
        max_power = max_power or n + 1
        return _finite_report(kind, t, u, egervary_inverse(t, n), max_power, n,
                              {"n": n, "max_power": max_power})
    max_power = max_power or DEFAULT_MAX_POWER
    op = sznagy_dilate(t) if kind == SZNAGY else isometric_sznagy_dilate(t)
    return _lazy_report(kind, t, op, max_power, window,
                        {"max_power": max_power, "window": window})
