"""Exhaustive checks over small spaces and a brute-force commuting-dilation search."""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import linalg
from .dilation import EGERVARY, HALMOS, block_operator, verify_dilation
from .errors import NotSelfAdjoint, SearchTooLarge, SpaceMismatch
from .operator import Operator, classify, compress, is_self_adjoint, self_adjoint_from_hermitian
from .seqspace import ISOMETRIC, SZNAGY
from .space import Space

MAX_ENUM_RING = 16
MAX_ENUM_SIZE = 1 << 24
DEFAULT_ANDO_BUDGET = 1 << 16

CENSUS_HEADER = ["ring", "dim", "gram", "operator", "halmos", "egervary", "sznagy",
                 "isometric", "egervary_n1"]


def format_matrix(m) -> str:
    """Rows of lowercase hex separated by ``;``, e.g. ``"0 1;1 0"``."""
    rows = m.tolist() if isinstance(m, np.ndarray) else m.rows()
    return ";".join(" ".join(format(v, "x") for v in row) for row in rows)


def ring_id(ring) -> str:
    spec = ring.spec
    star = f"frobenius:{spec.star}" if spec.star else "identity"
    return f"{spec.kind}:k={spec.k}:modulus={spec.modulus:x}:star={star}"


def _hermitian_parameters(space: Space):
    """Free coordinates of a hermitian matrix: star-fixed diagonal, arbitrary upper."""
    ring = space.ring
    d = space.dim
    diag_choices = [int(v) for v in ring.fixed_elements]
    upper = [(i, j) for i in range(d) for j in range(i + 1, d)]
    for diag in itertools.product(diag_choices, repeat=d):
        for off in itertools.product(range(ring.order), repeat=len(upper)):
            k = linalg.zeros(d)
            k[np.diag_indices(d)] = diag
            for (i, j), v in zip(upper, off):
                k[i, j] = v
                k[j, i] = ring.star(v)
            yield k


def _check_enumerable(space: Space) -> None:
    ring = space.ring
    if not ring.is_field or ring.order > MAX_ENUM_RING:
        raise SearchTooLarge(f"enumeration needs a field with at most {MAX_ENUM_RING} elements")
    if ring.order ** (space.dim * space.dim) > MAX_ENUM_SIZE:
        raise SearchTooLarge(f"{ring.order}^{space.dim ** 2} matrices exceeds {MAX_ENUM_SIZE}")


def enumerate_self_adjoint(space: Space) -> Iterator[Operator]:
    """Every self-adjoint operator on ``space`` exactly once, sorted by entries."""
    _check_enumerable(space)
    ops = [self_adjoint_from_hermitian(space, k) for k in _hermitian_parameters(space)]
    ops.sort(key=lambda op: op.entries.ravel().tolist())
    yield from ops


def enumerate_all(space: Space) -> Iterator[Operator]:
    """All ``|R|^(d*d)`` operators in lexicographic order (used as a brute-force oracle)."""
    _check_enumerable(space)
    d = space.dim
    for flat in itertools.product(range(space.ring.order), repeat=d * d):
        yield Operator._raw(space, np.array(flat, dtype=np.int64).reshape(d, d))


@dataclass(frozen=True)
class CensusRow:
    ring: str
    dim: int
    gram: str
    operator: str
    halmos: bool
    egervary: bool
    sznagy: bool
    isometric: bool
    egervary_n1: bool

    @property
    def passed(self) -> bool:
        return self.halmos and self.egervary and self.sznagy and self.isometric

    def as_csv_row(self) -> list[str]:
        flags = [self.halmos, self.egervary, self.sznagy, self.isometric, self.egervary_n1]
        return [self.ring, str(self.dim), self.gram, self.operator] + [
            "true" if f else "false" for f in flags
        ]


def census_row(t: Operator, max_n: int, max_power: int) -> CensusRow:
    halmos = verify_dilation(t, HALMOS).ok
    egervary, extends = True, True
    for n in range(1, max_n + 1):
        rep = verify_dilation(t, EGERVARY, n=n)
        egervary = egervary and rep.ok
        extends = extends and all(h for k, h in rep.power_checks if k == n + 1)
    sznagy = verify_dilation(t, SZNAGY, max_power=max_power).ok
    isometric = verify_dilation(t, ISOMETRIC, max_power=max_power).ok
    return CensusRow(
        ring_id(t.ring), t.dim, format_matrix(t.space.gram), format_matrix(t),
        halmos, egervary, sznagy, isometric, extends,
    )


def exhaustive_verify(space: Space, max_n: int = 3, max_power: int = 6) -> list[CensusRow]:
    """Verify all four dilations for every self-adjoint operator on ``space``.

    ``egervary_n1`` is true when, for every ``N`` in ``1..max_n``, the power
    identity happens to hold at ``N+1`` as well.
    """
    rows = [census_row(t, max_n, max_power) for t in enumerate_self_adjoint(space)]
    rows.sort(key=lambda r: r.as_csv_row())
    return rows


def census_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CENSUS_HEADER)
    for row in sorted(rows, key=lambda r: r.as_csv_row()):
        writer.writerow(row.as_csv_row())
    return buf.getvalue()


# -- commuting dilation search ------------------------------------------------------------


@dataclass
class AndoResult:
    pair: tuple[Operator, Operator]
    found: bool
    witness: tuple[Operator, Operator] | None
    search_space: int
    unitaries_with_corner: tuple[int, int] = (0, 0)
    shape: str = "halmos (2d)"

    def lines(self) -> list[str]:
        t1, t2 = self.pair
        out = [
            f"ando search shape={self.shape} T1={format_matrix(t1)} T2={format_matrix(t2)}",
            f"search_space={self.search_space} "
            f"unitaries={self.unitaries_with_corner[0]},{self.unitaries_with_corner[1]}",
            f"found={int(self.found)}",
        ]
        if self.witness is not None:
            out.append(f"U1={format_matrix(self.witness[0])}")
            out.append(f"U2={format_matrix(self.witness[1])}")
        return out


def _unitaries_with_corner(t: Operator) -> list[Operator]:
    ring, d = t.ring, t.dim
    cells = 3 * d * d
    found = []
    for flat in itertools.product(range(ring.order), repeat=cells):
        free = np.array(flat, dtype=np.int64).reshape(3, d, d)
        u = block_operator(t, [[t.entries, free[0]], [free[1], free[2]]])
        if classify(u).unitary:
            found.append(u)
    return found


def check_ando_witness(t1: Operator, t2: Operator, u1: Operator, u2: Operator) -> bool:
    """Re-verify a witness from scratch: unitary, commuting, correct corners."""
    return (
        classify(u1).unitary
        and classify(u2).unitary
        and u1 @ u2 == u2 @ u1
        and compress(u1, 0, t1.dim) == t1
        and compress(u2, 0, t2.dim) == t2
    )


def ando_search(t1: Operator, t2: Operator, budget: int = DEFAULT_ANDO_BUDGET) -> AndoResult:
    """Look for commuting unitaries on ``V + V`` with corners ``t1`` and ``t2``.

    The three free ``d x d`` blocks of each unitary are brute-forced. A negative
    result only rules out this dilation size.
    """
    if t1.space != t2.space:
        raise SpaceMismatch("T1 and T2 must act on the same space")
    if not (is_self_adjoint(t1) and is_self_adjoint(t2)):
        raise NotSelfAdjoint("both operators must be self-adjoint")
    if t1 @ t2 != t2 @ t1:
        raise ValueError("T1 and T2 do not commute")
    per_operator = t1.ring.order ** (3 * t1.dim * t1.dim)
    if per_operator > budget:
        raise SearchTooLarge(f"{per_operator} candidates per corner exceeds budget {budget}")
    c1 = _unitaries_with_corner(t1)
    c2 = c1 if t2 == t1 else _unitaries_with_corner(t2)
    result = AndoResult((t1, t2), False, None, 2 * per_operator, (len(c1), len(c2)))
    for u1 in c1:
        for u2 in c2:
            if u1 @ u2 == u2 @ u1:
                result.found = True
                result.witness = (u1, u2)
                return result
    return result
