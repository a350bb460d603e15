"""Commutative *-rings of characteristic 2.

Elements are residues of binary polynomials modulo a fixed modulus of degree
``k``, stored as integer bitmasks (bit ``i`` is the coefficient of ``x**i``).
Two kinds are supported:

``gf2k``
    the field GF(2^k); the modulus must be irreducible.
``quotient``
    GF(2)[x]/(p) for an arbitrary degree-k ``p``, which may have zero divisors.

The involution is either the identity or, for ``gf2k`` with even ``k``, the
Frobenius power ``a -> a**(2**(k/2))``, the unique automorphism of order 2.

Scalar arithmetic works on plain ints; the ``*_arrays`` methods are the
vectorised kernels used by the matrix code.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import (
    ElementOutOfRange,
    InvalidInvolution,
    InvalidRingSpec,
    NotAUnit,
    ReducibleModulus,
    RingMismatch,
)

MAX_DEGREE = 16
# full multiplication tables are built up to this degree (256 x 256 entries)
TABLE_DEGREE = 8

KINDS = ("gf2k", "quotient")


# -- binary polynomial helpers ------------------------------------------------


def clmul(a: int, b: int) -> int:
    """Carry-less product of two binary polynomials."""
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: int, b: int) -> int:
    return poly_divmod(a, b)[1]


def poly_egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b)`` over GF(2)."""
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while b:
        q, r = poly_divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 ^ clmul(q, s1)
        t0, t1 = t1, t0 ^ clmul(q, t1)
    return a, s0, t0


def is_irreducible(p: int) -> bool:
    """Irreducibility over GF(2) by trial division with every polynomial of
    degree 1 .. deg(p)//2."""
    deg = p.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for q in range(1 << d, 1 << (d + 1)):
            if poly_mod(p, q) == 0:
                return False
    return True


def lowest_irreducible(k: int) -> int:
    for p in range(1 << k, 1 << (k + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError("unreachable: irreducibles exist in every degree")


def _clmul_mod_arrays(a: np.ndarray, b: np.ndarray, k: int, modulus: int) -> np.ndarray:
    a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
    r = np.zeros(a.shape, dtype=np.int64)
    for i in range(k):
        r ^= np.where((b >> i) & 1, a << i, 0)
    for i in range(2 * k - 2, k - 1, -1):
        r ^= np.where((r >> i) & 1, modulus << (i - k), 0)
    return r


# -- ring descriptor ------------------------------------------------------------


@dataclass(frozen=True)
class RingSpec:
    """Descriptor of a characteristic-2 *-ring.

    ``star`` is 0 for the identity involution, otherwise the exponent ``m`` of
    the Frobenius map ``a -> a**(2**m)``.
    """

    kind: str = "gf2k"
    k: int = 1
    modulus: int = 0b10
    star: int = 0

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise InvalidRingSpec(f"unknown ring kind {self.kind!r}")
        if not 1 <= self.k <= MAX_DEGREE:
            raise InvalidRingSpec(f"degree k={self.k} outside 1..{MAX_DEGREE}")
        if self.modulus.bit_length() - 1 != self.k:
            raise InvalidRingSpec(
                f"modulus {self.modulus:#x} does not have degree k={self.k}"
            )
        if self.kind == "gf2k" and not is_irreducible(self.modulus):
            raise ReducibleModulus(f"modulus {self.modulus:#x} is reducible over GF(2)")
        if self.star:
            if self.kind != "gf2k" or self.k % 2 or self.star != self.k // 2:
                raise InvalidInvolution(
                    f"frobenius:{self.star} is not an order-2 automorphism of "
                    f"{self.kind} k={self.k}"
                )

    def __str__(self) -> str:
        star = f"frobenius:{self.star}" if self.star else "identity"
        return f"{self.kind} k={self.k} modulus={self.modulus:x} star={star}"


class Ring:
    """Handle for a validated :class:`RingSpec` with cached lookup tables.

    Use :func:`ring_make` rather than constructing directly; handles are cached
    per spec so that equal specs give the same object.
    """

    def __init__(self, spec: RingSpec):
        spec.validate()
        self.spec = spec
        self.k = spec.k
        self.modulus = spec.modulus
        self.order = 1 << spec.k
        self.is_field = spec.kind == "gf2k" or is_irreducible(spec.modulus)

        everything = np.arange(self.order, dtype=np.int64)
        if self.k <= TABLE_DEGREE:
            self._mul_table = _clmul_mod_arrays(
                everything[:, None], everything[None, :], self.k, self.modulus
            )
        else:
            self._mul_table = None

        table = everything
        for _ in range(spec.star):
            table = self.mul_arrays(table, table)
        self._star_table = table
        self.fixed_elements = everything[table == everything]

        self.zero = Elem(self, 0)
        self.one = Elem(self, 1)

    # scalar arithmetic on masks

    def check(self, a: int) -> int:
        a = int(a)
        if a < 0 or a >> self.k:
            raise ElementOutOfRange(f"mask {a:#x} out of range for k={self.k}")
        return a

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        return poly_mod(clmul(a, b), self.modulus)

    def inv(self, a: int) -> int:
        g, s, _ = poly_egcd(a, self.modulus)
        if g != 1:
            raise NotAUnit(f"{a:x} is not a unit in {self}")
        return poly_mod(s, self.modulus)

    def is_unit(self, a: int) -> bool:
        return a != 0 and poly_egcd(a, self.modulus)[0] == 1

    def star(self, a: int) -> int:
        return int(self._star_table[a])

    def pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    # vectorised kernels

    def mul_arrays(self, a, b) -> np.ndarray:
        """Elementwise product with numpy broadcasting."""
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return _clmul_mod_arrays(a, b, self.k, self.modulus)

    def star_arrays(self, a) -> np.ndarray:
        if not self.spec.star:
            return np.asarray(a, dtype=np.int64)
        return self._star_table[a]

    # elements

    def __call__(self, value: int | Elem) -> Elem:
        if isinstance(value, Elem):
            if value.ring != self:
                raise RingMismatch(f"element of {value.ring} used in {self}")
            return value
        return Elem(self, self.check(value))

    def elements(self) -> Iterator[Elem]:
        for a in range(self.order):
            yield Elem(self, a)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        if self.spec.kind == "gf2k":
            name = f"GF({self.order})"
        else:
            name = f"GF(2)[x]/({self.modulus:#x})"
        if self.spec.star:
            name += f"[frobenius:{self.spec.star}]"
        return name


class Elem:
    """Immutable ring element."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value: int):
        self.ring = ring
        self.value = value

    def _other(self, other) -> int | None:
        if isinstance(other, Elem):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        if isinstance(other, int):
            return self.ring.check(other)
        return None

    def __add__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return Elem(self.ring, self.value ^ b)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return Elem(self.ring, self.ring.mul(self.value, b))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** -n
        return Elem(self.ring, self.ring.pow(self.value, n))

    def __truediv__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return self * Elem(self.ring, self.ring.inv(b))

    def inverse(self) -> Elem:
        return Elem(self.ring, self.ring.inv(self.value))

    def star(self) -> Elem:
        return Elem(self.ring, self.ring.star(self.value))

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, Elem):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.spec, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def hex(self) -> str:
        return format(self.value, "x")

    def __repr__(self) -> str:
        return f"{self.ring!r}({self.value:#x})"


# -- constructors ----------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def ring_make(spec: RingSpec) -> Ring:
    return Ring(spec)


def gf2() -> Ring:
    return ring_make(RingSpec("gf2k", 1, 0b10, 0))


def gf2k(k: int, modulus: int | None = None, frobenius: bool = False) -> Ring:
    """GF(2^k), defaulting to the numerically smallest irreducible modulus."""
    if modulus is None:
        modulus = lowest_irreducible(k)
    return ring_make(RingSpec("gf2k", k, modulus, k // 2 if frobenius else 0))


def quotient_ring(modulus: int) -> Ring:
    return ring_make(RingSpec("quotient", modulus.bit_length() - 1, modulus, 0))


# module-level spellings of the element operations


def elem_add(a: Elem, b: Elem) -> Elem:
    return a + b


def elem_mul(a: Elem, b: Elem) -> Elem:
    return a * b


def elem_inv(a: Elem) -> Elem:
    return a.inverse()


def elem_star(a: Elem) -> Elem:
    return a.star()
