"""Line-oriented text format for rings, spaces and operators.

::

    %IIPM v1
    ring gf2k k=2 modulus=7 star=frobenius:1
    space dim=2
    gram
    0 1
    1 0
    operator name=T
    1 0
    0 1

Elements are lowercase hex coefficient masks without prefix. The ``space``
block is optional; without it the Gram matrix is the identity and the
dimension is taken from the first operator. Blank lines are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .errors import IIPMError, ElementOutOfRange, ParseError
from .operator import Operator
from .ring import Ring, RingSpec, ring_make
from .space import Space

MAGIC = "%IIPM v1"

_HEX = re.compile(r"[0-9a-f]+\Z")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_INT = re.compile(r"[0-9]+\Z")


@dataclass
class Document:
    ring: Ring
    space: Space | None = None
    operators: dict[str, Operator] = field(default_factory=dict)

    def first(self) -> Operator:
        if not self.operators:
            raise ParseError("document has no operators")
        return next(iter(self.operators.values()))


def format_ring(spec: RingSpec) -> str:
    star = f"frobenius:{spec.star}" if spec.star else "identity"
    return f"ring {spec.kind} k={spec.k} modulus={spec.modulus:x} star={star}"


def parse_ring(line: str, lineno: int | None = None) -> Ring:
    parts = line.split()
    if len(parts) < 2 or parts[0] != "ring":
        raise ParseError(f"expected 'ring <kind> ...', got {line!r}", lineno)
    kind = parts[1]
    fields: dict[str, str] = {}
    for tok in parts[2:]:
        key, sep, value = tok.partition("=")
        if not sep or key not in ("k", "modulus", "star"):
            raise ParseError(f"unknown ring attribute {tok!r}", lineno)
        if key in fields:
            raise ParseError(f"duplicate ring attribute {key!r}", lineno)
        fields[key] = value
    missing = {"k", "modulus", "star"} - fields.keys()
    if missing:
        raise ParseError(f"ring line missing {', '.join(sorted(missing))}", lineno)
    if not _INT.match(fields["k"]):
        raise ParseError(f"bad degree {fields['k']!r}", lineno)
    if not _HEX.match(fields["modulus"]):
        raise ParseError(f"bad modulus {fields['modulus']!r}", lineno)
    star = fields["star"]
    if star == "identity":
        m = 0
    elif star.startswith("frobenius:") and _INT.match(star[len("frobenius:"):]):
        m = int(star[len("frobenius:"):])
        if m == 0:
            raise ParseError("frobenius:0 is spelled 'identity'", lineno)
    else:
        raise ParseError(f"bad star {star!r}", lineno)
    spec = RingSpec(kind, int(fields["k"]), int(fields["modulus"], 16), m)
    try:
        return ring_make(spec)
    except IIPMError as exc:
        raise type(exc)(str(exc), lineno) from None


def _parse_row(ring: Ring, line: str, lineno: int, width: int | None) -> list[int]:
    toks = line.split()
    if width is not None and len(toks) != width:
        raise ParseError(f"expected {width} entries, got {len(toks)}", lineno)
    row = []
    for tok in toks:
        if not _HEX.match(tok):
            raise ParseError(f"bad element {tok!r}", lineno)
        v = int(tok, 16)
        if v >> ring.k:
            raise ElementOutOfRange(f"element {tok} has bits at or above k={ring.k}", lineno)
        row.append(v)
    return row


def _header_value(line: str, word: str, key: str, lineno: int) -> str:
    parts = line.split()
    if len(parts) != 2 or parts[0] != word or not parts[1].startswith(key + "="):
        raise ParseError(f"expected '{word} {key}=...', got {line!r}", lineno)
    return parts[1][len(key) + 1 :]


def parse_document(text: str) -> Document:
    """Strict parse; raises :class:`ParseError` or the violated invariant's error."""
    lines = [(i, ln.rstrip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln.strip()]
    if not lines or lines[0][1] != MAGIC:
        raise ParseError(f"first line must be {MAGIC!r}", lines[0][0] if lines else 1)
    if len(lines) < 2:
        raise ParseError("missing ring line", lines[0][0])
    ring = parse_ring(lines[1][1], lines[1][0])
    doc = Document(ring)
    pos = 2
    dim: int | None = None

    def take_matrix(start: int, width: int | None) -> tuple[np.ndarray, int]:
        rows: list[list[int]] = []
        i = start
        while i < len(lines) and (width is None or len(rows) < width):
            lineno, text_ = lines[i]
            if text_.split()[0] in ("operator", "space", "gram", "ring"):
                break
            row = _parse_row(ring, text_, lineno, width)
            if width is None:
                width = len(row)
                if width == 0:
                    raise ParseError("empty matrix row", lineno)
            rows.append(row)
            i += 1
        last = lines[i - 1][0] if i > start else lines[start - 1][0]
        if width is None or len(rows) != width:
            raise ParseError(f"expected {width} matrix rows, got {len(rows)}", last)
        return np.array(rows, dtype=np.int64), i

    if pos < len(lines) and lines[pos][1].startswith("space"):
        lineno, text_ = lines[pos]
        value = _header_value(text_, "space", "dim", lineno)
        if not _INT.match(value) or int(value) < 1:
            raise ParseError(f"bad dimension {value!r}", lineno)
        dim = int(value)
        pos += 1
        if pos >= len(lines) or lines[pos][1] != "gram":
            raise ParseError("expected 'gram' after space line", lines[pos - 1][0])
        gram_line = lines[pos][0]
        gram, pos = take_matrix(pos + 1, dim)
        try:
            doc.space = Space(ring, dim, gram)
        except IIPMError as exc:
            raise type(exc)(str(exc), gram_line) from None

    space = doc.space
    while pos < len(lines):
        lineno, text_ = lines[pos]
        if not text_.startswith("operator"):
            raise ParseError(f"unknown directive {text_.split()[0]!r}", lineno)
        name = _header_value(text_, "operator", "name", lineno)
        if not _IDENT.match(name):
            raise ParseError(f"bad operator name {name!r}", lineno)
        if name in doc.operators:
            raise ParseError(f"duplicate operator {name!r}", lineno)
        entries, pos = take_matrix(pos + 1, dim)
        if space is None:
            dim = entries.shape[0]
            space = Space(ring, dim)
        doc.operators[name] = Operator(space, entries)
    return doc


def format_rows(m: np.ndarray) -> list[str]:
    return [" ".join(format(int(v), "x") for v in row) for row in m]


def serialize_document(doc: Document) -> str:
    out = [MAGIC, format_ring(doc.ring.spec)]
    if doc.space is not None:
        out.append(f"space dim={doc.space.dim}")
        out.append("gram")
        out += format_rows(doc.space.gram)
    for name, op in doc.operators.items():
        out.append(f"operator name={name}")
        out += format_rows(op.entries)
    return "\n".join(out) + "\n"
