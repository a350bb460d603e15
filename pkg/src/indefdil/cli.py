"""Command-line interface.

Exit status is 0 when every required check passes, 1 when one fails and 2 on
bad input (unparsable document, invalid ring, singular Gram, ...).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .dilation import (
    DEFAULT_MAX_POWER,
    EGERVARY,
    HALMOS,
    KINDS,
    egervary_dilate,
    halmos_dilate,
    isometric_sznagy_dilate,
    sznagy_dilate,
    verify_dilation,
)
from .document import Document, parse_document, parse_ring, serialize_document
from .errors import ParseError
from .explorer import (
    DEFAULT_ANDO_BUDGET,
    ando_search,
    census_csv,
    check_ando_witness,
    exhaustive_verify,
)
from .operator import Operator, random_self_adjoint
from .ring import gf2
from .seqspace import SZNAGY
from .space import Space, hyperbolic_gram

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _read_doc(path: str) -> Document:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_document(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _pick(doc: Document, name: str | None) -> Operator:
    if name is None:
        return doc.first()
    try:
        return doc.operators[name]
    except KeyError:
        raise ParseError(f"no operator named {name!r}") from None


def _parse_gram(text: str) -> np.ndarray:
    rows = [[int(tok, 16) for tok in row.split()] for row in text.split(";")]
    return np.array(rows, dtype=np.int64)


def cmd_gen(args) -> int:
    ring = parse_ring(args.ring) if args.ring else gf2()
    gram = _parse_gram(args.gram) if args.gram else None
    space = Space(ring, args.dim, gram)
    seed = int(os.environ.get("INDEF_SEED", args.seed))
    t = random_self_adjoint(space, seed, nonzero=args.nonzero)
    _emit(serialize_document(Document(ring, space, {args.name: t})), args.output)
    return EXIT_OK


def cmd_dilate(args) -> int:
    doc = _read_doc(args.file)
    t = _pick(doc, args.operator)
    status = EXIT_OK
    if args.kind in (HALMOS, EGERVARY):
        u = halmos_dilate(t) if args.kind == HALMOS else egervary_dilate(t, args.n or 1)
        out = Document(doc.ring, u.space, {"U": u})
    else:
        # lazy dilations are infinite; write their compressed powers instead
        power = args.power or DEFAULT_MAX_POWER
        op = sznagy_dilate(t) if args.kind == SZNAGY else isometric_sznagy_dilate(t)
        powers = op.compress_powers(power)
        out = Document(doc.ring, t.space, {f"P{k}": p for k, p in enumerate(powers, start=1)})
        report = verify_dilation(t, args.kind, max_power=power)
        if not report.ok:
            sys.stderr.write("\n".join(report.human_lines()) + "\n")
            status = EXIT_FAIL
    _emit(serialize_document(out), args.output)
    return status


def cmd_verify(args) -> int:
    doc = _read_doc(args.file)
    t = _pick(doc, args.operator)
    report = verify_dilation(t, args.kind, n=args.n, max_power=args.power, window=args.window)
    print("\n".join(report.human_lines()))
    print()
    print("\n".join(report.machine_lines()))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_explore(args) -> int:
    ring = parse_ring(args.ring) if args.ring else gf2()
    rows = []
    for d in range(1, args.max_dim + 1):
        if args.gram == "hyperbolic":
            if d % 2:
                continue
            space = Space(ring, d, hyperbolic_gram(d))
        else:
            space = Space(ring, d)
        rows += exhaustive_verify(space, args.max_n, args.max_power)
    _emit(census_csv(rows), args.output)
    failed = [r for r in rows if not r.passed]
    if failed:
        sys.stderr.write(f"{len(failed)} of {len(rows)} operators failed a theorem check\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_ando(args) -> int:
    doc = _read_doc(args.pair)
    ops = list(doc.operators.values())
    if len(ops) < 2:
        raise ParseError("ando needs a document with two operators")
    result = ando_search(ops[0], ops[1], budget=args.budget)
    print("\n".join(result.lines()))
    if not result.found:
        return EXIT_FAIL
    verified = check_ando_witness(ops[0], ops[1], *result.witness)
    print(f"witness_verified={int(verified)}")
    return EXIT_OK if verified else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indefdil",
        description="Construct and verify dilations of self-adjoint operators "
        "on indefinite inner product modules in characteristic 2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a random self-adjoint operator")
    p.add_argument("--ring", help="ring line, e.g. 'ring gf2k k=2 modulus=7 star=identity'")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--gram", help="Gram rows in hex, ';'-separated, e.g. '0 1;1 0'")
    p.add_argument("--seed", type=int, default=0, help="overridden by $INDEF_SEED")
    p.add_argument("--name", default="T")
    p.add_argument("--nonzero", action="store_true", help="resample until T != 0")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("dilate", cmd_dilate, "construct a dilation"),
        ("verify", cmd_verify, "verify a dilation and print a report"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", help="input document ('-' for stdin)")
        p.add_argument("--kind", choices=KINDS, required=True)
        p.add_argument("--n", type=int, help="Egervary N (default 1)")
        p.add_argument("--power", type=int, help="largest power to check/write")
        p.add_argument("--operator", help="operator name (default: first)")
        if name == "verify":
            p.add_argument("--window", type=int, default=8)
        else:
            p.add_argument("-o", "--output")
        p.set_defaults(func=func)

    p = sub.add_parser("explore", help="exhaustive census as CSV")
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-power", type=int, default=6)
    p.add_argument("--ring")
    p.add_argument("--gram", choices=("identity", "hyperbolic"), default="identity")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("ando", help="search commuting unitary dilations of a pair")
    p.add_argument("--pair", required=True, help="document holding two operators")
    p.add_argument("--budget", type=int, default=DEFAULT_ANDO_BUDGET)
    p.set_defaults(func=cmd_ando)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
