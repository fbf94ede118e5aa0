"""Command-line front end.

Every verb prints plain lines so the output can be diffed or piped. Exit
status is 0 on success, 2 for bad input and 1 when an internal check fails.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .canonical import canonical_tableau
from .classification import Homogeneous, classify, witness_connected, witness_disconnected
from .errors import EmptyShape, ParseError, PreconditionViolated, ShiftedQError
from .expansion import decompose_row_strip, expand, lr_coefficient, monomial_oracle
from .shapes import (
    components,
    normalize_basic,
    orthogonal_transpose,
    parse_partition,
    parse_shape,
)
from .tableaux import format_tableau

log = logging.getLogger("shiftedq")

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT = 0, 1, 2


def _cells_literal(cells) -> str:
    return " ".join(f"({x},{y})" for x, y in sorted(cells))


def _print_expansion(exp, machine: bool) -> None:
    if machine or exp.is_zero or exp.is_constant:
        print("\n".join(exp.machine_lines()))
    else:
        print(exp.human())


def cmd_expand(args) -> int:
    _print_expansion(expand(parse_shape(args.shape)), args.machine)
    return EXIT_OK


def cmd_coeff(args) -> int:
    shape = parse_shape(args.shape)
    nu = parse_partition(args.nu)
    if not shape.is_valid:
        print(0)
        return EXIT_OK
    if nu.size != shape.size:
        print(0)
        return EXIT_OK
    if shape.size == 0:
        print(1)
        return EXIT_OK
    print(lr_coefficient(normalize_basic(shape).cells, nu))
    return EXIT_OK


def _second_content(shape, verdict):
    if verdict.second_content is not None:
        return verdict.second_content
    terms = sorted(expand(shape).terms, key=tuple, reverse=True)
    return terms[1] if len(terms) > 1 else None


def cmd_classify(args) -> int:
    shape = parse_shape(args.shape)
    if not shape.is_valid:
        print("ZERO 0")
        return EXIT_OK
    if shape.size == 0:
        print("EMPTY_SHAPE 1")
        return EXIT_OK
    verdict = classify(shape)
    if isinstance(verdict, Homogeneous):
        print(f"HOMOGENEOUS k={verdict.k} nu={verdict.nu.literal()} family={verdict.family}")
        return EXIT_OK
    second = _second_content(shape, verdict)
    print(f"NOT_HOMOGENEOUS second_content={second.literal() if second else '?'}")
    if verdict.witness is not None:
        where = " on the orthogonal transpose" if verdict.witness.on_transpose else ""
        print(f"witness {verdict.witness.lemma}{where}:")
        print(format_tableau(verdict.witness.tableau))
    return EXIT_OK


def cmd_canonical(args) -> int:
    shape = parse_shape(args.shape)
    if not shape.is_valid:
        print("ZERO 0")
        return EXIT_OK
    try:
        result = canonical_tableau(normalize_basic(shape) if args.basic else shape)
    except EmptyShape:
        print("EMPTY_SHAPE 1")
        return EXIT_OK
    print(format_tableau(result.tableau))
    for i, band in enumerate(result.bands, start=1):
        print(f"P{i} {_cells_literal(band)}")
    return EXIT_OK


def cmd_ot(args) -> int:
    shape = parse_shape(args.shape)
    if not shape.is_valid:
        print("ZERO 0")
        return EXIT_OK
    if shape.size == 0:
        print("EMPTY_SHAPE 1")
        return EXIT_OK
    print(orthogonal_transpose(normalize_basic(shape).cells).literal())
    return EXIT_OK


def cmd_decompose(args) -> int:
    lam = parse_partition(args.partition)
    _print_expansion(decompose_row_strip(lam, args.n), args.machine)
    return EXIT_OK


def cmd_witness(args) -> int:
    shape = parse_shape(args.shape)
    if not shape.is_valid or shape.size == 0:
        print("NONE")
        return EXIT_OK
    cells = normalize_basic(shape).cells
    try:
        if len(components(cells)) > 1:
            w = witness_disconnected(cells)
        else:
            w = witness_connected(cells)
    except PreconditionViolated as exc:
        print(f"NONE ({exc})")
        return EXIT_OK
    if w is None:
        print("NONE")
        return EXIT_OK
    where = " ot" if w.on_transpose else ""
    print(f"{w.lemma}{where} content={w.content.literal()}")
    print(format_tableau(w.tableau))
    return EXIT_OK


def cmd_monomial(args) -> int:
    shape = parse_shape(args.shape)
    m = args.variables if args.variables is not None else max(shape.size, 1)
    if m < 1:
        raise ParseError(f"--variables must be positive, got {m}")
    poly = monomial_oracle(shape, m)
    if args.machine:
        if not poly.terms:
            print("ZERO 0")
        for e, c in sorted(poly.terms.items(), reverse=True):
            print(f"{c} {','.join(map(str, e))}")
    else:
        print(poly)
    return EXIT_OK


def cmd_sweep(args) -> int:
    from .sweep import ALL_CHECKS

    names = args.checks or list(ALL_CHECKS)
    unknown = [n for n in names if n not in ALL_CHECKS]
    if unknown:
        raise ParseError(f"unknown check {unknown[0]!r}; choose from {', '.join(ALL_CHECKS)}")
    ok = True
    for name in names:
        result = ALL_CHECKS[name](args.max_cells, jobs=args.jobs)
        print(result.line(), flush=True)
        for message in result.failures[1:10]:
            print(f"  {message}")
        ok = ok and result.passed
    return EXIT_OK if ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftedq",
        description="Skew Schur Q-functions: shifted LR expansions and homogeneity.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", help="expand Q_{lambda/mu} in the Q basis")
    p.add_argument("shape", help="skew shape such as 6,4,3,2,1/5")
    p.add_argument("--machine", action="store_true", help="one '<coeff> <nu>' line per term")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("coeff", help="a single coefficient f^lambda_{mu nu}")
    p.add_argument("shape")
    p.add_argument("nu")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("classify", help="decide whether the expansion has a single term")
    p.add_argument("shape")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("canonical", help="the canonical tableau and its bands")
    p.add_argument("shape")
    p.add_argument("--basic", action="store_true", help="normalize the shape first")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("ot", help="orthogonal transpose of the normalized shape")
    p.add_argument("shape")
    p.set_defaults(func=cmd_ot)

    p = sub.add_parser("decompose", help="closed form for Q_{lambda/(n)}")
    p.add_argument("partition")
    p.add_argument("n", type=int)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("witness", help="an amenable tableau certifying a second term")
    p.add_argument("shape")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("monomial", help="brute-force monomial expansion")
    p.add_argument("shape")
    p.add_argument("--variables", "--max-value", dest="variables", type=int, default=None,
                   help="number of variables (largest letter); defaults to the shape size")
    p.add_argument("--machine", action="store_true", help="one '<coeff> <exponents>' line per monomial")
    p.set_defaults(func=cmd_monomial)

    p = sub.add_parser("sweep", help="run the corpus consistency checks")
    p.add_argument("--max-cells", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("checks", nargs="*", help="subset of checks to run (default: all)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except AssertionError as exc:
        log.debug("internal check failed", exc_info=True)
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ShiftedQError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

if __name__ == "__main__":
    sys.exit(main())
