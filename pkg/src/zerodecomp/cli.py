"""Command line interface: ``zerodecomp {charset,decompose,multiplicity,verify}``.

Exit status 0 on success, 1 for unreadable or malformed input, 2 when the
algorithms reject the system (not zero-dimensional, order cap exceeded).
"""

import argparse
import logging
import sys

from .certify import certify
from .dualspace import dual_basis
from .errors import (CapExceededError, NotZeroDimensionalError, ParseError,
                     PointNotZeroError, UsageError, ZeroDecompError)
from .mzdecomp import Strategy, zero_decomp_multi
from .parser import parse_point, parse_system
from .report import (certification_text, charset_json, decomposition_json,
                     decomposition_text, dumps, multiplicity_json, charset_text)
from .wucharset import wu_charset

EXIT_OK, EXIT_INPUT, EXIT_ALGORITHM = 0, 1, 2


def _bound(text):
    if text == "bezout":
        return text
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'bezout' or a positive integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("bound must be positive")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _add_decompose_options(p):
    p.add_argument("--bound", type=_bound, default="bezout",
                   help="zero-count bound: 'bezout' (default) or a positive integer")
    p.add_argument("--no-prop3", action="store_true",
                   help="disable the reductum fallback when an initial power reduces to zero")
    p.add_argument("--factor-initials", action="store_true",
                   help="branch on the squarefree factors of the initials")
    p.add_argument("--update-bound", action="store_true",
                   help="lower the bound by exactly counted triangular components")
    p.add_argument("--split-components", action="store_true",
                   help="split triangular components along the factors of their first element")
    p.add_argument("--workers", type=_positive, default=1,
                   help="worker processes for the worklist (default 1)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zerodecomp",
        description="Multiplicity-preserving zero decomposition of polynomial systems over Q.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charset", help="Wu characteristic set")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("decompose", help="multiplicity-preserving zero decomposition")
    p.add_argument("file")
    _add_decompose_options(p)
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="json also enumerates and certifies rational zeros")

    p = sub.add_parser("multiplicity", help="local multiplicity at a rational point")
    p.add_argument("file")
    p.add_argument("--point", required=True, help="comma-separated rationals, e.g. 1,0,-1/2")
    p.add_argument("--cap", type=_positive, default=None,
                   help="largest functional order to try (default: Bezout bound)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="decompose and certify multiplicities at rational zeros")
    p.add_argument("file")
    _add_decompose_options(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _strategy(args):
    return Strategy(prop3=not args.no_prop3, factor_initials=args.factor_initials,
                    update_bound=args.update_bound, split_components=args.split_components)


def _read(path):
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return parse_system(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except UnicodeDecodeError:
        raise UsageError(f"{path} is not valid UTF-8") from None


def _run(args, out):
    system = _read(args.file)
    polys = list(system.polys)
    if args.command == "charset":
        outcome = wu_charset(polys)
        if args.format == "json":
            out.write(dumps(charset_json(system.order, outcome)) + "\n")
        else:
            out.write(charset_text(outcome))
        return
    if args.command == "multiplicity":
        point = parse_point(args.point, system.order)
        db = dual_basis(polys, point, args.cap)
        if args.format == "json":
            out.write(dumps(multiplicity_json(db)) + "\n")
        else:
            out.write(f"{db.dimension}\n")
        return
    result = zero_decomp_multi(polys, args.bound, _strategy(args), workers=args.workers)
    if args.command == "decompose" and args.format == "text":
        out.write(decomposition_text(result, verbose=args.verbose))
        return
    cert = certify(polys, result)
    if args.format == "json":
        out.write(dumps(decomposition_json(system.order, result, cert)) + "\n")
    else:
        out.write(decomposition_text(result))
        out.write("\n")
        out.write(certification_text(cert))


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=err)
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        _run(args, out)
    except (ParseError, UsageError, PointNotZeroError) as exc:
        err.write(f"zerodecomp: error: {exc}\n")
        return EXIT_INPUT
    except (NotZeroDimensionalError, CapExceededError) as exc:
        err.write(f"zerodecomp: {type(exc).__name__}: {exc}\n")
        return EXIT_ALGORITHM
    except ZeroDecompError as exc:
        err.write(f"zerodecomp: {type(exc).__name__}: {exc}\n")
        return EXIT_ALGORITHM
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
