"""Command-line interface: ``finspin {length,transform,reduce,gtensor,check}``.

Every command writes JSON to stdout (or ``--out``). Inputs are given inline as
a positional JSON argument, via ``--in FILE``, or on stdin.

Exit codes: 0 success, 1 property failure, 2 input error.
"""
import argparse
import json
import sys

from . import checks, herm16, isometry, jsonio, reduction
from .jsonio import InputError
from .linalg import det4

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _load(inline, path):
    try:
        if inline is not None:
            text = inline
        elif path is not None:
            with open(path) as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        return json.loads(text)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc


def _load_arg(value):
    """``value`` is inline JSON, or a path to a JSON file."""
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        return _load(None, value)


def _emit(obj, out):
    text = obj if isinstance(obj, str) else json.dumps(obj) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _length_json(q):
    length = herm16.finsler_length_from_quartic(q)
    return {"quartic": q, "length": "undefined" if length is None else length}


def cmd_length(args):
    X = jsonio.vec16_from_json(_load(args.data, args.infile))
    _emit(_length_json(herm16.quartic_det(X)), args.out)
    return EXIT_OK


def cmd_transform(args):
    D = jsonio.matrix_from_json(_load_arg(args.matrix))
    if args.require_sl4 and abs(det4(D) - 1) > args.tol:
        print(f"D is not in SL(4,C): det D = {det4(D):.12g}", file=sys.stderr)
        return EXIT_FAIL
    if args.emit_L:
        _emit(jsonio.l16_to_json(isometry.l_matrix(D)), args.out)
        return EXIT_OK
    X = jsonio.vec16_from_json(_load(args.data, args.infile))
    _emit(jsonio.vec16_to_json(isometry.induced_transform(D, X)), args.out)
    return EXIT_OK


def cmd_reduce(args):
    X = jsonio.vec16_from_json(_load(args.data, args.infile))
    R = reduction.split(X)
    qd = herm16.quartic_det(X)
    qr = reduction.quartic_reduced(R)
    _emit({"split": R.to_json(), "quartic_det": qd, "quartic_reduced": qr,
           "abs_diff": abs(qd - qr)}, args.out)
    return EXIT_OK


def cmd_gtensor(args):
    try:
        _emit(herm16.gtensor().dumps(), args.out)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_check(args):
    try:
        config = checks.RunConfig(seed=args.seed, samples=args.samples, tol=args.tol,
                                  corrupt_tau=args.corrupt_tau, only=tuple(args.only))
        report = checks.run(config)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(report.dumps(), args.out)
    if not args.quiet:
        print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _add_input(p):
    p.add_argument("data", nargs="?", help="inline JSON input (default: --in or stdin)")
    p.add_argument("--in", dest="infile", help="read JSON input from file")
    p.add_argument("--out", help="write JSON output to file")


def build_parser():
    parser = argparse.ArgumentParser(prog="finspin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("length", help="quartic det X and Finslerian length of a 16-vector")
    _add_input(p)
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("transform", help="apply X -> D X D^+ to a 16-vector")
    _add_input(p)
    p.add_argument("--matrix", "-D", required=True,
                   help="4x4 complex matrix as inline JSON or a JSON file path")
    p.add_argument("--require-sl4", action="store_true", help="fail unless det D = 1")
    p.add_argument("--emit-L", action="store_true", help="print the 16x16 matrix L(D) instead")
    p.add_argument("--tol", type=float, default=1e-10, help="tolerance for --require-sl4")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("reduce", help="split a 16-vector and compare both quartic forms")
    _add_input(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gtensor", help="export the integer coefficients of the quartic form")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_gtensor)

    p = sub.add_parser("check", help="run the randomized property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--tol", type=float, default=None,
                   help="override the threshold of every floating-point property")
    p.add_argument("--only", nargs="+", default=[], choices=checks.NAMES, metavar="NAME",
                   help="run only the named properties")
    p.add_argument("--corrupt-tau", action="store_true",
                   help="negative control: run with a deliberately broken tau table")
    p.add_argument("--out", help="write the JSON report to file")
    p.add_argument("--quiet", "-q", action="store_true", help="no summary on stderr")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"finspin: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # validation errors from the library (shape, non-finite, non-Hermitian)
        print(f"finspin: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
