"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 composition requested with f_0 != 0.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import combinatorics as comb
from . import faadibruno as fdb
from .errors import CompositionDomainError, DomainError
from .rational import format_rational, parse_rational
from .series import TruncatedSeries, compose
from .verify import run_battery

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_json(text: str):
    """Inline JSON, or a path to a UTF-8 JSON file."""
    if not text.lstrip().startswith(("{", "[")):
        try:
            text = Path(text).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {text!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None


def _rat(value):
    # JSON floats are refused; integers and rational strings are accepted
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise UsageError(f"expected a rational string, got {value!r}")
    return parse_rational(str(value))


def parse_weight_spec(text) -> comb.WeightFunction:
    if text is None:
        return comb.WeightFunction.constant(1)
    spec = _load_json(text)
    if not isinstance(spec, dict) or set(spec) - {"default", "values"}:
        raise UsageError('a weight spec is an object with keys "default" and "values"')
    values = spec.get("values", {})
    if not isinstance(values, dict):
        raise UsageError('"values" must be an object')
    overrides = {}
    for key, value in values.items():
        if not key.isdigit() or int(key) < 1:
            raise UsageError(f"weight keys must be integers >= 1, got {key!r}")
        overrides[int(key)] = _rat(value)
    return comb.WeightFunction(overrides, _rat(spec.get("default", "1")))


def parse_rational_array(text) -> list:
    data = _load_json(text)
    if not isinstance(data, list) or not data:
        raise UsageError("expected a nonempty JSON array of rational strings")
    return [_rat(v) for v in data]


def cmd_count(args, out):
    if args.g is not None and args.mode != "composition-g":
        raise UsageError("--g only applies to --mode composition-g")
    f = parse_weight_spec(args.f)
    if args.mode == "partition":
        value = comb.weighted_partition_weight(args.n, f)
    elif args.mode == "composition":
        value = comb.weighted_composition_weight(args.n, f)
    else:
        value = comb.weighted_composition_weight_g(args.n, f, parse_weight_spec(args.g))
    print(format_rational(value), file=out)


def cmd_enumerate(args, out):
    count = 0
    if args.kind == "compositions":
        for c in comb.enumerate_compositions(args.n):
            print(_dumps(list(c.parts)), file=out)
            count += 1
    else:
        for mv in comb.enumerate_multiplicity_vectors(args.n):
            print(_dumps(list(mv.multiplicities)), file=out)
            count += 1
    print(f"{count} {args.kind}", file=sys.stderr)


def cmd_compose(args, out):
    g = parse_rational_array(args.g)
    f = parse_rational_array(args.f)
    precision = args.precision
    if precision is None:
        precision = max(len(g), len(f)) - 1
    if precision < 0:
        raise UsageError("--precision must be >= 0")
    G = TruncatedSeries.from_polynomial(g, precision)
    F = TruncatedSeries.from_polynomial(f, precision)
    print(_dumps([format_rational(c) for c in compose(G, F).coeffs]), file=out)


def cmd_derivative(args, out):
    f = parse_rational_array(args.f)
    g = parse_rational_array(args.g)
    if len(f) < args.n or len(g) < args.n:
        raise UsageError(f"--f and --g need at least {args.n} derivative values each")
    print(format_rational(fdb.nth_derivative_composite(args.n, f, g)), file=out)


def cmd_fdb_terms(args, out):
    for term in fdb.fdb_terms(args.n):
        print(_dumps({"b": list(term.b), "r": term.r, "coeff": str(term.coeff)}), file=out)


def cmd_verify(args, out):
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    results = run_battery(args.max_n, args.trials, args.seed)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name} ({res.checks} checks)", file=out)
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"counterexample [{failed[0].name}]: {failed[0].counterexample}", file=out)
        return EXIT_MISMATCH
    return 0


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fdbseries",
        description="Weighted integer compositions, power-series composition and Faa di Bruno's formula.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="total weight of weighted partitions/compositions of n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--mode", choices=["partition", "composition", "composition-g"],
                   default="composition-g")
    p.add_argument("--f", help="weight spec for part values (inline JSON or file)")
    p.add_argument("--g", help="weight spec for part counts (inline JSON or file)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list compositions or multiplicity vectors of n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--kind", choices=["compositions", "multiplicity-vectors"],
                   default="compositions")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("compose", help="coefficients of G(F(x)) for polynomial G, F")
    p.add_argument("--g", required=True, help="JSON array of coefficients of G (inline or file)")
    p.add_argument("--f", required=True, help="JSON array of coefficients of F, f_0 must be 0")
    p.add_argument("--precision", "--n", dest="precision", type=int)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("derivative", help="n-th derivative of G(F(x)) from derivative tables")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--f", required=True, help='JSON array [F\'(x), ..., F^(n)(x)]')
    p.add_argument("--g", required=True, help="JSON array [G'(F(x)), ..., G^(n)(F(x))]")
    p.set_defaults(func=cmd_derivative)

    p = sub.add_parser("fdb-terms", help="terms of Faa di Bruno's formula for order n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.set_defaults(func=cmd_fdb_terms)

    p = sub.add_parser("verify", help="run the closed-form vs oracle equivalence battery")
    p.add_argument("--max-n", type=_positive_int, default=10)
    p.add_argument("--trials", type=_positive_int, default=50)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out) or 0
    except CompositionDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
