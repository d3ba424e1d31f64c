"""Command-line front end.

Subcommands: expand, to-product, from-g, verify, congruence, roots-check.
Exit codes: 0 success/pass, 1 verification failure, 2 usage or input error.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import congruences, identities, pfe, roots
from .series import TruncatedSeries


class UsageError(Exception):
    pass


def _parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: {exc}") from None


def _parse_rational_list(text):
    return [_parse_rational(part) for part in text.split(",") if part.strip()]


def read_sequence_file(path, start=0):
    """One value per line: "value" (implicit index from start) or "n value".

    Rationals as a/b; '#' starts a comment.  Returns a dict index -> Fraction.
    """
    values = {}
    implicit = start
    try:
        handle = sys.stdin if path == "-" else open(path)
    except OSError as exc:
        raise UsageError(f"cannot open {path}: {exc}") from None
    with handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                if len(parts) == 1:
                    values[implicit] = Fraction(parts[0])
                    implicit += 1
                elif len(parts) == 2:
                    values[int(parts[0])] = Fraction(parts[1])
                else:
                    raise ValueError("expected 'value' or 'n value'")
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"{path}:{lineno}: {exc}") from None
    return values

def _dense(values, start, N, what):
    out = []
    for n in range(start, N + 1):
        if n not in values:
            raise UsageError(f"missing {what}({n}) in input")
        out.append(values[n])
    return [Fraction(0)] * start + out


def _report_dict(report):
    out = {"name": report.name, "order": report.order, "passed": report.passed}
    if not report.passed:
        out["first_failure"] = str(report.first_failure)
        out["lhs"] = str(report.lhs)
        out["rhs"] = str(report.rhs)
    return out


def emit(record, fmt, stream=None):
    if stream is None:
        stream = sys.stdout
    if fmt == "json":
        json.dump(record, stream, indent=2)
        stream.write("\n")
        return
    coeffs = record.get("coefficients", [])
    if fmt == "bfile":
        for n, (num, den) in enumerate(coeffs):
            if den != "1":
                raise UsageError(
                    f"bfile output needs integers; coefficient {n} is {num}/{den}"
                )
            stream.write(f"{n} {num}\n")
    elif fmt == "csv":
        stream.write("n,numerator,denominator\n")
        for n, (num, den) in enumerate(coeffs):
            stream.write(f"{n},{num},{den}\n")
    else:
        raise UsageError(f"unknown format {fmt!r}")


def _coeff_pairs(values):
    return [[str(Fraction(v).numerator), str(Fraction(v).denominator)] for v in values]


def _series_params(args):
    params = {}
    if args.r is not None:
        params["r"] = _parse_rational(args.r)
    if args.z is not None:
        params["z"] = _parse_rational(args.z)
    if args.a is not None:
        params["a"] = _parse_rational(args.a)
    if args.m is not None:
        params["m"] = args.m
    if args.x is not None:
        params["x"] = tuple(_parse_rational_list(args.x))
    return params


def cmd_expand(args):
    params = _series_params(args)
    try:
        series = identities.named_series(args.name, args.order, **params)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    record = {
        "name": args.name,
        "params": {k: str(v) for k, v in params.items()},
        "order": args.order,
        "coefficients": _coeff_pairs(series.coeffs),
    }
    emit(record, args.format)
    return 0


def cmd_to_product(args):
    values = read_sequence_file(args.input, start=0)
    P = _dense(values, 0, args.order, "P")
    if P[0] != 1:
        raise UsageError("input series must have constant term 1")
    b, _ = pfe.series_to_pfe(P, with_freq=False)
    record = {
        "name": "product_exponents",
        "params": {"input": args.input},
        "order": args.order,
        "coefficients": _coeff_pairs(b),
    }
    emit(record, args.format)
    return 0


def cmd_from_g(args):
    values = read_sequence_file(args.input, start=1)
    g = _dense(values, 1, args.order, "g")
    b, P, _ = pfe.g_to_pfe(g, with_freq=False)
    record = {
        "name": "from_column_sums",
        "params": {"input": args.input},
        "order": args.order,
        "coefficients": _coeff_pairs(P),
        "exponents": _coeff_pairs(b),
    }
    emit(record, args.format)
    return 0


def cmd_verify(args):
    params = {}
    if args.r is not None:
        params["r"] = _parse_rational(args.r)
    if args.s is not None:
        params["s"] = _parse_rational(args.s)
    if args.z is not None:
        params["z"] = _parse_rational(args.z)
    if args.m is not None:
        params["m"] = args.m
    if args.kpow is not None:
        params["k"] = _parse_rational(args.kpow)
    if args.x is not None:
        params["x"] = tuple(_parse_rational_list(args.x))
    if args.series is not None:
        coeffs = _parse_rational_list(args.series)
        params["Q"] = TruncatedSeries(coeffs, args.order or len(coeffs) - 1)
    elif args.key == "pr_ps" and args.random_series:
        rng = random.Random(args.seed)
        N = args.order or 40
        coeffs = [Fraction(1)] + [
            Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(N)
        ]
        params["Q"] = TruncatedSeries(coeffs)
    try:
        report = identities.verify(args.key, N=args.order, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    record = {
        "name": args.key,
        "params": {k: str(v) for k, v in params.items() if k != "Q"},
        "order": report.order,
        "report": _report_dict(report),
    }
    if args.format == "json":
        emit(record, "json")
    else:
        print(report.describe())
    return 0 if report.passed else 1


def cmd_congruence(args):
    r = _parse_rational(args.r)
    try:
        fam = congruences.family(args.p, args.family)
        report = congruences.check_family(fam, r, args.max_m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(report.describe())
    return 0 if report.passed else 1


def cmd_roots_check(args):
    values = read_sequence_file(args.input, start=0)
    P = _dense(values, 0, args.order, "P")
    if P[0] != 1:
        raise UsageError("input series must have constant term 1")
    status = 0
    result = roots.integrality_check(P)
    print(
        f"integrality: P integral={result.p_integral} "
        f"b integral={result.b_integral}"
    )
    if result.p_integral != result.b_integral:
        status = 1
    if args.p is not None:
        r = int(args.r) if args.r is not None else 1
        rep = roots.prime_power_divisibility(P, args.p, r)
        verdict = "pass" if rep.passed else "FAIL"
        print(f"divisibility p={args.p} r={r}: {verdict}")
        if not rep.passed:
            status = 1
    if args.m is not None:
        if args.t is None or args.s is None:
            raise UsageError("--m needs --t and --s")
        try:
            _, integral = roots.root_integrality(P, args.m, args.t, args.s)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(f"root m={args.m} s={args.s}: integral={integral}")
        if not integral:
            status = 1
    return status


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pfecalc",
        description="Exact partition-frequency enumeration toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="emit a named series")
    p.add_argument("name", help=f"one of: {', '.join(identities.SERIES_NAMES)}")
    p.add_argument("--order", "-n", type=int, default=20)
    p.add_argument("--format", default="json", choices=["json", "bfile", "csv"])
    p.add_argument("--r")
    p.add_argument("--z")
    p.add_argument("--a")
    p.add_argument("--m", type=int)
    p.add_argument("--x", help="comma-separated rationals for symmetric()")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("to-product", help="series -> product exponents b")
    p.add_argument("--input", required=True)
    p.add_argument("--order", "-n", type=int, required=True)
    p.add_argument("--format", default="json", choices=["json", "bfile", "csv"])
    p.set_defaults(func=cmd_to_product)

    p = sub.add_parser("from-g", help="column sums g -> P and b")
    p.add_argument("--input", required=True)
    p.add_argument("--order", "-n", type=int, required=True)
    p.add_argument("--format", default="json", choices=["json", "bfile", "csv"])
    p.set_defaults(func=cmd_from_g)

    p = sub.add_parser("verify", help="run a registered identity check")
    p.add_argument("key", help=f"one of: {', '.join(identities.IDENTITY_KEYS)}")
    p.add_argument("--order", "-n", type=int)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--r")
    p.add_argument("--s")
    p.add_argument("--z")
    p.add_argument("--m", type=int)
    p.add_argument("--k", dest="kpow", help="power parameter for squares/triangular")
    p.add_argument("--x", help="comma-separated rationals for newton_symmetric")
    p.add_argument("--series", help="comma-separated coefficients of Q")
    p.add_argument("--random-series", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("congruence", help="check one congruence family")
    p.add_argument("--p", type=int, required=True, choices=[3, 5])
    p.add_argument("--r", required=True)
    p.add_argument("--family", type=int, required=True, help="offset k of the family")
    p.add_argument("--max-m", type=int, default=50)
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("roots-check", help="integrality/divisibility of a series")
    p.add_argument("--input", required=True)
    p.add_argument("--order", "-n", type=int, required=True)
    p.add_argument("--p", type=int, help="prime for divisibility check")
    p.add_argument("--r", help="prime power exponent")
    p.add_argument("--m", type=int, help="root base")
    p.add_argument("--t", type=int, help="divisibility exponent hypothesis")
    p.add_argument("--s", type=int, help="root exponent, s < t")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_roots_check)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
