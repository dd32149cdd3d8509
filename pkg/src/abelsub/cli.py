"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 domain or resource error.
The default output format comes from ``ABELSUB_FORMAT`` (text, json or csv);
``--format`` overrides it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import asymptotics as asy
from . import pgroup, rank2
from .arith import is_prime
from .oracle import AbelianGroupTable, ResourceError, dump_subgroups
from .partition import Partition
from .pgroup import DomainError
from .polyring import IntPoly
from .verify import SUITES, run_suite

FORMATS = ("text", "json", "csv")


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _prime(text: str) -> int:
    v = _positive(text)
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"not a prime: {v}")
    return v


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _poly_payload(poly: IntPoly, p: int | None) -> dict:
    out = {"poly": poly.to_json(), "text": str(poly)}
    if p is not None:
        out["p"] = p
        out["value"] = poly.eval(p)
    return out


def _emit_poly(poly: IntPoly, p: int | None, fmt: str, extra: dict) -> str:
    if fmt == "json":
        return json.dumps({**extra, **_poly_payload(poly, p)})
    value = str(poly) if p is None else str(poly.eval(p))
    if fmt == "csv":
        return _csv([["value"], [value]])
    return value


def _emit_int(name: str, value: int, fmt: str, extra: dict) -> str:
    if fmt == "json":
        return json.dumps({**extra, name: value})
    if fmt == "csv":
        return _csv([[name], [value]])
    return str(value)


# -- subcommands --------------------------------------------------------------

def cmd_count_ptype(args) -> tuple[int, str]:
    poly = pgroup.count_exponent(args.lam, args.i)
    return 0, _emit_poly(poly, args.p, args.format, {"lambda": str(args.lam), "i": args.i})


def cmd_profile(args) -> tuple[int, str]:
    prof = pgroup.exponent_profile(args.lam)
    if args.format == "json":
        return 0, json.dumps({"lambda": str(args.lam),
                              "profile": [_poly_payload(c, args.p) for c in prof.counts]})
    rows = []
    for i, c in enumerate(prof.counts):
        rows.append([i, str(c) if args.p is None else c.eval(args.p)])
    if args.format == "csv":
        return 0, _csv([["i", "count"]] + rows)
    return 0, "\n".join(f"{i}: {v}" for i, v in rows)


def cmd_total(args) -> tuple[int, str]:
    if args.lam is not None:
        if args.m is not None or args.n is not None:
            raise DomainError("give either --lambda or --m/--n, not both")
        lam = args.lam
        poly = pgroup.total_rank3(lam) if lam.rank() <= 3 else pgroup.exponent_profile(lam).total()
        return 0, _emit_poly(poly, args.p, args.format, {"lambda": str(lam)})
    if args.m is None or args.n is None:
        raise DomainError("total needs --lambda or both --m and --n")
    _limit(args, args.m, args.n)
    return 0, _emit_int("total", rank2.total_mn(args.m, args.n), args.format, {"m": args.m, "n": args.n})


def _limit(args, *values):
    for v in values:
        if v > args.limit:
            raise DomainError(f"{v} exceeds --limit {args.limit}")


def cmd_count(args) -> tuple[int, str]:
    _limit(args, args.m, args.n)
    v = rank2.count_exponent_mn(args.m, args.n, args.e)
    return 0, _emit_int("count", v, args.format, {"m": args.m, "n": args.n, "e": args.e})


def cmd_dist(args) -> tuple[int, str]:
    _limit(args, args.m, args.n)
    dist = rank2.exponent_distribution(args.m, args.n)
    if args.format == "json":
        return 0, json.dumps({"m": args.m, "n": args.n, "total": dist.total(), "by_exponent": dist.to_json()})
    rows = sorted(dist.items())
    if args.format == "csv":
        return 0, _csv([["exponent", "count"]] + rows)
    return 0, "\n".join(f"{E} {c}" for E, c in rows)


def cmd_enumerate(args) -> tuple[int, str]:
    _limit(args, args.m, args.n)
    keys = rank2.enumerate_keys(args.m, args.n)
    recs = []
    for k in keys:
        order, exp, typ = rank2.key_invariants(k)
        rec = {"a": k.a, "b": k.b, "c": k.c, "d": k.d, "l": k.l,
               "order": order, "exponent": exp, "type": list(typ)}
        if args.elements:
            rec["elements"] = [list(x) for x in sorted(rank2.materialize(k, args.m, args.n))]
        recs.append(rec)
    if args.format == "json":
        return 0, json.dumps({"m": args.m, "n": args.n, "subgroups": recs})
    header = ["a", "b", "c", "d", "l", "order", "exponent", "d1", "d2"]
    rows = [[r["a"], r["b"], r["c"], r["d"], r["l"], r["order"], r["exponent"], *r["type"]] for r in recs]
    if args.elements:
        header.append("elements")
        for row, r in zip(rows, recs):
            row.append(" ".join(f"{x}:{y}" for x, y in r["elements"]))
    if args.format == "csv":
        return 0, _csv([header] + rows)
    return 0, "\n".join(" ".join(map(str, row)) for row in rows)


def cmd_sum_exponents(args) -> tuple[int, str]:
    _limit(args, args.m, args.n)
    v = rank2.sum_of_exponents(args.m, args.n)
    return 0, _emit_int("sum_exponents", v, args.format, {"m": args.m, "n": args.n})


def cmd_mean_exponent(args) -> tuple[int, str]:
    _limit(args, args.n)
    A = asy.mean_exponent_A(args.n)
    text = f"{A.numerator}/{A.denominator}"
    if args.format == "json":
        return 0, json.dumps({"n": args.n, "numerator": A.numerator, "denominator": A.denominator})
    if args.format == "csv":
        return 0, _csv([["n", "numerator", "denominator"], [args.n, A.numerator, A.denominator]])
    return 0, text


def cmd_asymptotic(args) -> tuple[int, str]:
    if args.x_max > args.limit:
        raise DomainError(f"--x-max {args.x_max} exceeds --limit {args.limit}")
    xs = []
    x = 10
    while x < args.x_max:
        xs.append(x)
        x *= 10
    xs.append(args.x_max)
    M, err = asy.mean_value_M(args.prime_limit, args.tol)
    rows = asy.asymptotic_report(xs, M=M)
    if args.format == "json":
        return 0, json.dumps({"M": M, "M_error_estimate": err, "prime_limit": args.prime_limit,
                              "rows": [r.__dict__ for r in rows]})
    return 0, asy.report_csv(rows).rstrip("\n")


def cmd_iso(args) -> tuple[int, str]:
    same = pgroup.profiles_isomorphic(args.lam, args.kappa, args.p)
    if args.format == "json":
        return 0, json.dumps({"lambda": str(args.lam), "kappa": str(args.kappa), "p": args.p, "isomorphic": same})
    if args.format == "csv":
        return 0, _csv([["isomorphic"], [str(same).lower()]])
    return 0, "isomorphic" if same else "not isomorphic"


def cmd_verify(args) -> tuple[int, str]:
    if args.max_order > 4096:
        raise ResourceError(f"--max-order {args.max_order} exceeds the brute-force bound 4096")
    checks = run_suite(args.suite, args.max_order)
    ok = all(c.ok for c in checks)
    if args.format == "json":
        text = json.dumps({"ok": ok, "checks": [c.__dict__ for c in checks]})
    elif args.format == "csv":
        text = _csv([["check", "ok", "detail"]] + [[c.name, c.ok, c.detail] for c in checks])
    else:
        text = "\n".join(c.line() for c in checks)
    return (0 if ok else 1), text


def cmd_subgroups(args) -> tuple[int, str]:
    G = AbelianGroupTable(args.moduli, bound=args.max_order)
    return 0, json.dumps({"moduli": list(G.moduli), "subgroups": dump_subgroups(G)})


def build_parser() -> argparse.ArgumentParser:
    env_fmt = os.environ.get("ABELSUB_FORMAT", "text")
    if env_fmt not in FORMATS:
        env_fmt = "text"
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=env_fmt)
    common.add_argument("--limit", type=_positive, default=rank2.DEFAULT_LIMIT,
                        help="cap on moduli and x (default 10^6)")

    parser = argparse.ArgumentParser(prog="abelsub", description="Count subgroups of finite abelian groups by exponent.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count-ptype", parents=[common], help="subgroups of exponent p^i in a p-group")
    s.add_argument("--lambda", dest="lam", type=_partition, required=True)
    s.add_argument("--i", type=_nonneg, required=True)
    s.add_argument("--p", type=_prime)
    s.set_defaults(func=cmd_count_ptype)

    s = sub.add_parser("profile", parents=[common], help="counts for every exponent p^i")
    s.add_argument("--lambda", dest="lam", type=_partition, required=True)
    s.add_argument("--p", type=_prime)
    s.set_defaults(func=cmd_profile)

    s = sub.add_parser("total", parents=[common], help="total number of subgroups")
    s.add_argument("--lambda", dest="lam", type=_partition)
    s.add_argument("--p", type=_prime)
    s.add_argument("--m", type=_positive)
    s.add_argument("--n", type=_positive)
    s.set_defaults(func=cmd_total)

    s = sub.add_parser("count", parents=[common], help="subgroups of Z_m x Z_n with exponent E")
    s.add_argument("--m", type=_positive, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--e", type=_positive, required=True)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("dist", parents=[common], help="exponent distribution of Z_m x Z_n")
    s.add_argument("--m", type=_positive, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.set_defaults(func=cmd_dist)

    s = sub.add_parser("enumerate", parents=[common], help="list the subgroups of Z_m x Z_n")
    s.add_argument("--m", type=_positive, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--elements", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("sum-exponents", parents=[common], help="sum of exponents of the subgroups of Z_m x Z_n")
    s.add_argument("--m", type=_positive, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.set_defaults(func=cmd_sum_exponents)

    s = sub.add_parser("mean-exponent", parents=[common], help="mean exponent A(n) of the subgroups of Z_n x Z_n")
    s.add_argument("--n", type=_positive, required=True)
    s.set_defaults(func=cmd_mean_exponent)

    s = sub.add_parser("asymptotic", parents=[common], help="CSV report of sum A(n) against (M/2) x^2")
    s.add_argument("--x-max", type=_positive, default=10 ** 5)
    s.add_argument("--prime-limit", type=_positive, default=10 ** 5)
    s.add_argument("--tol", type=float, default=1e-15)
    s.set_defaults(func=cmd_asymptotic)

    s = sub.add_parser("iso", parents=[common], help="compare exponent profiles of two p-groups")
    s.add_argument("--lambda", dest="lam", type=_partition, required=True)
    s.add_argument("--kappa", type=_partition, required=True)
    s.add_argument("--p", type=_prime, required=True)
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("verify", parents=[common], help="cross-check formulas against brute force")
    s.add_argument("--suite", choices=SUITES + ("all",), default="all")
    s.add_argument("--max-order", type=_positive, default=256)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("subgroups", parents=[common], help="dump all subgroups of a small group as JSON")
    s.add_argument("moduli", type=_positive, nargs="+")
    s.add_argument("--max-order", type=_positive, default=4096)
    s.set_defaults(func=cmd_subgroups)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except (DomainError, ResourceError, ValueError) as exc:
        print(f"abelsub: error: {exc}", file=stderr)
        return 3
    print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
