"""Command-line entry point.

Exit codes: 0 success, 1 verification failure or method disagreement,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .combinatorics import central
from .errors import CapExceededError
from .matrix import BUILDERS, DEFAULT_BRUTE_CAP, build_bruteforce, build_rowsum
from .optimal_k import k_exact, k_report, no_gap_values
from .oracles import DEFAULT_EXHAUSTIVE_CAP, exhaustive_optimal, lap_optimal
from .report import VerificationReport
from .simulator import SimConfig, simulate
from .strategy import Strategy, ThrowString, majority_strategy, no_gap_strategy, strategy_from_string, throw_string
from .verify import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """"7" or "3..60" (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad N or range: {text!r} (use 7 or 3..60)") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def parse_single(text: str) -> int:
    ns = parse_range(text)
    if len(ns) != 1:
        raise UsageError("this command takes a single N")
    return ns[0]


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _render_matrix(m, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(m.to_json())
    if fmt == "csv":
        return m.to_csv(header=False).rstrip("\n")
    return m.pretty()


def cmd_pmatrix(args) -> int:
    n = parse_single(args.n)
    if n < 1:
        raise UsageError("N must be >= 1")
    cap = args.max_brute or DEFAULT_BRUTE_CAP
    if args.method == "brute":
        print(_render_matrix(build_bruteforce(n, cap), args.format))
        return EXIT_OK
    if args.method != "all":
        print(_render_matrix(BUILDERS[args.method](n), args.format))
        return EXIT_OK
    ref = build_rowsum(n)
    print(_render_matrix(ref, args.format))
    methods = ["rowsum", "antidiag", "hooksum"] + (["brute"] if n <= cap else [])
    built = {name: (build_bruteforce(n, cap) if name == "brute" else BUILDERS[name](n)) for name in methods}
    agree = sum(m == ref for m in built.values())
    print(f"{agree}/{len(methods)} methods agree", file=sys.stderr if args.format == "json" else sys.stdout)
    if n > cap:
        print(f"brute force skipped above N={cap}", file=sys.stderr)
    return EXIT_OK if agree == len(methods) else EXIT_FAIL


def _strategy_summary(n: int, s: Strategy, value: int) -> dict:
    thrown = throw_string(s) if n >= 2 else None
    return {
        "strategy": s.to_json(),
        "throw_string": str(thrown) if thrown else "",
        "F": str(value),
        "expected_tricks": str(Fraction(value, central(n))),
        "expected_tricks_float": value / central(n),
    }


def cmd_solve(args) -> int:
    n = parse_single(args.n)
    if n < 1:
        raise UsageError("N must be >= 1")
    out: dict = {"n": n, "mode": args.mode}
    if args.mode == "formula":
        if n < 3:
            raise UsageError("the throw-count formula needs N >= 3 (N=2 is a tie)")
        k = k_exact(n)
        out.update(k=k, **_strategy_summary(n, no_gap_strategy(n, k), no_gap_values(n)[k]))
    else:
        p = build_rowsum(n)
        if args.mode == "exhaustive":
            res = exhaustive_optimal(p, cap=args.max_brute or DEFAULT_EXHAUSTIVE_CAP)
        else:
            res = lap_optimal(p)
        s = res.argmax[0]
        k = len(throw_string(s).thrown) if n >= 2 and throw_string(s).is_gap_free() else None
        out.update(k=k if n >= 3 else "n/a", tie=res.tie, **_strategy_summary(n, s, res.value))
        if len(res.argmax) > 1:
            out["argmax"] = [t.to_json() for t in res.argmax]
    if args.format == "json":
        _emit(out)
    else:
        print(f"N={n} k*={out['k']} strategy={out['strategy']} F={out['F']} "
              f"expected={out['expected_tricks']} ({out['expected_tricks_float']:.6f})")
        if "argmax" in out:
            print(f"tie: {len(out['argmax'])} maximizers {out['argmax']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ns = parse_range(args.n)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    report = VerificationReport()
    for name in names:
        for n in ns:
            try:
                part = SUITES[name](n)
            except (ValueError, CapExceededError) as exc:
                if args.suite == "all":
                    continue  # outside this suite's range
                raise UsageError(str(exc)) from None
            report.extend(part)
            if args.format == "text":
                for r in part.results:
                    print(r.line(), flush=True)
    if args.format == "json":
        _emit(report.to_json())
    else:
        print(f"{len(report.results) - len(report.failures())}/{len(report.results)} passed")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_ktable(args) -> int:
    ns = parse_range(args.n)
    if ns[0] < 3:
        raise UsageError("k is defined for N >= 3")
    rows = [k_report(n, with_values=False) for n in ns]
    if args.format == "json":
        _emit([r.summary_json() for r in rows])
        return EXIT_OK
    if args.format == "csv":
        print("n,k_approx,k_exact,lower_bound,upper_bound,ratio,bound_violation")
        for r in rows:
            print(f"{r.n},{r.k_approx},{r.k_exact},{r.lower_bound!r},{r.upper_bound!r},{r.ratio!r},{int(r.bound_violation)}")
        return EXIT_OK
    print(f"{'N':>6} {'k':>4} {'k*':>4} {'lower':>9} {'upper':>9} {'ratio':>7}  violation")
    for r in rows:
        flag = "yes" if r.bound_violation else ""
        print(f"{r.n:>6} {r.k_approx:>4} {r.k_exact:>4} {r.lower_bound:>9.4f} {r.upper_bound:>9.4f} {r.ratio:>7.4f}  {flag}")
    return EXIT_OK


def parse_strategy(spec: str, n: int) -> Strategy:
    if spec == "optimal":
        if n < 3:
            return Strategy.identity(n)
        return no_gap_strategy(n, k_exact(n))
    if spec == "identity":
        return Strategy.identity(n)
    if spec == "majority":
        return majority_strategy(n)
    if spec.startswith("["):
        try:
            s = Strategy.from_json(json.loads(spec))
        except (json.JSONDecodeError, TypeError) as exc:
            raise UsageError(f"malformed permutation {spec!r}: {exc}") from None
        if s.n != n:
            raise UsageError(f"permutation has length {s.n}, expected {n}")
        return s
    return strategy_from_string(ThrowString.parse(spec, n))


def cmd_simulate(args) -> int:
    n = parse_single(args.n)
    if n < 1:
        raise UsageError("N must be >= 1")
    s = parse_strategy(args.strategy, n)
    rep = simulate(SimConfig(n, s, args.deals, args.seed), threads=args.threads)
    out = rep.to_json() | {"strategy": s.to_json()}
    if args.format == "json":
        _emit(out)
    else:
        print(f"N={n} strategy={s.to_json()} deals={rep.deals} seed={rep.seed} "
              f"mean={rep.mean_tricks:.6f} stderr={rep.stderr:.6f} majority_win_rate={rep.majority_win_rate:.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-brute", type=int, default=None,
                        help="raise the enumeration caps (brute-force build, exhaustive search); may be slow")
    parser = argparse.ArgumentParser(prog="oneround", description="One-round War: trick matrices and optimal play.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pmatrix", parents=[common], help="print the trick matrix")
    p.add_argument("--n", required=True)
    p.add_argument("--method", choices=[*BUILDERS, "all"], default="rowsum")
    p.add_argument("--format", choices=["json", "csv", "pretty"], default="pretty")
    p.set_defaults(func=cmd_pmatrix)

    p = sub.add_parser("solve", parents=[common], help="optimal strategy")
    p.add_argument("--n", required=True)
    p.add_argument("--mode", choices=["exhaustive", "lap", "formula"], default="formula")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    p.add_argument("--n", required=True, help="N or a range like 3..60")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ktable", parents=[common], help="throw counts and bounds")
    p.add_argument("--n", required=True, help="N or a range like 3..15")
    p.add_argument("--format", choices=["json", "csv", "pretty"], default="pretty")
    p.set_defaults(func=cmd_ktable)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo play")
    p.add_argument("--n", required=True)
    p.add_argument("--strategy", default="optimal",
                   help='optimal, identity, majority, a throw string like 10, or a JSON permutation')
    p.add_argument("--deals", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CapExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
