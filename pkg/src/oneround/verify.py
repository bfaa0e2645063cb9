"""Verification suites: each maps a size N to a VerificationReport."""

from __future__ import annotations

from typing import Callable

from .matrix import BUILDERS, build_rowsum, hooksum_step, verify_structural_lemmas
from .optimal_k import (
    delta_sbar, k_approx, k_approx_center_out, k_exact, tail_bound_expected, tail_bound_scan,
    no_gap_increment, no_gap_values,
)
from .oracles import DEFAULT_EXHAUSTIVE_CAP, exhaustive_optimal, lap_optimal, verify_majority_property
from .report import Checker, LemmaResult, VerificationReport
from .strategy import (
    DEFAULT_SHAPE_CAP, ThrowString, enumerate_shape_candidates, is_shape_valid, is_symmetric,
    no_gap_strategy, objective, reflect, strategy_from_string, throw_string,
)

STRING_CAP = 20


def structural(n: int) -> VerificationReport:
    p = build_rowsum(n)
    report = verify_structural_lemmas(p)
    agree = Checker("builders_agree", n)
    for name in ("antidiag", "hooksum"):
        agree.check(BUILDERS[name](n) == p, method=name)
    report.add(agree.result)
    if n >= 2:
        hook = Checker("hook_sum_step", n)
        hook.check(hooksum_step(build_rowsum(n - 1)) == p)
        report.add(hook.result)
    return report


def _exhaustive_maximizers(n: int):
    return exhaustive_optimal(build_rowsum(n)).argmax


def shape(n: int) -> VerificationReport:
    report = VerificationReport()
    if n < 3 or n > DEFAULT_SHAPE_CAP:
        raise ValueError(f"shape suite covers 3 <= N <= {DEFAULT_SHAPE_CAP}")
    cands = enumerate_shape_candidates(n)
    count = Checker("shape_candidate_count", n)
    count.check(len(cands) == 2 ** (n - 3), found=len(cands), expected=2 ** (n - 3))
    for s in cands:
        count.check(is_shape_valid(s), strategy=s.to_json())
    report.add(count.result)
    if n <= DEFAULT_EXHAUSTIVE_CAP:
        best = Checker("maximizers_shape_valid", n)
        for s in _exhaustive_maximizers(n):
            best.check(is_shape_valid(s) and s(1) == n, strategy=s.to_json())
        report.add(best.result)
    return report


def symmetry(n: int) -> VerificationReport:
    report = VerificationReport()
    p = build_rowsum(n)
    refl = Checker("objective_reflection_invariant", n)
    pool = enumerate_shape_candidates(n) if 3 <= n <= 12 else []
    for s in pool + [no_gap_strategy(n, k) for k in range(n // 2 + 1)]:
        refl.check(objective(p, s) == objective(p, reflect(s)), strategy=s.to_json())
    report.add(refl.result)
    if n <= STRING_CAP:
        strings = Checker("throw_strings_symmetric", n)
        m = n // 2
        for bits in range(2**m):
            t = ThrowString(n, tuple(bool(bits >> (m - 1 - b) & 1) for b in range(m)))
            s = strategy_from_string(t)
            strings.check(is_symmetric(s) and throw_string(s) == t, string=str(t))
        report.add(strings.result)
    if 3 <= n <= DEFAULT_EXHAUSTIVE_CAP:
        best = Checker("maximizers_symmetric", n)
        for s in _exhaustive_maximizers(n):
            best.check(is_symmetric(s), strategy=s.to_json())
        report.add(best.result)
    return report


def nogaps(n: int) -> VerificationReport:
    report = VerificationReport()
    if n < 3:
        raise ValueError("no-gap suite covers N >= 3")
    if n <= STRING_CAP:
        p = build_rowsum(n)
        best = Checker("best_throw_string_gap_free", n)
        m = n // 2
        values = {}
        for bits in range(2**m):
            t = ThrowString(n, tuple(bool(bits >> (m - 1 - b) & 1) for b in range(m)))
            values[str(t)] = objective(p, strategy_from_string(t))
        top = max(values.values())
        for text, v in values.items():
            if v == top:
                best.check(ThrowString.parse(text, n).is_gap_free(), string=text)
        report.add(best.result)
    if n <= DEFAULT_EXHAUSTIVE_CAP:
        ex = Checker("maximizers_gap_free", n)
        for s in _exhaustive_maximizers(n):
            ex.check(throw_string(s).is_gap_free(), strategy=s.to_json())
        report.add(ex.result)
    return report


def ktheorem(n: int) -> VerificationReport:
    """The closed-form k matches the assignment optimum and the no-gap scan."""
    if n < 3:
        raise ValueError("k is defined for N >= 3")
    c = Checker("optimal_throw_count", n)
    ke, ka = k_exact(n), k_approx(n)
    vals = no_gap_values(n)
    c.check(ka <= ke <= ka + 1, k_exact=ke, k_approx=ka)
    c.check(k_approx_center_out(n) == ka, k_approx=ka)
    c.check(max(range(len(vals)), key=vals.__getitem__) == ke, k_exact=ke)
    incs = [no_gap_increment(n, k) for k in range(1, n // 2 + 1)]
    c.check(all(vals[k] - vals[k - 1] == incs[k - 1] for k in range(1, len(vals))))
    signs = [x > 0 for x in incs]
    c.check(signs == sorted(signs, reverse=True), increments=incs)  # one sign change
    c.check(all(delta_sbar(n, k) > delta_sbar(n, k + 1) for k in range(1, n - 1)))
    p = build_rowsum(n)
    lap = lap_optimal(p)
    c.check(lap.value == vals[ke] == objective(p, no_gap_strategy(n, ke)),
            lap=lap.value, formula=vals[ke])
    return VerificationReport([c.result])


def tailbound(n: int) -> VerificationReport:
    """Recompute both exponent variants at N and compare with the recorded frontier."""
    report = VerificationReport()
    for mode in ("plain", "shifted"):
        expected = tail_bound_expected(mode)
        if not any(key[0] == n for key in expected):
            raise ValueError(f"no recorded frontier for N={n}")
        scan = tail_bound_scan(n, n, mode)
        c = Checker(f"binomial_tail_frontier_{mode}", n)
        for key, ok in scan.cells.items():
            c.check(expected.get(key) == ok, k=key[1], computed=ok)
        report.add(c.result)
    return report


def majority(n: int) -> VerificationReport:
    if n % 2 == 0:
        return VerificationReport()
    return verify_majority_property(n)


SUITES: dict[str, Callable[[int], VerificationReport]] = {
    "structural": structural,
    "shape": shape,
    "symmetry": symmetry,
    "nogaps": nogaps,
    "ktheorem": ktheorem,
    "tailbound": tailbound,
    "majority": majority,
}


def run_suite(name: str, ns) -> VerificationReport:
    report = VerificationReport()
    for n in ns:
        report.extend(SUITES[name](n))
    return report


__all__ = ["SUITES", "run_suite", "LemmaResult"]
