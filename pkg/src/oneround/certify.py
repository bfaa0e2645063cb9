"""Rigorous sign decisions for expressions with exp, log and sqrt.

Each decision evaluates the expression in outward-rounded interval arithmetic
(mpmath's interval context) and doubles the working precision until the
enclosure excludes zero. A fresh context is used per call, so concurrent
callers never share precision state.
"""

from __future__ import annotations

from typing import Callable

from mpmath.ctx_iv import MPIntervalContext

START_PREC = 64
MAX_PREC = 1 << 14


class UndecidableError(ArithmeticError):
    """The enclosure still straddles zero at the maximum precision."""


def certified_sign(expr: Callable[[MPIntervalContext], object], max_prec: int = MAX_PREC) -> int:
    """Sign (+1 or -1) of ``expr(ctx)``, proven by interval enclosure.

    ``expr`` receives the interval context and must build its value from
    ``ctx.mpf``/``ctx.exp``/``ctx.log``/``ctx.sqrt`` so every step is enclosed.
    Exact zeros cannot be certified and raise ``UndecidableError``.
    """
    ctx = MPIntervalContext()
    prec = START_PREC
    while prec <= max_prec:
        ctx.prec = prec
        v = expr(ctx)
        if v.a > 0:
            return 1
        if v.b < 0:
            return -1
        prec *= 2
    raise UndecidableError(f"sign not decided at {max_prec} bits")


def certified_less(lhs: Callable, rhs: Callable, max_prec: int = MAX_PREC) -> bool:
    """Strict ``lhs < rhs``; both callables take the interval context."""
    return certified_sign(lambda c: rhs(c) - lhs(c), max_prec) > 0


def floor_sqrt_n_log_n(n: int, divisor: int) -> int:
    """floor(sqrt(N ln N / divisor)) with a certified floor.

    k is the answer iff divisor*k^2 <= N ln N < divisor*(k+1)^2; the float
    guess is corrected in either direction by exact interval comparisons.
    """
    import math

    k = int(math.isqrt(int(n * math.log(n) / divisor)))

    def fits(m: int) -> bool:  # divisor*m^2 < N ln N (never equal for m >= 1)
        if m == 0:
            return True
        return certified_sign(lambda c: c.mpf(n) * c.log(c.mpf(n)) - divisor * m * m) > 0

    while not fits(k):
        k -= 1
    while fits(k + 1):
        k += 1
    return k
