"""Exact binomial arithmetic.

Everything here is integer-valued; probabilities elsewhere in the package are
exposed as ``fractions.Fraction`` built from these counts.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

__all__ = ["Fraction", "binomial", "pascal_row", "prefix_sum_row", "central"]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n.

    Uses the multiplicative formula with exact division at every step so the
    intermediates never exceed the final value times ``k``.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    acc = 1
    for t in range(1, k + 1):
        acc = acc * (n - k + t) // t
    return acc


_row_lock = threading.Lock()


@lru_cache(maxsize=256)
def _row(m: int) -> tuple[int, ...]:
    row = [1] * (m + 1)
    for k in range(1, m // 2 + 1):
        row[k] = row[m - k] = row[k - 1] * (m - k + 1) // k
    return tuple(row)


def pascal_row(m: int) -> list[int]:
    """Row ``m`` of Pascal's triangle: [C(m,0), ..., C(m,m)]."""
    if m < 0:
        raise ValueError(f"pascal_row requires m >= 0, got {m}")
    with _row_lock:
        return list(_row(m))


def prefix_sum_row(m: int, t: int) -> int:
    """Sum of C(m, j) for j = 0..t (0 for t < 0, 2**m for t >= m)."""
    if m < 0:
        raise ValueError(f"prefix_sum_row requires m >= 0, got {m}")
    if t < 0:
        return 0
    if t >= m:
        return 1 << m
    with _row_lock:
        row = _row(m)
    return sum(row[: t + 1])


def central(n: int) -> int:
    """C(2n, n), the number of deals with n cards per hand."""
    return binomial(2 * n, n)
