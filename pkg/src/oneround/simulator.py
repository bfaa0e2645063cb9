"""Monte Carlo play, plus the exact expected-loss sweep it is checked against.

Deals are drawn in fixed-size blocks. Block b always uses the random stream
spawned from (seed, b), and tallies are integer sums, so the report does not
depend on how many threads processed the blocks.
"""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from .combinatorics import central
from .optimal_k import k_approx, k_exact, no_gap_values
from .strategy import Strategy

BLOCK = 8192
THREADS_ENV = "ONEROUND_THREADS"


@dataclass(frozen=True)
class SimConfig:
    n: int
    strategy: Strategy
    deals: int
    seed: int = 0

    def __post_init__(self):
        if self.deals < 1:
            raise ValueError("need at least one deal")
        if self.strategy.n != self.n:
            raise ValueError(f"strategy has N={self.strategy.n}, config has N={self.n}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SimReport:
    n: int
    mean_tricks: float
    stderr: float
    majority_win_rate: float
    deals: int
    seed: int

    def to_json(self) -> dict:
        return asdict(self)


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        return max(1, int(raw))
    return min(8, os.cpu_count() or 1)


def _block(n: int, perm0: np.ndarray, seed: int, index: int, size: int) -> tuple[int, int, int]:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))
    cards = np.tile(np.arange(1, 2 * n + 1, dtype=np.int32), (size, 1))
    rows = np.arange(size)
    # partial Fisher-Yates: the first n slots become player 2's hand
    for t in range(n):
        r = t + rng.integers(0, 2 * n - t, size=size)
        a = cards[rows, t].copy()
        cards[rows, t] = cards[rows, r]
        cards[rows, r] = a
    hand2 = np.sort(cards[:, :n], axis=1)
    hand1 = np.sort(cards[:, n:], axis=1)
    won = (hand2 > hand1[:, perm0]).sum(axis=1).astype(np.int64)
    return int(won.sum()), int((won * won).sum()), int((2 * won > n).sum())


def simulate(cfg: SimConfig, threads: int | None = None) -> SimReport:
    n = cfg.n
    perm0 = np.array(cfg.strategy.images) - 1
    sizes = [BLOCK] * (cfg.deals // BLOCK)
    if cfg.deals % BLOCK:
        sizes.append(cfg.deals % BLOCK)
    threads = threads or default_threads()
    jobs = [(n, perm0, cfg.seed, b, size) for b, size in enumerate(sizes)]
    if threads == 1 or len(jobs) == 1:
        parts = [_block(*job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda job: _block(*job), jobs))
    total = sum(p[0] for p in parts)
    squares = sum(p[1] for p in parts)
    wins = sum(p[2] for p in parts)
    d = cfg.deals
    mean = total / d
    var = (squares - Fraction(total * total, d)) / (d - 1) if d > 1 else 0
    return SimReport(n, mean, math.sqrt(var / d), wins / d, d, cfg.seed)


K_RULES: dict[str, Callable[[int], int]] = {"exact": k_exact, "approx": k_approx}


@dataclass(frozen=True)
class LossRow:
    n: int
    k: int
    expected_losses: Fraction
    sqrt_half_nlogn: float


def sweep_loss_fraction(ns: Iterable[int], k_rule: str | Callable[[int], int] = "exact") -> list[LossRow]:
    """Exact expected tricks lost by the no-gap strategy, beside sqrt(N ln N / 2)."""
    rule = K_RULES[k_rule] if isinstance(k_rule, str) else k_rule
    out = []
    for n in ns:
        k = rule(n)
        value = no_gap_values(n)[k]
        out.append(LossRow(n, k, n - Fraction(value, central(n)), math.sqrt(n * math.log(n) / 2)))
    return out


def loss_table_csv(rows: list[LossRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "expected_losses", "sqrt_half_nlogn"])
    for r in rows:
        w.writerow([r.n, repr(float(r.expected_losses)), repr(r.sqrt_half_nlogn)])
    return buf.getvalue()
