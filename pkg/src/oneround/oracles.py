"""Independent ground truth for the trick matrix and the optimal strategy.

Nothing here relies on the structure results: deals are enumerated in full,
the exhaustive search scans every permutation, and the assignment solver is a
plain Hungarian method over exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from .combinatorics import central
from .errors import CapExceededError
from .matrix import DEFAULT_BRUTE_CAP, TrickMatrix
from .report import Checker, VerificationReport
from .strategy import Strategy, enumerate_shape_candidates, majority_strategy, objective

DEFAULT_EXHAUSTIVE_CAP = 9
DOMINANCE_SCAN_CAP = 7  # the explicit all-permutations scan is N! x C(2N, N)


@dataclass(frozen=True)
class Deal:
    hand2: tuple[int, ...]
    hand1: tuple[int, ...]

    def __post_init__(self):
        n = len(self.hand2)
        if len(self.hand1) != n or sorted(self.hand2 + self.hand1) != list(range(1, 2 * n + 1)):
            raise ValueError("hands must split 1..2N into two halves")

    @property
    def n(self) -> int:
        return len(self.hand2)

    @classmethod
    def from_hand2(cls, hand2, n: int | None = None) -> "Deal":
        hand2 = tuple(sorted(hand2))
        n = len(hand2) if n is None else n
        taken = set(hand2)
        return cls(hand2, tuple(v for v in range(1, 2 * n + 1) if v not in taken))


def enumerate_deals(n: int, cap: int = DEFAULT_BRUTE_CAP) -> Iterator[Deal]:
    """All C(2N, N) deals, lexicographic in player 2's hand."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapExceededError(f"deal enumeration is capped at N={cap} (asked for N={n})")
    full = range(1, 2 * n + 1)
    for hand2 in combinations(full, n):
        taken = set(hand2)
        yield Deal(hand2, tuple(v for v in full if v not in taken))


def tricks_won(d: Deal, s: Strategy) -> int:
    if s.n != d.n:
        raise ValueError(f"strategy has N={s.n}, deal has N={d.n}")
    return sum(d.hand2[i - 1] > d.hand1[j - 1] for i, j in s.points())


def expected_tricks_bruteforce(n: int, s: Strategy, cap: int = DEFAULT_BRUTE_CAP) -> Fraction:
    total = sum(tricks_won(d, s) for d in enumerate_deals(n, cap))
    return Fraction(total, central(n))


@dataclass
class OptimumResult:
    value: int
    argmax: list[Strategy]
    tie: bool = False

    def __post_init__(self):
        if not self.argmax:
            raise ValueError("an optimum needs at least one maximizer")
        self.tie = self.tie or len(self.argmax) > 1

    def to_json(self) -> dict:
        return {"value": str(self.value), "argmax": [s.to_json() for s in self.argmax], "tie": self.tie}


def exhaustive_optimal(p: TrickMatrix, cap: int = DEFAULT_EXHAUSTIVE_CAP,
                       accelerated: bool = False) -> OptimumResult:
    """Best F over all N! permutations, with every maximizer.

    ``accelerated`` restricts the scan to shape-valid permutations; that mode
    assumes the shape result and is not an independent check of it.
    """
    n = p.n
    if n > cap:
        raise CapExceededError(f"exhaustive search is capped at N={cap} (asked for N={n})")
    if accelerated and n >= 3:
        pool: Iterator = (s.images for s in enumerate_shape_candidates(n, cap=max(cap, n)))
    else:
        pool = permutations(range(1, n + 1))
    rows = p.rows
    best, arg = -1, []
    for perm in pool:
        v = 0
        for i, j in enumerate(perm):
            v += rows[i][j - 1]
        if v > best:
            best, arg = v, [perm]
        elif v == best:
            arg.append(perm)
    return OptimumResult(best, [Strategy(a) for a in arg])


def _hungarian_min(cost: list[list[int]]) -> tuple[list[int], list[int], list[int]]:
    """Min-cost perfect assignment on a square integer matrix.

    Returns (col_of_row, u, v) with 0-based columns and feasible potentials
    (cost[i][j] - u[i] - v[j] >= 0, zero on the assignment).
    """
    n = len(cost)
    inf = None  # exact ints only; track "unset" explicitly
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    match = [0] * (n + 1)  # match[j] = row assigned to column j (1-based, 0 = none)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv: list = [inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta, j1 = inf, 0
            row = cost[i0 - 1]
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = row[j - 1] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta, j1 = minv[j], j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    col_of_row = [0] * n
    for j in range(1, n + 1):
        col_of_row[match[j] - 1] = j - 1
    return col_of_row, u[1:], v[1:]


def _has_alternate(cost: list[list[int]], col_of_row: list[int], u: list[int], v: list[int]) -> bool:
    """Another optimal assignment exists iff the tight-edge graph has an alternating cycle."""
    n = len(cost)
    row_of_col = [0] * n
    for i, j in enumerate(col_of_row):
        row_of_col[j] = i
    # row i -> row row_of_col[j] for every tight, unmatched (i, j)
    adj = [[row_of_col[j] for j in range(n)
            if j != col_of_row[i] and cost[i][j] - u[i] - v[j] == 0] for i in range(n)]
    state = [0] * n  # 0 new, 1 on stack, 2 done
    for root in range(n):
        if state[root]:
            continue
        stack = [(root, iter(adj[root]))]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[node] = 2
                stack.pop()
            elif state[nxt] == 1:
                return True
            elif state[nxt] == 0:
                state[nxt] = 1
                stack.append((nxt, iter(adj[nxt])))
    return False


def lap_optimal(p: TrickMatrix) -> OptimumResult:
    """Max-sum assignment by the Hungarian method on exact integers.

    Returns one maximizer; ``tie`` is set when the optimal potentials admit a
    second optimal assignment.
    """
    cost = [[-x for x in row] for row in p.rows]
    cols, u, v = _hungarian_min(cost)
    s = Strategy(c + 1 for c in cols)
    return OptimumResult(objective(p, s), [s], tie=_has_alternate(cost, cols, u, v))


def max_tricks_any_matching(d: Deal) -> int:
    """Most tricks player 2 could take knowing both hands.

    Greedy over sorted hands: each of player 2's cards, lowest first, takes
    the lowest opposing card it still beats. Exchanging any optimal matching
    towards this one never loses a pair, so the count is optimal.
    """
    j = 0
    won = 0
    for v in d.hand2:
        if j < d.n and v > d.hand1[j]:
            won += 1
            j += 1
    return won


def max_tricks_bipartite(d: Deal) -> int:
    """Same quantity by augmenting paths; used to cross-check the greedy sweep."""
    n = d.n
    owner = [-1] * n

    def augment(i: int, seen: list[bool]) -> bool:
        for j in range(n):
            if d.hand2[i] > d.hand1[j] and not seen[j]:
                seen[j] = True
                if owner[j] < 0 or augment(owner[j], seen):
                    owner[j] = i
                    return True
        return False

    return sum(augment(i, [False] * n) for i in range(n))


def _beats_tensor(n: int) -> np.ndarray:
    """W[d, i, j] = player 2's card i beats player 1's card j in deal d."""
    deals = list(enumerate_deals(n, cap=max(n, DEFAULT_BRUTE_CAP)))
    h2 = np.array([d.hand2 for d in deals], dtype=np.int16)
    h1 = np.array([d.hand1 for d in deals], dtype=np.int16)
    return h2[:, :, None] > h1[:, None, :]


@dataclass
class MajorityCounts:
    n: int
    best_count: int
    majority_count: int
    better: list[Strategy] = field(default_factory=list)
    permutations: int = 0


def majority_win_counts(n: int, chunk: int = 512) -> MajorityCounts:
    """Deals won outright, maximized over every permutation, versus the majority strategy."""
    w = _beats_tensor(n)
    need = n // 2 + 1
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    rows = np.arange(n)
    counts = np.empty(len(perms), dtype=np.int64)
    for lo in range(0, len(perms), chunk):
        block = perms[lo:lo + chunk]
        won = w[:, rows[None, :], block].sum(axis=2)  # (deals, block)
        counts[lo:lo + chunk] = (won >= need).sum(axis=0)
    maj = np.array(majority_strategy(n).images) - 1
    maj_idx = int(np.flatnonzero((perms == maj).all(axis=1))[0])
    majority_count = int(counts[maj_idx])
    better = [Strategy(perms[k] + 1) for k in np.flatnonzero(counts > majority_count)]
    return MajorityCounts(n, int(counts.max()), majority_count, better, len(perms))


def verify_majority_property(n: int, cap: int = DEFAULT_BRUTE_CAP) -> VerificationReport:
    """Throwing n tricks (N = 2n+1) wins a majority whenever any play could."""
    if n % 2 == 0 or n < 3:
        raise ValueError(f"the majority property is stated for odd N >= 3, got {n}")
    s = majority_strategy(n)
    need = n // 2 + 1
    report = VerificationReport()
    per_deal = Checker("majority_whenever_possible", n)
    for d in enumerate_deals(n, cap):
        if max_tricks_any_matching(d) >= need:
            per_deal.check(tricks_won(d, s) >= need, hand2=list(d.hand2))
        else:
            per_deal.result.checked += 1
    report.add(per_deal.result)
    dominance = Checker("majority_count_maximal", n)
    if n <= DOMINANCE_SCAN_CAP:
        counts = majority_win_counts(n)
        dominance.check(not counts.better, better=[b.to_json() for b in counts.better[:1]],
                        majority_count=counts.majority_count)
        dominance.result.checked = counts.permutations
    else:
        # no permutation can win a deal that no matching wins, so winning every
        # winnable deal already makes the count maximal
        dominance.check(per_deal.result.passed)
    report.add(dominance.result)
    return report
