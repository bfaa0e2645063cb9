"""Strategies (permutations), the objective, and their structural predicates.

A strategy maps player 2's rank ``i`` (1 = worst card) to the rank of the
opposing card it is played against. Everything is 1-based to line up with
the trick matrix.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError
from .matrix import TrickMatrix

DEFAULT_SHAPE_CAP = 20


@dataclass(frozen=True)
class Strategy:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(v) for v in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {list(self.images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def points(self) -> list[tuple[int, int]]:
        return [(i, self(i)) for i in range(1, self.n + 1)]

    def inverse(self) -> "Strategy":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Strategy(inv)

    @classmethod
    def identity(cls, n: int) -> "Strategy":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Strategy":
        """Build from cycle notation, e.g. ``[(1, 5, 4, 3, 2)]``."""
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(images)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def to_json(self) -> list[int]:
        return list(self.images)

    @classmethod
    def from_json(cls, obj) -> "Strategy":
        return cls(obj)


@dataclass(frozen=True)
class ThrowString:
    """Which anti-diagonal cells above the main diagonal a strategy occupies."""

    n: int
    bits: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))
        if len(self.bits) != self.n // 2:
            raise ValueError(f"throw string for N={self.n} needs {self.n // 2} bits, got {len(self.bits)}")

    @classmethod
    def parse(cls, text: str, n: int) -> "ThrowString":
        if set(text) - {"0", "1"}:
            raise ValueError(f"throw string must be 0/1 characters: {text!r}")
        return cls(n, tuple(c == "1" for c in text))

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    @property
    def thrown(self) -> list[int]:
        return [i for i, b in enumerate(self.bits, start=1) if b]

    def is_gap_free(self) -> bool:
        s = str(self)
        return "01" not in s


def objective(p: TrickMatrix, s: Strategy) -> int:
    """Sum of the entries picked by ``s``; divide by ``p.scale`` for expected tricks."""
    if s.n != p.n:
        raise ValueError(f"strategy has N={s.n}, matrix has N={p.n}")
    return sum(p[i, j] for i, j in s.points())


def reflect(s: Strategy) -> Strategy:
    """Mirror the permutation matrix through the anti-main diagonal."""
    n = s.n
    inv = s.inverse()
    return Strategy(n + 1 - inv(n + 1 - i) for i in range(1, n + 1))


def is_symmetric(s: Strategy) -> bool:
    n = s.n
    rho_pi = [n + 1 - s(i) for i in range(1, n + 1)]
    return all(rho_pi[rho_pi[i] - 1] == i + 1 for i in range(n))


def is_shape_valid(s: Strategy) -> bool:
    """No fixed points; points below the diagonal run NW to SE; points above run SW to NE."""
    below_last = 0
    above_last = s.n + 1
    for i, j in s.points():
        if j == i:
            return False
        if j < i:
            if j <= below_last:
                return False
            below_last = j
        else:
            if j >= above_last:
                return False
            above_last = j
    return True


def enumerate_shape_candidates(n: int, cap: int = DEFAULT_SHAPE_CAP) -> list[Strategy]:
    """Every shape-valid permutation, by backtracking row by row.

    A column left unused is dropped as soon as no later row could still take
    it (below-diagonal columns only grow, above-diagonal columns only shrink).
    """
    if n < 3:
        raise ValueError("shape candidates are defined for N >= 3")
    if n > cap:
        raise CapExceededError(f"shape enumeration is capped at N={cap} (asked for N={n})")
    out: list[Strategy] = []
    used = [False] * (n + 2)
    images = [0] * n

    def viable(row: int, below_last: int, above_last: int) -> bool:
        # rows row..n are still free
        for c in range(1, n + 1):
            if used[c]:
                continue
            by_below = below_last < c < n  # row max(row, c+1) can still take it
            by_above = row < c < above_last  # row `row` can still take it
            if not (by_below or by_above):
                return False
        return True

    def go(row: int, below_last: int, above_last: int) -> None:
        if row > n:
            out.append(Strategy(images))
            return
        for c in range(1, n + 1):
            if used[c] or c == row:
                continue
            if c < row and c > below_last:
                nb, na = c, above_last
            elif c > row and c < above_last:
                nb, na = below_last, c
            else:
                continue
            used[c] = True
            images[row - 1] = c
            if viable(row + 1, nb, na):
                go(row + 1, nb, na)
            used[c] = False

    go(1, 0, n + 1)
    return out


def throw_string(s: Strategy) -> ThrowString:
    """Read off which anti-diagonal cells in rows 1..floor(N/2) are occupied."""
    n = s.n
    return ThrowString(n, tuple(s(i) == n + 1 - i for i in range(1, n // 2 + 1)))


def strategy_from_string(t: ThrowString) -> Strategy:
    """Thrown rows go to the anti-diagonal; the rest fill the free columns in order."""
    n = t.n
    images = [0] * n
    thrown = set(t.thrown)
    for i in thrown:
        images[i - 1] = n + 1 - i
    taken = {n + 1 - i for i in thrown}
    free_rows = [i for i in range(1, n + 1) if i not in thrown]
    free_cols = [j for j in range(1, n + 1) if j not in taken]
    for i, j in zip(free_rows, free_cols):
        images[i - 1] = j
    return Strategy(images)


def no_gap_strategy(n: int, k: int) -> Strategy:
    """Throw the k worst cards against the k best in reverse, play the rest in order."""
    if not 0 <= k <= n // 2:
        raise ValueError(f"k must lie in 0..{n // 2} for N={n}, got {k}")
    return Strategy([n + 1 - i if i <= k else i - k for i in range(1, n + 1)])


def majority_strategy(n: int) -> Strategy:
    """For odd N = 2m+1: throw m tricks, pairing the top m+1 cards against the bottom m+1."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"the majority strategy needs odd N >= 3, got {n}")
    return no_gap_strategy(n, n // 2)


def verify_splice_identity(p: TrickMatrix, pi: Strategy, pi_prime: Strategy, sigma: Strategy,
                           tau1: Strategy, tau2: Strategy, tau3: Strategy) -> bool:
    """True when the two triples pick the same multiset of cells and the
    objective sums agree."""
    left = Counter(pi.points()) + Counter(pi_prime.points()) + Counter(sigma.points())
    right = Counter(tau1.points()) + Counter(tau2.points()) + Counter(tau3.points())
    if left != right:
        return False
    lhs = objective(p, pi) + objective(p, pi_prime) + objective(p, sigma)
    rhs = objective(p, tau1) + objective(p, tau2) + objective(p, tau3)
    return lhs == rhs
