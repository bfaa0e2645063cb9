"""The trick matrix: counts of deals in which one order statistic beats another.

Entry (i, j), 1-based, is the number of deals (out of C(2N, N)) in which
player 2's i-th worst card beats player 1's j-th worst card. Four builders
produce it independently: deal enumeration, a row-telescoping sum, a
diagonal-telescoping sum, and the hook-sum recursion from the previous size.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinatorics import binomial, central, pascal_row, prefix_sum_row
from .errors import CapExceededError
from .report import Checker, VerificationReport

DEFAULT_BRUTE_CAP = 10


@dataclass(frozen=True)
class TrickMatrix:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("trick matrix needs n >= 1")
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError(f"expected a {self.n}x{self.n} grid")

    @classmethod
    def from_rows(cls, rows) -> "TrickMatrix":
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        return cls(len(rows), rows)

    @property
    def scale(self) -> int:
        return central(self.n)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i},{j}) outside 1..{self.n}")
        return self.rows[i - 1][j - 1]

    def get(self, i: int, j: int, default: int = 0) -> int:
        """Entry (i, j), or ``default`` off the grid."""
        if 1 <= i <= self.n and 1 <= j <= self.n:
            return self.rows[i - 1][j - 1]
        return default

    def probability(self, i: int, j: int) -> Fraction:
        return Fraction(self[i, j], self.scale)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    # serialization: big integers always travel as decimal strings
    def to_json(self) -> dict:
        return {
            "n": self.n,
            "scale": str(self.scale),
            "rows": [[str(v) for v in r] for r in self.rows],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TrickMatrix":
        m = cls.from_rows([[int(v) for v in r] for r in obj["rows"]])
        if m.n != int(obj["n"]):
            raise ValueError("n does not match the row count")
        if "scale" in obj and int(obj["scale"]) != m.scale:
            raise ValueError("scale does not match C(2n, n)")
        return m

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow([f"j{j}" for j in range(1, self.n + 1)])
        w.writerows(self.rows)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "TrickMatrix":
        lines = [r for r in csv.reader(io.StringIO(text)) if r]
        if lines and lines[0][0].startswith("j"):
            lines = lines[1:]
        return cls.from_rows(lines)

    def pretty(self) -> str:
        width = max(len(str(v)) for r in self.rows for v in r)
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)


# --------------------------------------------------------------------------
# builders


def build_bruteforce(n: int, cap: int = DEFAULT_BRUTE_CAP) -> TrickMatrix:
    """Count, over every deal, which order statistics beat which."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapExceededError(f"brute-force build is capped at N={cap} (asked for N={n})")
    # hist[i][c]: deals where player 2's (i+1)-th card beats exactly c of player 1's cards
    hist = [[0] * (n + 1) for _ in range(n)]
    for hand2 in combinations(range(1, 2 * n + 1), n):
        # player 1 holds the values missing from hand2; the i-th card of
        # hand2 (value v) sits above v - 1 - i of them
        for i, v in enumerate(hand2):
            hist[i][v - 1 - i] += 1
    rows = []
    for i in range(n):
        row = [0] * n
        running = 0
        for c in range(n, 0, -1):
            running += hist[i][c]
            row[c - 1] = running
        rows.append(row)
    return TrickMatrix.from_rows(rows)


def build_rowsum(n: int) -> TrickMatrix:
    """Row-telescoping sum: p_ij = sum_{k=j..N} C(k+i-1, i-1) C(2N-k-i, N-i)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    for i in range(1, n + 1):
        row = [0] * n
        running = 0
        for k in range(n, 0, -1):
            running += binomial(k + i - 1, i - 1) * binomial(2 * n - k - i, n - i)
            row[k - 1] = running
        rows.append(row)
    return TrickMatrix.from_rows(rows)


def build_antidiagonal(n: int) -> TrickMatrix:
    """Diagonal-telescoping sum: p_ij = sum_{k=1..i} C(i+j-1, k-1) C(2N-i-j+1, N-k+1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = [[0] * n for _ in range(n)]
    for s in range(2, 2 * n + 1):  # s = i + j
        lo = pascal_row(s - 1)
        hi = pascal_row(2 * n - s + 1)
        for i in range(max(1, s - n), min(n, s - 1) + 1):
            j = s - i
            total = 0
            for k in range(1, i + 1):
                t = n - k + 1
                if t <= 2 * n - s + 1:
                    total += lo[k - 1] * hi[t]
            rows[i - 1][j - 1] = total
    return TrickMatrix.from_rows(rows)


def augment(p: TrickMatrix) -> list[list[int]]:
    """P with a first column and a last row of C(2N, N) bolted on."""
    c = p.scale
    out = [[c] + list(r) for r in p.rows]
    out.append([c] * (p.n + 1))
    return out


def hook(a: list[list[int]], i: int, j: int) -> int:
    """Hook at 1-based (i, j): the entry, the rest of its row to the right,
    and the rest of its column above. Zero off the grid."""
    if i < 1 or j < 1 or i > len(a) or j > len(a[0]):
        return 0
    return sum(a[i - 1][j - 1:]) + sum(a[r][j - 1] for r in range(i - 1))


def hook_sum_map(a: list[list[int]]) -> list[list[int]]:
    """Entry (I, J) -> hook(I, J) - hook(I-1, J+1), where hook(i, j) is the entry
    plus everything right of it in its row plus everything above it in its column."""
    m = len(a)
    right = [[0] * (m + 1) for _ in range(m)]  # right[i][j] = sum a[i][j:]
    for i in range(m):
        for j in range(m - 1, -1, -1):
            right[i][j] = right[i][j + 1] + a[i][j]
    above = [[0] * m for _ in range(m + 1)]  # above[i][j] = sum a[:i][j]
    for i in range(m):
        for j in range(m):
            above[i + 1][j] = above[i][j] + a[i][j]

    def hook(i, j):  # 0-based; zero off the top edge or the right edge
        if i < 0 or j >= m:
            return 0
        return right[i][j] + above[i][j]

    return [[hook(i, j) - hook(i - 1, j + 1) for j in range(m)] for i in range(m)]


def hooksum_step(p: TrickMatrix) -> TrickMatrix:
    """P^(N+1) from P^N via the augmented hook-sum map."""
    return TrickMatrix.from_rows(hook_sum_map(augment(p)))


def build_hooksum(n: int) -> TrickMatrix:
    if n < 1:
        raise ValueError("n must be >= 1")
    p = TrickMatrix.from_rows([[1]])
    for _ in range(n - 1):
        p = hooksum_step(p)
    return p


def hook_sum_entry(p: TrickMatrix, big_i: int, big_k: int) -> int:
    """Entry (I, K+1) of the next matrix from the two-sum statement of the
    recursion, using only entries of ``p`` (no augmentation)."""
    n = p.n
    if not (1 <= big_i <= n and 1 <= big_k <= n):
        raise ValueError("need 1 <= I, K <= N")
    total = sum(p.get(big_i, j) - p.get(big_i - 1, j + 1) for j in range(big_k, n + 1))
    total += sum(p.get(j, big_k) - p.get(j - 1, big_k + 1) for j in range(1, big_i))
    return total


BUILDERS = {
    "brute": build_bruteforce,
    "rowsum": build_rowsum,
    "antidiag": build_antidiagonal,
    "hooksum": build_hooksum,
}


# --------------------------------------------------------------------------
# structural quantities


def amd_entry(n: int, i: int) -> int:
    """Anti-diagonal entry (i, N+1-i) above the main diagonal: 1 + sum_{t<i} C(N,t)^2."""
    if i < 1 or i >= n + 1 - i:
        raise ValueError(f"anti-diagonal closed form needs 1 <= i < N+1-i (N={n}, i={i})")
    return sum(binomial(n, t) ** 2 for t in range(i))


@dataclass(frozen=True)
class DiagonalSums:
    above: tuple[int, ...]
    below: tuple[int, ...]


def diagonal_sums(p: TrickMatrix) -> DiagonalSums:
    n = p.n
    above = tuple(sum(p[i, i + k] for i in range(1, n - k + 1)) for k in range(n))
    below = tuple(sum(p[i + k, i] for i in range(1, n - k + 1)) for k in range(n))
    return DiagonalSums(above, below)


def diagonal_sum_above(n: int, k: int) -> int:
    """Closed form for the sum of the k-th diagonal above the main one."""
    row = pascal_row(2 * n)
    total = n * row[n] // 2 - k * prefix_sum_row(2 * n, n - k)
    for t in range(1, k):
        total -= (k - t) * row[n - k + t]
    return total


def diagonal_sum_below(n: int, k: int) -> int:
    row = pascal_row(2 * n)
    # (N/2 - k) C(2N,N) + k*prefix + ...; C(2N,N) is even so the half is exact
    total = (n * row[n]) // 2 - k * row[n] + k * prefix_sum_row(2 * n, n - k)
    for t in range(1, k):
        total += (k - t) * row[n - k + t]
    return total


def unit_square_defect(p: TrickMatrix, i: int, j: int) -> int:
    """NW - SW - NE + SE for the unit square with north-west corner (i, j)."""
    if not (1 <= i <= p.n - 1 and 1 <= j <= p.n - 1):
        raise ValueError("unit square corner must satisfy 1 <= i, j <= N-1")
    return p[i, j] - p[i + 1, j] - p[i, j + 1] + p[i + 1, j + 1]


def unit_square_closed_form(n: int, i: int, j: int, alt_denominator: bool = False) -> Fraction:
    """C(2N-i-j, N-j) C(i+j, j) N(i-j) / ((2N-i-j)(i+j)).

    ``alt_denominator=True`` swaps the (i+j) factor for (j+1). The two agree
    only on the first row and the variant is not even integral in general, so
    it is kept for comparison only.
    """
    den = (2 * n - i - j) * ((j + 1) if alt_denominator else (i + j))
    value = Fraction(binomial(2 * n - i - j, n - j) * binomial(i + j, j) * n * (i - j), den)
    if alt_denominator:
        return value
    if value.denominator != 1:
        raise ArithmeticError(f"unit-square closed form not integral at N={n}, ({i},{j})")
    return value


def row_step(n: int, i: int, j: int) -> int:
    """p_ij - p_{i,j+1} as a single product."""
    return binomial(j + i - 1, i - 1) * binomial(2 * n - j - i, n - i)


def antidiagonal_step(n: int, i: int, j: int) -> int:
    """p_ij - p_{i-1,j+1} as a single product."""
    return binomial(i + j - 1, i - 1) * binomial(2 * n - i - j + 1, n - i + 1)


def diagonal_step(n: int, i: int, k: int) -> Fraction:
    """p_{i+1,i+k+1} - p_{i,i+k}, from the factorial product times k(N-2i-k)."""
    from math import factorial as f

    num = f(2 * i + k - 1) * f(2 * n - 2 * i - k - 1)
    den = f(i) * f(i + k) * f(n - i) * f(n - i - k)
    return Fraction(num, den) * k * (n - 2 * i - k)


# --------------------------------------------------------------------------
# verification


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def verify_structural_lemmas(p: TrickMatrix) -> VerificationReport:
    """Check every structural identity and inequality the trick matrix obeys.

    One record per property, each carrying the first counterexample found.
    Works on any square grid, so a hand-typed matrix can be audited too.
    """
    n, c = p.n, p.scale
    rep = VerificationReport()

    corner = Checker("corner", n)
    corner.check(p[1, n] == 1, i=1, j=n, value=p[1, n])
    rep.add(corner.result)

    diag = Checker("main_diagonal", n)
    for i in range(1, n + 1):
        diag.check(2 * p[i, i] == c, i=i, j=i, value=p[i, i], expected=c // 2)
    rep.add(diag.result)

    comp = Checker("complement", n)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            comp.check(p[i, j] + p[j, i] == c, i=i, j=j, sum=p[i, j] + p[j, i], expected=c)
    rep.add(comp.result)

    sym = Checker("amd_symmetry", n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            sym.check(p[i, j] == p[n - j + 1, n - i + 1], i=i, j=j)
    rep.add(sym.result)

    mono = Checker("monotonicity", n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < n:
                mono.check(p[i, j] < p[i + 1, j], i=i, j=j, direction="down")
            if j < n:
                mono.check(p[i, j + 1] < p[i, j], i=i, j=j, direction="left")
    rep.add(mono.result)

    lines = Checker("line_sums", n)
    step = binomial(2 * n, n - 1)
    for j in range(1, n + 1):
        row_sum = sum(p.rows[j - 1])
        col_sum = sum(p[i, n - j + 1] for i in range(1, n + 1))
        lines.check(row_sum == j * step, row=j, sum=row_sum, expected=j * step)
        lines.check(col_sum == j * step, column=n - j + 1, sum=col_sum, expected=j * step)
    rep.add(lines.result)

    ds = diagonal_sums(p)
    dsum = Checker("diagonal_sums", n)
    for k in range(n):
        dsum.check(ds.above[k] == diagonal_sum_above(n, k), k=k, side="above",
                   value=ds.above[k], expected=diagonal_sum_above(n, k))
        dsum.check(ds.below[k] == diagonal_sum_below(n, k), k=k, side="below",
                   value=ds.below[k], expected=diagonal_sum_below(n, k))
    rep.add(dsum.result)

    monge = Checker("mixed_monge", n)
    for i in range(1, n):
        for j in range(1, n):
            d = unit_square_defect(p, i, j)
            monge.check(_sign(d) == _sign(i - j), i=i, j=j, defect=d, kind="sign")
            monge.check(d == unit_square_closed_form(n, i, j), i=i, j=j, defect=d, kind="closed_form")
    rep.add(monge.result)

    ext = Checker("diagonal_extremum", n)
    for k in range(1, n):
        length = n - k
        centre = {(length + 1) // 2} if length % 2 else {length // 2, length // 2 + 1}
        up = [p[i, i + k] for i in range(1, length + 1)]
        down = [p[i + k, i] for i in range(1, length + 1)]
        best = {t + 1 for t, v in enumerate(up) if v == max(up)}
        worst = {t + 1 for t, v in enumerate(down) if v == min(down)}
        ext.check(best == centre, k=k, side="above", argmax=sorted(best), centre=sorted(centre))
        ext.check(worst == centre, k=k, side="below", argmin=sorted(worst), centre=sorted(centre))
    rep.add(ext.result)

    return rep


def compare_entries(p: TrickMatrix, reference) -> list[tuple[int, int, int, int]]:
    """(i, j, computed, given) for every entry where ``reference`` disagrees."""
    out = []
    for i, row in enumerate(reference, start=1):
        for j, v in enumerate(row, start=1):
            if p[i, j] != v:
                out.append((i, j, p[i, j], v))
    return out
