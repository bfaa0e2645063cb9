"""How many tricks to throw.

The number k of worst cards to sacrifice is read off the 2N-th row of
Pascal's triangle: diagonal sums of the trick matrix change by prefix sums of
that row, so the best no-gap strategy is located by integer comparisons
alone. This module also hosts the bound checks (with certified
transcendental comparisons) and the rogue-element diagnostics C_ij, D_ij.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib import resources

from .certify import certified_sign, floor_sqrt_n_log_n
from .combinatorics import binomial, pascal_row, prefix_sum_row
from .matrix import TrickMatrix, amd_entry, build_rowsum, diagonal_sum_below
from .strategy import no_gap_strategy, objective


def _need_n3(n: int) -> None:
    if n < 3:
        raise ValueError(f"the optimal throw count is defined for N >= 3 (N=2 is a tie), got N={n}")


def delta_sbar(n: int, k: int) -> int:
    """Change in the k-th sub-diagonal sum: C(2N,0)+...+C(2N,N-k) - C(2N,N)."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..N-1, got {k}")
    return prefix_sum_row(2 * n, n - k) - binomial(2 * n, n)


def delta_s(n: int, k: int) -> int:
    """Change in the k-th super-diagonal sum: -(C(2N,0)+...+C(2N,N-k))."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..N-1, got {k}")
    return -prefix_sum_row(2 * n, n - k)


def k_approx(n: int) -> int:
    """Largest k with C(2N,0)+...+C(2N,N-k) >= C(2N,N)."""
    _need_n3(n)
    row = pascal_row(2 * n)
    centre = row[n]
    # scan upward; the prefix shrinks as k grows
    prefix = sum(row[: n])  # k = 1 includes C(2N, N-1)
    best = 0
    for k in range(1, n):
        if prefix >= centre:
            best = k
        else:
            break
        prefix -= row[n - k]
    return best


def k_exact(n: int) -> int:
    """Largest k in 1..floor(N/2) with C(N,k-1)^2 + sum_{j<=N-k} C(2N,j) >= C(2N,N)."""
    _need_n3(n)
    row = pascal_row(2 * n)
    small = pascal_row(n)
    centre = row[n]
    prefix = sum(row[: n])
    best = 0
    for k in range(1, n // 2 + 1):
        if small[k - 1] ** 2 + prefix >= centre:
            best = k
        prefix -= row[n - k]
    return best


def k_approx_center_out(n: int) -> int:
    """Same k(N), summing only the k central terms: 4^N/2 - 3/2 C(2N,N) - C(2N,N-1) - ..."""
    _need_n3(n)
    row = pascal_row(2 * n)
    # doubled to stay in integers: 4^N - 3 C(2N,N) - 2 sum_{t=1}^{k-1} C(2N,N-t)
    acc = 4**n - 3 * row[n]
    best = 0
    for k in range(1, n):
        if k > 1:
            acc -= 2 * row[n - k + 1]
        if acc >= 0:
            best = k
        else:
            break
    return best


def no_gap_values(n: int) -> list[int]:
    """F(pi_k) for k = 0..floor(N/2), from closed forms (no matrix needed)."""
    out = []
    thrown = 0
    for k in range(n // 2 + 1):
        if k > 0:
            thrown += amd_entry(n, k)
        out.append(diagonal_sum_below(n, k) + thrown)
    return out


def no_gap_increment(n: int, k: int) -> int:
    """F(pi_k) - F(pi_{k-1}): sub-diagonal change plus the newly thrown anti-diagonal entry."""
    return delta_sbar(n, k) + amd_entry(n, k)


def best_no_gap_k(n: int) -> int:
    vals = no_gap_values(n)
    return max(range(len(vals)), key=lambda k: vals[k])


@dataclass
class KReport:
    n: int
    k_exact: int
    k_approx: int
    f_values: list[int]
    lower_bound: float
    upper_bound: float
    ratio: float
    above_lower: bool
    below_upper: bool
    naive_bound: int
    naive_ok: bool
    bound_violation: bool = field(init=False)

    def __post_init__(self):
        self.bound_violation = not (self.above_lower and self.below_upper)

    def to_json(self) -> dict:
        d = asdict(self)
        d["f_values"] = [str(v) for v in self.f_values]
        return d

    def summary_json(self) -> dict:
        return {k: getattr(self, k) for k in
                ("n", "k_exact", "k_approx", "lower_bound", "upper_bound", "ratio", "bound_violation")}


def exceeds_sqrt_n_log_n(n: int, k: int, divisor: int) -> bool:
    """Certified k > sqrt(N ln N / divisor)."""
    return certified_sign(lambda c: divisor * k * k - c.mpf(n) * c.log(c.mpf(n))) > 0


def naive_lower_bound(n: int) -> int:
    """floor((sqrt(pi N) - 1) / 2), certified: largest m with (2m+1)^2 <= pi N."""
    m = max(0, int((math.sqrt(math.pi * n) - 1) / 2) + 1)

    def fits(m):  # (2m+1)^2 < pi N ; equality is impossible
        return certified_sign(lambda c: c.pi * n - (2 * m + 1) ** 2) > 0

    while m > 0 and not fits(m):
        m -= 1
    while fits(m + 1):
        m += 1
    return m


def k_report(n: int, with_values: bool = True) -> KReport:
    _need_n3(n)
    ke, ka = k_exact(n), k_approx(n)
    nl = n * math.log(n)
    naive = naive_lower_bound(n)
    return KReport(
        n=n,
        k_exact=ke,
        k_approx=ka,
        f_values=no_gap_values(n) if with_values else [],
        lower_bound=math.sqrt(nl / 4),
        upper_bound=math.sqrt(nl / 2),
        ratio=ke / math.sqrt(nl),
        above_lower=exceeds_sqrt_n_log_n(n, ke, 4),
        below_upper=not exceeds_sqrt_n_log_n(n, ke, 2),
        naive_bound=naive,
        naive_ok=naive <= ka,
    )


def kk_star_divergence_scan(n_max: int) -> list[int]:
    if n_max < 3:
        raise ValueError("scan needs N_max >= 3")
    return [n for n in range(3, n_max + 1) if k_approx(n) != k_exact(n)]


def bound_exceptions(n_lo: int, n_hi: int) -> dict[str, list[int]]:
    """N in [n_lo, n_hi] where k* escapes either side of the sqrt(N ln N) window."""
    out = {"lower": [], "upper": []}
    for n in range(max(3, n_lo), n_hi + 1):
        k = k_exact(n)
        if not exceeds_sqrt_n_log_n(n, k, 4):
            out["lower"].append(n)
        if exceeds_sqrt_n_log_n(n, k, 2):
            out["upper"].append(n)
    return out


# --------------------------------------------------------------------------
# rogue-element diagnostics


def c_ij(p: TrickMatrix, i: int, j: int) -> int:
    """Objective change from sliding a rogue anti-diagonal element up one row."""
    n = p.n
    if not (1 <= j < i <= n - 1):
        raise ValueError(f"need 1 <= j < i <= N-1, got i={i}, j={j}")
    return 2 * (p[i + 1, j] - p[i, j]) + p[i, n + 1 - i] - p[i + 1, n - i]


def d_ij(n: int, i: int, j: int) -> Fraction:
    """j C(N,j) / ((i+j) C(2N,i+j) C(N,i))."""
    if not (1 <= j < i <= n - 1):
        raise ValueError(f"need 1 <= j < i <= N-1, got i={i}, j={j}")
    return Fraction(j * binomial(n, j), (i + j) * binomial(2 * n, i + j) * binomial(n, i))


def c_ij_closed(n: int, i: int, j: int) -> int:
    """[2 C(2N,N) D_ij - 1] C(N,i)^2, exactly."""
    v = (2 * binomial(2 * n, n) * d_ij(n, i, j) - 1) * binomial(n, i) ** 2
    if v.denominator != 1:
        raise ArithmeticError(f"C_ij closed form not integral at N={n}, ({i},{j})")
    return v.numerator


def in_a_priori_region(n: int, i: int, j: int) -> bool:
    """N/4 < i < N/2 and i - j < 2 sqrt(N ln N) (the last test certified)."""
    if not (n < 4 * i and 2 * i < n and j < i):
        return False
    g = i - j
    return certified_sign(lambda c: 4 * c.mpf(n) * c.log(c.mpf(n)) - g * g) > 0


def d_monotonicity_violations(n: int) -> list[tuple[int, int]]:
    """(i, j) in the a-priori region where D_ij > D_{i+1,j+1} fails."""
    out = []
    for i in range(n // 4, (n + 1) // 2):
        for j in range(1, i):
            if i + 1 > n - 1 or not in_a_priori_region(n, i, j):
                continue
            if not d_ij(n, i, j) > d_ij(n, i + 1, j + 1):
                out.append((i, j))
    return out


def pi0_throw_count(n: int) -> int:
    """floor(sqrt(N ln N / 2)), certified."""
    return floor_sqrt_n_log_n(n, 2)


@dataclass
class Pi0Check:
    n: int
    k: int
    value: int
    holds: bool
    slack: float  # value / bound - 1


def pi0_bound_check(n: int, p: TrickMatrix | None = None) -> Pi0Check:
    """F(pi_0) >= (N-k) C(2N,N) [1 - exp(-(k-1)^2/N)] with k = floor(sqrt(N ln N/2))."""
    if n < 30:
        raise ValueError(f"the pi_0 bound is stated for N >= 30, got {n}")
    p = p if p is not None else build_rowsum(n)
    k = pi0_throw_count(n)
    value = objective(p, no_gap_strategy(n, k))
    scale = p.scale

    def gap(c):
        bound = (n - k) * c.mpf(scale) * (1 - c.exp(-c.mpf((k - 1) ** 2) / n))
        return c.mpf(value) - bound

    holds = certified_sign(gap) > 0
    bound = (n - k) * scale * (1 - math.exp(-((k - 1) ** 2) / n))
    return Pi0Check(n, k, value, holds, value / bound - 1)


# --------------------------------------------------------------------------
# one-sided central-limit inequality


MODES = ("plain", "shifted")


def tail_bound_holds(n: int, k: int, mode: str = "plain") -> bool:
    """C(2N, N-k) < exp(-k^2/D) C(2N, N), D = N ("plain") or N + k ("shifted")."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    lhs = binomial(2 * n, n - k)
    centre = binomial(2 * n, n)
    denom = n if mode == "plain" else n + k
    return certified_sign(lambda c: c.exp(-c.mpf(k * k) / denom) * centre - lhs) > 0


@dataclass
class LemmaRegionScan:
    mode: str
    n_range: tuple[int, int]
    cells: dict[tuple[int, int], bool]

    @property
    def exceptions(self) -> list[tuple[int, int]]:
        return sorted(nk for nk, ok in self.cells.items() if not ok)

    def holds(self, n: int, k: int) -> bool:
        return self.cells[(n, k)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "k", "holds"])
        for (n, k), ok in sorted(self.cells.items()):
            w.writerow([n, k, int(ok)])
        return buf.getvalue()

    @staticmethod
    def cells_from_csv(text: str) -> dict[tuple[int, int], bool]:
        rows = list(csv.DictReader(io.StringIO(text)))
        return {(int(r["N"]), int(r["k"])): r["holds"] in ("1", "True", "true") for r in rows}


def tail_bound_scan(n_lo: int, n_hi: int, mode: str = "plain", cap: int = 2000) -> LemmaRegionScan:
    """Evaluate the inequality on N in [n_lo, n_hi], 3 <= k <= N/2 - 1."""
    if n_lo < 8:
        raise ValueError("the scan is defined for N >= 8")
    if n_hi > cap:
        raise ValueError(f"scan capped at N={cap}")
    cells = {}
    for n in range(n_lo, n_hi + 1):
        for k in range(3, n // 2):  # k <= N/2 - 1
            cells[(n, k)] = tail_bound_holds(n, k, mode)
    return LemmaRegionScan(mode, (n_lo, n_hi), cells)


def tail_bound_expected(mode: str = "plain") -> dict[tuple[int, int], bool]:
    """The recorded frontier for 8 <= N <= 60 shipped with the package."""
    name = f"tail_bound_{mode}.csv"
    text = resources.files("oneround.data").joinpath(name).read_text()
    return LemmaRegionScan.cells_from_csv(text)
