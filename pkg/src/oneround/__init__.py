"""One-round War: exact trick matrices, optimal throw counts, and oracles."""

from .combinatorics import binomial, central, pascal_row, prefix_sum_row
from .errors import CapExceededError
from .matrix import (
    BUILDERS, TrickMatrix, build_antidiagonal, build_bruteforce, build_hooksum, build_rowsum,
    diagonal_sums, verify_structural_lemmas,
)
from .optimal_k import KReport, LemmaRegionScan, k_approx, k_exact, k_report, tail_bound_scan
from .oracles import Deal, OptimumResult, enumerate_deals, exhaustive_optimal, lap_optimal
from .report import LemmaResult, VerificationReport
from .simulator import SimConfig, SimReport, simulate
from .strategy import Strategy, ThrowString, no_gap_strategy, objective

__version__ = "0.1.0"
