import math
from fractions import Fraction

import pytest
from _reference import REFERENCE

from oneround.combinatorics import binomial, central, pascal_row, prefix_sum_row
from oneround.errors import CapExceededError
from oneround.matrix import (
    BUILDERS, TrickMatrix, amd_entry, augment, build_bruteforce, build_hooksum, build_rowsum,
    compare_entries, diagonal_step, diagonal_sum_above, diagonal_sum_below, diagonal_sums, hook,
    hook_sum_entry, hooksum_step, unit_square_closed_form, unit_square_defect, verify_structural_lemmas,
)


def test_binomial_basics():
    assert binomial(40, 15) == 40225345056 == math.comb(40, 15)
    assert binomial(40, 20) == 137846528820
    assert binomial(5, 7) == 0 and binomial(5, -1) == 0
    assert pascal_row(4) == [1, 4, 6, 4, 1]
    assert prefix_sum_row(14, 5) == 3473  # 1 + 14 + 91 + 364 + 1001 + 2002
    assert prefix_sum_row(6, 6) == 64 and prefix_sum_row(6, -1) == 0
    assert central(7) == 3432
    assert all(binomial(n, k) == math.comb(n, k) for n in range(0, 120, 7) for k in range(n + 1))


@pytest.mark.parametrize("n", sorted(REFERENCE))
def test_reference_tables(n):
    diffs = compare_entries(build_rowsum(n), REFERENCE[n])
    if n == 8:
        assert diffs == [(8, 8, 6435, 6425)]
    else:
        assert diffs == []


def test_bad_reference_entry_breaks_constant_diagonal():
    p = build_rowsum(8)
    assert {p[i, i] for i in range(1, 9)} == {6435}
    assert REFERENCE[8][7][7] == 6425


@pytest.mark.parametrize("n", range(1, 9))
def test_all_builders_agree(n):
    ref = build_bruteforce(n)
    for name, build in BUILDERS.items():
        assert build(n) == ref, name


def test_formula_builders_agree_to_60():
    for n in (20, 41, 60):
        assert BUILDERS["rowsum"](n) == BUILDERS["antidiag"](n) == BUILDERS["hooksum"](n)


def test_brute_cap():
    with pytest.raises(CapExceededError):
        build_bruteforce(11)
    assert build_bruteforce(3, cap=3) == build_rowsum(3)


def test_hook_values_p5_23():
    a = augment(build_rowsum(4))
    assert hook(a, 2, 3) == 35 + 17 + 5 + 15 == 72
    assert hook(a, 1, 4) == 5 + 1 == 6
    assert hooksum_step(build_rowsum(4))[2, 3] == 66


def test_augmented_border():
    a = augment(build_rowsum(3))
    assert [r[0] for r in a] == [20] * 4
    assert a[-1] == [20] * 4


def test_hook_step_chain():
    for n in range(1, 30):
        assert hooksum_step(build_rowsum(n)) == build_rowsum(n + 1)
    assert build_hooksum(12) == build_rowsum(12)


def test_two_sum_hook_entry():
    for n in range(2, 9):
        p, nxt = build_rowsum(n), build_rowsum(n + 1)
        for i in range(1, n + 1):
            for k in range(1, n + 1):
                assert hook_sum_entry(p, i, k) == nxt[i, k + 1]


def test_serialization_round_trips():
    p = build_rowsum(30)
    assert TrickMatrix.from_json(p.to_json()) == p
    assert TrickMatrix.from_csv(p.to_csv()) == p
    assert TrickMatrix.from_csv(p.to_csv(header=False)) == p
    assert build_rowsum(2).to_csv(header=False) == "3,1\n5,3\n"
    assert build_rowsum(3).pretty().splitlines()[0] == "10  4  1"


def test_amd_entries():
    p = build_rowsum(9)
    for i in range(1, 5):
        assert p[i, 10 - i] == amd_entry(9, i)
    assert amd_entry(7, 2) == 1 + 49
    with pytest.raises(ValueError):
        amd_entry(7, 4)


def test_diagonal_sums_closed_forms():
    for n in range(1, 25):
        ds = diagonal_sums(build_rowsum(n))
        for k in range(n):
            assert ds.above[k] == diagonal_sum_above(n, k)
            assert ds.below[k] == diagonal_sum_below(n, k)
    # example 1 sub-diagonal sums for N = 7
    assert diagonal_sum_below(7, 2) - diagonal_sum_below(7, 1) == 3473 - 3432


def test_unit_square_closed_form():
    for n in range(2, 20):
        p = build_rowsum(n)
        for i in range(1, n):
            for j in range(1, n):
                if i != j:
                    assert unit_square_closed_form(n, i, j) == unit_square_defect(p, i, j)


def test_alt_unit_square_denominator_is_wrong_off_first_row():
    # the (j+1) denominator only agrees with the counts when i = 1
    assert unit_square_closed_form(5, 2, 1) == unit_square_defect(build_rowsum(5), 2, 1)
    alt = unit_square_closed_form(5, 2, 1, alt_denominator=True)
    assert alt != unit_square_defect(build_rowsum(5), 2, 1)
    assert alt == Fraction(75, 2)


def test_diagonal_step_formula():
    for n in range(2, 15):
        p = build_rowsum(n)
        for k in range(-(n - 1), n):
            for i in range(1, n):
                if 1 <= i + k and i + k + 1 <= n:
                    assert p[i + 1, i + k + 1] - p[i, i + k] == diagonal_step(n, i, k)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 30, 60])
def test_structural_suite_passes(n):
    rep = verify_structural_lemmas(build_rowsum(n))
    assert rep.passed, [r.line() for r in rep.failures()]


def test_structural_suite_catches_a_bad_matrix():
    rows = build_rowsum(8).to_lists()
    rows[7][7] = 6425
    rep = verify_structural_lemmas(TrickMatrix.from_rows(rows))
    assert not rep.passed
    assert not rep.get("main_diagonal").passed
    assert rep.get("main_diagonal").counterexample is not None
