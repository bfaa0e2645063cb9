import pytest

from oneround.errors import CapExceededError
from oneround.matrix import build_rowsum
from oneround.strategy import (
    Strategy, ThrowString, enumerate_shape_candidates, is_shape_valid, is_symmetric, majority_strategy,
    no_gap_strategy, objective, reflect, strategy_from_string, throw_string, verify_splice_identity,
)

SPLICE = {
    "pi": [7, 1, 6, 5, 2, 3, 4],
    "pi_prime": [7, 5, 4, 1, 2, 3, 6],
    "sigma": [7, 6, 5, 4, 2, 3, 1],
    "tau1": [7, 6, 5, 1, 2, 3, 4],
    "tau2": [7, 1, 4, 5, 2, 3, 6],
    "tau3": [7, 5, 6, 4, 2, 3, 1],
}


def test_permutation_validation():
    with pytest.raises(ValueError):
        Strategy([1, 1, 3])
    s = Strategy.from_cycles(5, [(1, 5, 4, 3, 2)])
    assert s.images == (5, 1, 2, 3, 4)
    assert s.cycles() == [(1, 5, 4, 3, 2)]
    assert s.inverse().inverse() == s
    assert Strategy.from_json(s.to_json()) == s


def test_throw_string_parsing():
    t = ThrowString.parse("1101", 8)
    assert str(t) == "1101" and t.thrown == [1, 2, 4]
    assert not t.is_gap_free()
    assert ThrowString.parse("1100", 9).is_gap_free()
    with pytest.raises(ValueError):
        ThrowString.parse("12", 4)
    with pytest.raises(ValueError):
        ThrowString.parse("1", 4)


def test_reflection_of_splice_example():
    pi = Strategy(SPLICE["pi"])
    assert reflect(pi) == Strategy(SPLICE["pi_prime"])
    assert reflect(pi)(1) == 7  # the worst card is thrown at the best
    assert reflect(reflect(pi)) == pi


def test_symmetry_predicate():
    assert is_symmetric(Strategy.from_cycles(5, [(1, 5, 4, 3, 2)]))
    assert is_symmetric(Strategy.from_cycles(5, [(1, 5, 3), (2, 4)]))
    assert not is_symmetric(Strategy.from_cycles(5, [(1, 5, 4, 2, 3)]))
    assert not is_symmetric(Strategy.from_cycles(5, [(1, 5, 3, 4, 2)]))
    for s in map(Strategy, [[3, 1, 2], [1, 2, 3]]):
        assert is_symmetric(s) == (reflect(s) == s)


def test_shape_candidates_for_five():
    got = {s.images for s in enumerate_shape_candidates(5)}
    want = {Strategy.from_cycles(5, c).images for c in (
        [(1, 5, 4, 3, 2)], [(1, 5, 3), (2, 4)], [(1, 5, 4, 2, 3)], [(1, 5, 3, 4, 2)])}
    assert got == want
    # the two candidates ruled out by symmetry are exactly the last two listed
    asym = {s.images for s in enumerate_shape_candidates(5) if not is_symmetric(s)}
    assert asym == {Strategy.from_cycles(5, c).images for c in ([(1, 5, 4, 2, 3)], [(1, 5, 3, 4, 2)])}


def test_shape_candidates_match_filter():
    from itertools import permutations

    for n in range(3, 8):
        brute = {p for p in permutations(range(1, n + 1)) if is_shape_valid(Strategy(p))}
        assert {s.images for s in enumerate_shape_candidates(n)} == brute


@pytest.mark.parametrize("n", range(3, 15))
def test_shape_candidate_count(n):
    assert len(enumerate_shape_candidates(n)) == 2 ** (n - 3)


def test_shape_cap():
    with pytest.raises(CapExceededError):
        enumerate_shape_candidates(21)


def test_shape_validity_rules():
    assert not is_shape_valid(Strategy.identity(4))  # fixed points
    assert is_shape_valid(Strategy([3, 1, 2]))
    assert not is_shape_valid(Strategy([2, 3, 1]))  # above-diagonal points climb SE


def test_no_gap_and_majority():
    assert no_gap_strategy(7, 2).images == (7, 6, 1, 2, 3, 4, 5)
    assert majority_strategy(3).images == (3, 1, 2)
    assert majority_strategy(5).images == (5, 4, 1, 2, 3)
    with pytest.raises(ValueError):
        majority_strategy(4)
    with pytest.raises(ValueError):
        no_gap_strategy(7, 4)


def test_strings_round_trip():
    for n in range(2, 13):
        m = n // 2
        for bits in range(2**m):
            t = ThrowString(n, tuple(bool(bits >> b & 1) for b in range(m)))
            s = strategy_from_string(t)
            assert is_symmetric(s)
            assert throw_string(s) == t
    assert strategy_from_string(ThrowString.parse("11", 5)) == no_gap_strategy(5, 2)


def test_splice_identity():
    p = build_rowsum(7)
    six = [Strategy(SPLICE[k]) for k in ("pi", "pi_prime", "sigma", "tau1", "tau2", "tau3")]
    assert [objective(p, s) for s in six] == [13657, 13657, 12201, 13678, 13825, 12012]
    assert verify_splice_identity(p, *six)
    same = [six[0]] * 6
    assert verify_splice_identity(p, *same)
    broken = six[:5] + [Strategy([1, 5, 6, 4, 2, 3, 7])]
    assert not verify_splice_identity(p, *broken)


def test_objective_size_mismatch():
    with pytest.raises(ValueError):
        objective(build_rowsum(4), Strategy.identity(3))
