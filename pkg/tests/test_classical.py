"""Deterministic strategy enumeration and the classical bound."""

import itertools

import pytest

from qorient.classical import (
    DeterministicStrategy,
    classical_beta,
    classical_maximum,
    classical_minimum,
    classical_success_bound,
    enumerate_all,
)

# brute-force golden values, frozen from the enumeration itself
GOLDEN_MAX = 7
GOLDEN_MIN = 2
GOLDEN_N_OPTIMAL = 6


def strat(a, b):
    return DeterministicStrategy(alice=tuple(a), bob=tuple(b))


class TestClassicalBeta:
    def test_all_same_sign(self):
        # every same-path term hits, every cross term fails
        assert classical_beta(strat((1, 1, 1), (1, 1, 1))) == 3

    def test_equal_mixed_strategy_is_optimal(self):
        # 3 same-path hits + 4 ordered cross pairs with differing signs
        assert classical_beta(strat((1, 1, -1), (1, 1, -1))) == 7

    def test_hand_counted_example(self):
        # a=(+,-,+), b=(-,+,-): no same-path hits; ordered cross mismatches
        # at (1,3) and (3,1) only
        assert classical_beta(strat((1, -1, 1), (-1, 1, -1))) == 2

    def test_integer_range(self):
        for s, score in enumerate_all():
            assert isinstance(score, int)
            assert 0 <= score <= 9

    def test_bad_entries_rejected(self):
        with pytest.raises(ValueError):
            strat((1, 1, 0), (1, 1, 1))
        with pytest.raises(ValueError):
            strat((1, 1), (1, 1, 1))


class TestEnumeration:
    def test_counts_64(self):
        assert len(enumerate_all()) == 64

    def test_maximum_is_exactly_seven(self):
        best, argmax = classical_maximum()
        assert best == GOLDEN_MAX
        assert len(argmax) == GOLDEN_N_OPTIMAL
        # optimal strategies have both players equal with mixed signs
        for s in argmax:
            assert s.alice == s.bob
            assert len(set(s.alice)) == 2

    def test_minimum(self):
        worst, _ = classical_minimum()
        assert worst == GOLDEN_MIN

    def test_success_bound(self):
        assert classical_success_bound() == pytest.approx(7 / 9, abs=0)

    def test_quantum_optimum_exceeds_bound(self):
        assert 7.5 / 9 > classical_success_bound()


class TestSymmetries:
    def test_global_sign_flip_invariance(self):
        for a in itertools.product((1, -1), repeat=3):
            for b in itertools.product((1, -1), repeat=3):
                flipped = strat([-x for x in a], [-x for x in b])
                assert classical_beta(strat(a, b)) == classical_beta(flipped)

    def test_common_path_permutation_invariance(self):
        perms = list(itertools.permutations(range(3)))
        for a in itertools.product((1, -1), repeat=3):
            for b in itertools.product((1, -1), repeat=3):
                base = classical_beta(strat(a, b))
                for perm in perms:
                    pa = [a[k] for k in perm]
                    pb = [b[k] for k in perm]
                    assert classical_beta(strat(pa, pb)) == base
