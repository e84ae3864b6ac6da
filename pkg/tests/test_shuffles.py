from itertools import permutations

import pytest

import oracle
from partial_shuffles.common import IntervalViolationError, InvalidParamsError
from partial_shuffles.perm import Permutation, PatternBasis, make_delta
from partial_shuffles.shuffles import (
    ShuffleMark,
    ShuffleParams,
    basis_for,
    displaced_positions,
    find_mark,
    partial_shuffle,
    sigma,
    splits_of,
)

GOLDEN = Permutation.parse("582916743")


def assert_interval_lemma(p, n):
    for values in permutations(range(1, n + 1)):
        perm = Permutation(values)
        expected = oracle.mark(perm, p)
        mark = find_mark(perm, p)
        if expected is None:
            assert mark is None, perm
            continue
        top, associated = expected
        assert mark.underline_a_value == top, perm
        assert associated == set(range(mark.assoc_low, top)), perm


class TestParams:
    @pytest.mark.parametrize("a, b", [(0, 2), (1, 0), (2, -1)])
    def test_domain(self, a, b):
        with pytest.raises(InvalidParamsError):
            ShuffleParams(a, b)

    def test_shift_and_reverse_complement(self):
        p = ShuffleParams(3, 1)
        assert p.shifted() == ShuffleParams(2, 2)
        assert p.reverse_complement() == ShuffleParams(2, 2)
        with pytest.raises(InvalidParamsError):
            ShuffleParams(1, 2).shifted()

    def test_splits(self):
        assert [str(p) for p in splits_of(3)] == ["Π(3,0)", "Π(2,1)", "Π(1,2)"]


class TestPartialShuffle:
    def test_size_five_example(self):
        assert partial_shuffle(ShuffleParams(3, 2)).labels() == ["12435", "12453", "13245", "31245"]

    def test_size_two_is_21(self):
        for p in splits_of(2):
            assert partial_shuffle(p).labels() == ["21"]

    def test_sigma(self):
        assert sigma(ShuffleParams(3, 1)).label() == "1324"
        assert sigma(ShuffleParams(2, 0)).label() == "21"
        with pytest.raises(InvalidParamsError):
            sigma(ShuffleParams(1, 1))

    @pytest.mark.parametrize("a, b", [(2, 0), (2, 1), (3, 1), (3, 2), (2, 2), (4, 1)])
    def test_sigma_is_the_only_common_pattern(self, a, b):
        p = ShuffleParams(a, b)
        common = set(partial_shuffle(p)) & set(partial_shuffle(p.shifted()))
        assert common == {sigma(p)}
        assert len(partial_shuffle(p)) == p.size - 1

    @pytest.mark.parametrize("a, b", [(3, 1), (2, 2), (4, 1), (3, 3)])
    def test_reverse_complement_shifts_parameters(self, a, b):
        p = ShuffleParams(a, b)
        assert partial_shuffle(p).reverse_complement() == partial_shuffle(p.reverse_complement())

    def test_basis_with_delta(self):
        basis = basis_for(ShuffleParams(3, 0), 3)
        assert basis == PatternBasis.parse("132,312,321")
        assert make_delta(3) in basis
        with pytest.raises(InvalidParamsError):
            basis_for(ShuffleParams(3, 0), 0)


class TestMark:
    def test_golden_mark(self):
        mark = find_mark(GOLDEN, ShuffleParams(3, 1))
        assert mark.underline_a_value == 6
        assert mark.underline_a_position == 6
        assert mark.interval == (2, 5)
        assert mark.associated_positions(GOLDEN) == (1, 3, 8, 9)
        assert str(mark) == "value 6 at position 6, interval [2,5]"

    def test_no_mark_on_avoiders(self):
        assert find_mark(Permutation.parse("123456"), ShuffleParams(3, 1)) is None

    @pytest.mark.parametrize("a, b", [(2, 0), (2, 1), (3, 1), (3, 2), (2, 2), (4, 0)])
    def test_associated_elements_form_an_interval(self, a, b):
        assert_interval_lemma(ShuffleParams(a, b), 6)

    @pytest.mark.parametrize("a, b", [(3, 1), (2, 2), (4, 0)])
    def test_interval_at_seven(self, a, b):
        assert_interval_lemma(ShuffleParams(a, b), 7)

    @pytest.mark.slow
    @pytest.mark.parametrize("a, b", [(2, 0), (2, 1), (3, 1), (3, 2), (2, 2), (4, 0)])
    def test_interval_at_eight(self, a, b):
        assert_interval_lemma(ShuffleParams(a, b), 8)

    @pytest.mark.parametrize("low, high", [(2, 4), (5, 4), (3, 5)])
    def test_malformed_interval_is_rejected(self, low, high):
        with pytest.raises(IntervalViolationError):
            ShuffleMark(6, 6, low, high)

    def test_single_associated_value(self):
        assert ShuffleMark(6, 6, 5, 5).interval == (5, 5)


@pytest.mark.parametrize("c, d", [(1, 1), (2, 0), (2, 1), (1, 2), (3, 1)])
def test_displaced_positions_match_brute_force(c, d):
    for values in permutations(range(1, 7)):
        perm = Permutation(values)
        assert displaced_positions(perm, c, d) == oracle.displaced(perm, c, d), perm
