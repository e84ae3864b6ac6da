import logging
from itertools import permutations

import pytest

from partial_shuffles.common import InvalidInputError
from partial_shuffles.perm import (
    Permutation,
    PatternBasis,
    complement,
    descent_set,
    inverse,
    longest_decreasing,
    longest_increasing,
    make_delta,
    make_iota,
    parse_many,
    reverse,
    reverse_complement,
    standardize,
)
from partial_shuffles.perm import avoids_all, contains
from partial_shuffles.shuffles import ShuffleParams, partial_shuffle

GOLDEN = Permutation.parse("582916743")


class TestParse:
    def test_compact_and_spaced_forms_agree(self):
        assert Permutation.parse("3 1 2") == Permutation.parse("312") == Permutation((3, 1, 2))

    def test_commas(self):
        assert Permutation.parse("2,1,3").values == (2, 1, 3)

    def test_empty(self):
        assert len(Permutation.parse("")) == 0

    def test_large_permutation_labels_with_commas(self):
        perm = Permutation.parse("10 1 2 3 4 5 6 7 8 9")
        assert perm.label() == "10,1,2,3,4,5,6,7,8,9"
        assert Permutation.parse(perm.label()) == perm

    @pytest.mark.parametrize("text", ["1 1", "1 3", "0", "12a", "1234567891"])
    def test_rejects_invalid(self, text):
        with pytest.raises(InvalidInputError):
            Permutation.parse(text)

    def test_positions_are_one_based(self):
        assert GOLDEN.value_at(1) == 5
        assert GOLDEN.position_of(6) == 6
        with pytest.raises(InvalidInputError):
            GOLDEN.value_at(10)

    def test_parse_many(self):
        assert [p.label() for p in parse_many(["21", "1 2"])] == ["21", "12"]


class TestConstructors:
    def test_iota_delta(self):
        assert make_iota(4).label() == "1234"
        assert make_delta(3).label() == "321"
        assert len(make_iota(0)) == 0

    def test_standardize(self):
        assert standardize([50, 20, 90]) == Permutation((2, 1, 3))
        with pytest.raises(InvalidInputError):
            standardize([1, 1])


class TestSymmetry:
    def test_reverse_and_complement(self):
        assert reverse(Permutation.parse("123")).label() == "321"
        assert complement(Permutation.parse("132")).label() == "312"
        assert reverse_complement(Permutation.parse("132")).label() == "213"

    def test_inverse(self):
        assert inverse(Permutation.parse("2314")).label() == "3124"
        assert inverse(inverse(GOLDEN)) == GOLDEN



def s7():
    return (Permutation(values) for values in permutations(range(1, 8)))


class TestReverseComplement:
    def test_involution(self):
        for perm in s7():
            assert reverse_complement(reverse_complement(perm)) == perm

    def test_descents_are_mirrored(self):
        for perm in s7():
            mirrored = {len(perm) - i for i in descent_set(perm)}
            assert descent_set(reverse_complement(perm)) == mirrored, perm

    @pytest.mark.parametrize("a, b", [(3, 1), (2, 2), (4, 0), (2, 1)])
    def test_avoidance_commutes_with_rc(self, a, b):
        basis = partial_shuffle(ShuffleParams(a, b))
        mirrored = basis.reverse_complement()
        for perm in s7():
            assert avoids_all(perm, basis) == avoids_all(reverse_complement(perm), mirrored), perm


class TestStatistics:
    def test_descent_set(self):
        assert descent_set(GOLDEN) == {2, 4, 7, 8}
        assert descent_set(make_iota(5)) == frozenset()

    def test_longest_runs(self):
        assert longest_decreasing(make_delta(5)) == 5
        assert longest_increasing(Permutation.parse("2143")) == 2
        assert longest_decreasing(Permutation.parse("563412")) == 3
        assert longest_increasing(Permutation.parse("563412")) == 2
        assert longest_decreasing(Permutation(())) == 0

    def test_longest_decreasing_is_the_largest_delta(self):
        for perm in s7():
            largest = max(m for m in range(len(perm) + 1) if contains(perm, make_delta(m)))
            assert longest_decreasing(perm) == largest, perm


class TestPatternBasis:
    def test_canonical_order_and_dedup(self):
        basis = PatternBasis.parse("312,21,132,21")
        assert basis.labels() == ["21", "132", "312"]
        assert str(basis) == "{21, 132, 312}"

    def test_semicolon_separated(self):
        assert PatternBasis.parse("1 3 2; 2 1").labels() == ["21", "132"]

    def test_redundancy_is_a_warning(self, caplog):
        caplog.set_level(logging.WARNING)
        basis = PatternBasis.parse("21,321")
        assert basis.validate() is False
        assert "contains" in caplog.text

    def test_union(self):
        merged = PatternBasis.parse("132").union([make_delta(3)])
        assert merged.labels() == ["132", "321"]
