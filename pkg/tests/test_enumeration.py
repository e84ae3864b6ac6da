import pytest

import oracle
from partial_shuffles.common import CountOverflowError, InvalidParamsError, U64_MAX
from partial_shuffles.enumeration import (
    AvoiderSearch,
    CountSequence,
    check_symmetry,
    check_wilf,
    count_avoiders,
    count_size,
    enumerate_avoiders,
)
from partial_shuffles.enumeration import avoiders
from partial_shuffles.perm import PatternBasis, Permutation
from partial_shuffles.shuffles import ShuffleParams, basis_for, partial_shuffle


def labels(perms):
    return [p.label() for p in perms]


class TestEnumerate:
    def test_only_identity_avoids_21(self):
        assert labels(enumerate_avoiders(PatternBasis.parse("21"), 4)) == ["1234"]

    def test_lexicographic_order(self):
        basis = PatternBasis.parse("132,312,321")
        assert labels(enumerate_avoiders(basis, 3)) == ["123", "213", "231"]

    def test_small_shuffle_class(self):
        assert len(list(enumerate_avoiders(partial_shuffle(ShuffleParams(2, 1)), 4))) == 8

    def test_size_zero(self):
        assert labels(enumerate_avoiders(PatternBasis.parse("21"), 0)) == [""]

    def test_empty_pattern_blocks_everything(self):
        basis = PatternBasis((Permutation(()), Permutation.parse("21")))
        assert list(enumerate_avoiders(basis, 3)) == []
        assert count_avoiders(basis, 3).counts == (0, 0, 0, 0)

    @pytest.mark.parametrize("a, b, delta", [
        (2, 1, None), (3, 0, None), (1, 2, None), (3, 1, None), (2, 2, None),
        (3, 2, None), (3, 0, 3), (2, 2, 3), (4, 0, 4),
    ])
    def test_matches_brute_force_filter(self, a, b, delta):
        basis = basis_for(ShuffleParams(a, b), delta)
        for n in range(0, 7):
            assert list(enumerate_avoiders(basis, n)) == oracle.avoiders(basis, n), n

    @pytest.mark.parametrize("a, b", [(3, 1), (2, 2)])
    def test_matches_brute_force_at_seven(self, a, b):
        basis = partial_shuffle(ShuffleParams(a, b))
        assert list(enumerate_avoiders(basis, 7)) == oracle.avoiders(basis, 7)

    def test_workers_keep_order(self):
        basis = partial_shuffle(ShuffleParams(3, 1))
        assert list(enumerate_avoiders(basis, 6, workers=3)) == list(enumerate_avoiders(basis, 6))


class TestCount:
    def test_constant_class(self):
        assert count_avoiders(PatternBasis.parse("21"), 6).counts == (1,) * 7

    def test_delta_class(self):
        assert count_avoiders(basis_for(ShuffleParams(3, 0), 3), 3).count(3) == 3

    def test_powers_of_two(self):
        seq = count_avoiders(partial_shuffle(ShuffleParams(2, 1)), 6)
        assert seq.count(0) == 1
        assert [seq.count(n) for n in range(1, 7)] == [2 ** (n - 1) for n in range(1, 7)]

    def test_window(self):
        seq = count_avoiders(partial_shuffle(ShuffleParams(2, 1)), 5, n_min=3)
        assert seq.items() == [(3, 4), (4, 8), (5, 16)]

    def test_workers_do_not_change_counts(self):
        basis = basis_for(ShuffleParams(3, 1), 3)
        assert count_avoiders(basis, 9, workers=4) == count_avoiders(basis, 9)

    def test_csv_and_dict(self):
        seq = count_avoiders(partial_shuffle(ShuffleParams(2, 1)), 3)
        assert seq.to_csv() == "n,count\n0,1\n1,1\n2,2\n3,4\n"
        assert seq.to_dict()["counts"][-1] == {"n": 3, "count": 4}
        assert seq.to_dict()["basis"] == ["132", "213"]

    def test_overflow_is_detected(self):
        with pytest.raises(CountOverflowError):
            CountSequence(PatternBasis(()), 0, (U64_MAX + 1,))

    def test_count_size_overflow(self, monkeypatch):
        monkeypatch.setattr(avoiders, "U64_MAX", 10)
        with pytest.raises(CountOverflowError):
            count_size(PatternBasis.parse("321"), 4)
        assert count_size(PatternBasis.parse("321"), 3) == 5

    def test_catalan_class_at_ten(self):
        assert count_size(PatternBasis.parse("321"), 10) == 16796
        assert count_size(PatternBasis.parse("321"), 10, workers=3) == 16796


class TestGeneratingTree:
    def test_one_node_per_level_for_21(self):
        search = AvoiderSearch(PatternBasis.parse("21"), 30)
        for depth in range(31):
            assert search.frontier(depth) == [tuple(range(1, depth + 1))]

    @pytest.mark.parametrize("a, b", [(2, 1), (3, 1), (2, 2)])
    def test_levels_are_the_avoiders(self, a, b):
        basis = partial_shuffle(ShuffleParams(a, b))
        search = AvoiderSearch(basis, 6)
        for depth in range(7):
            expected = sorted(p.values for p in oracle.avoiders(basis, depth))
            assert sorted(search.frontier(depth)) == expected

    def test_split_covers_the_tree_once(self):
        search = AvoiderSearch(partial_shuffle(ShuffleParams(3, 1)), 7)
        chunks = search.split(3)
        assert len(chunks) > 1
        assert sum(search.count_below(chunk) for chunk in chunks) == search.count_below([()])
        members = [m for chunk in chunks for m in search.members_below(chunk)]
        assert len(members) == len(set(members))

    def test_negative_size(self):
        with pytest.raises(InvalidParamsError):
            AvoiderSearch(PatternBasis.parse("21"), -1)


class TestWilf:
    def test_size_two(self):
        report = check_wilf(2, 6)
        assert report.passed
        assert report.details["common"] == [1] * 7

    def test_size_three(self):
        report = check_wilf(3, 8)
        assert report.passed
        assert report.details["common"] == [1, 1, 2, 4, 8, 16, 32, 64, 128]
        assert report.details["bases"] == ["Π(3,0)", "Π(2,1)", "Π(1,2)"]

    def test_size_four(self):
        assert check_wilf(4, 7).passed

    def test_with_delta(self):
        report = check_wilf(4, 9, delta_m=3)
        assert report.passed
        assert report.params == {"size": 4, "delta": 3}

    @pytest.mark.slow
    @pytest.mark.parametrize("size, n_max, delta", [
        (3, 10, None), (4, 9, None), (5, 8, None), (3, 12, 3), (4, 12, 3), (5, 12, 3),
    ])
    def test_desk_scale(self, size, n_max, delta):
        assert check_wilf(size, n_max, delta, workers=4).passed

    def test_divergence_is_reported(self, monkeypatch):
        import partial_shuffles.enumeration.wilf as wilf

        real = wilf.count_avoiders

        def skewed(basis, n_max, n_min=0, workers=1):
            seq = real(basis, n_max, n_min, workers)
            if basis == partial_shuffle(ShuffleParams(1, 2)):
                counts = list(seq.counts)
                counts[-1] += 1
                return CountSequence(basis, seq.n_min, tuple(counts))
            return seq

        monkeypatch.setattr(wilf, "count_avoiders", skewed)
        report = wilf.check_wilf(3, 5)
        assert not report.passed
        assert report.counterexample == {
            "n": 5,
            "basis": "Π(1,2)",
            "count": 17,
            "reference_basis": "Π(3,0)",
            "reference_count": 16,
        }


def test_reverse_complement_symmetry():
    report = check_symmetry(basis_for(ShuffleParams(3, 1), 4), 7)
    assert report.passed
