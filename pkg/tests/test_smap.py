from itertools import permutations
from types import SimpleNamespace

import pytest

from partial_shuffles.common import InvalidParamsError
from partial_shuffles.perm import Permutation, avoids_all, descent_set, make_iota, reverse
from partial_shuffles.shuffles import ShuffleParams, partial_shuffle
from partial_shuffles.smap import (
    LEMMA_CHECKS,
    SStep,
    check_injectivity,
    check_lemmas,
    s_apply,
    s_iterate,
)
import partial_shuffles.smap.checks as checks

GOLDEN = Permutation.parse("582916743")
PAIRS = [(2, 0), (2, 1), (3, 1), (3, 2), (2, 2)]


class TestApply:
    def test_golden_step(self):
        step = s_apply(GOLDEN, ShuffleParams(3, 1))
        assert step.output.label() == "683912754"
        assert step.mark.underline_a_value == 6
        assert descent_set(step.input) == descent_set(step.output) == {2, 4, 7, 8}

    def test_smallest_rotation(self):
        assert s_apply(Permutation.parse("21"), ShuffleParams(2, 0)).output.label() == "12"

    def test_fixed_point(self):
        perm = Permutation.parse("123456")
        step = s_apply(perm, ShuffleParams(3, 1))
        assert step.is_fixed_point
        assert step.output == perm

    def test_needs_a_at_least_two(self):
        with pytest.raises(InvalidParamsError):
            s_apply(GOLDEN, ShuffleParams(1, 3))

    @pytest.mark.parametrize("a, b", PAIRS)
    def test_only_the_rotated_interval_moves(self, a, b):
        p = ShuffleParams(a, b)
        for values in permutations(range(1, 7)):
            step = s_apply(Permutation(values), p)
            if step.mark is None:
                continue
            low, top = step.mark.assoc_low, step.mark.underline_a_value
            for before, after in zip(step.input, step.output):
                if not low <= before <= top:
                    assert before == after

    @pytest.mark.parametrize("a, b", PAIRS)
    def test_fixed_exactly_on_the_shifted_class(self, a, b):
        p = ShuffleParams(a, b)
        target = partial_shuffle(p.shifted())
        for values in permutations(range(1, 6)):
            perm = Permutation(values)
            assert (s_apply(perm, p).output == perm) == avoids_all(perm, target)


class TestIterate:
    def test_golden_iteration(self):
        p = ShuffleParams(3, 1)
        result = s_iterate(GOLDEN, p)
        assert result.trace[0].output.label() == "683912754"
        assert 1 <= result.steps <= len(GOLDEN) - p.a
        assert result.reached_fixed_point
        assert avoids_all(result.final, partial_shuffle(p.shifted()))

    def test_identity_needs_no_steps(self):
        result = s_iterate(make_iota(6), ShuffleParams(3, 1))
        assert result.final == make_iota(6)
        assert result.steps == 0
        assert result.trace == []

    def test_to_dict(self):
        data = s_iterate(GOLDEN, ShuffleParams(3, 1)).to_dict()
        assert data["trace"][0]["mark"] == {
            "underline_a_value": 6,
            "underline_a_position": 6,
            "assoc_low": 2,
            "assoc_high": 5,
        }


class TestLemmaSweep:
    @pytest.mark.parametrize("a, b", PAIRS)
    def test_all_lemmas_hold_on_s6(self, a, b):
        reports = check_lemmas(ShuffleParams(a, b), 6)
        assert [r.check for r in reports] == list(LEMMA_CHECKS)
        for report in reports:
            assert report.passed, report.to_dict()
        by_name = {r.check: r for r in reports}
        assert by_name["new_a_elements_localized"].details["checked"] == 720

    def test_smallest_case(self):
        assert all(r.passed for r in check_lemmas(ShuffleParams(2, 0), 5))

    def test_workers_do_not_change_the_report(self):
        p = ShuffleParams(3, 1)
        single = [r.to_dict() for r in check_lemmas(p, 6, workers=1)]
        parallel = [r.to_dict() for r in check_lemmas(p, 6, workers=3)]
        assert single == parallel

    @pytest.mark.slow
    @pytest.mark.parametrize("a, b", PAIRS)
    def test_all_lemmas_hold_on_s7(self, a, b):
        assert all(r.passed for r in check_lemmas(ShuffleParams(a, b), 7, workers=4))


class TestInjectivity:
    def test_trivial_class(self):
        report = check_injectivity(ShuffleParams(2, 0), 6)
        assert report.passed
        assert report.details["domain_size"] == report.details["target_size"] == 1

    @pytest.mark.parametrize("a, b", PAIRS)
    def test_bijective_up_to_seven(self, a, b):
        report = check_injectivity(ShuffleParams(a, b), 7)
        assert report.passed, report.to_dict()
        assert report.details["image_size"] == report.details["target_size"]

    @pytest.mark.slow
    @pytest.mark.parametrize("a, b", PAIRS)
    @pytest.mark.parametrize("n", [8, 9])
    def test_bijective_at_desk_scale(self, a, b, n):
        assert check_injectivity(ShuffleParams(a, b), n, workers=4).passed


class TestReportedFailures:
    def test_image_outside_the_target(self, monkeypatch):
        monkeypatch.setattr(checks, "s_iterate", lambda perm, p: SimpleNamespace(final=perm))
        report = check_injectivity(ShuffleParams(3, 1), 5)
        assert not report.passed
        assert report.details["distinct"]
        assert not report.details["in_target"]
        assert report.counterexample["image"] == report.counterexample["perm"]
        assert not avoids_all(Permutation.parse(report.counterexample["image"]),
                              partial_shuffle(ShuffleParams(2, 2)))

    def test_collision(self, monkeypatch):
        monkeypatch.setattr(checks, "s_iterate", lambda perm, p: SimpleNamespace(final=make_iota(len(perm))))
        report = check_injectivity(ShuffleParams(3, 1), 5)
        assert not report.passed
        assert not report.details["distinct"]
        assert report.details["image_size"] == 1
        assert report.counterexample["image"] == "12345"
        assert report.counterexample["perm"] != report.counterexample["other"]

    def test_broken_step_breaks_descents(self, monkeypatch):
        real_apply = checks.s_apply

        def reversed_apply(perm, p):
            step = real_apply(perm, p)
            return SStep(step.input, reverse(step.output), step.mark)

        monkeypatch.setattr(checks, "s_apply", reversed_apply)
        reports = {r.check: r for r in check_lemmas(ShuffleParams(3, 1), 5)}
        broken = reports["descent_set_preserved"]
        assert not broken.passed
        assert broken.counterexample["before"] != broken.counterexample["after"]
        assert reports["termination_within_bound"].passed
