import pytest

from partial_shuffles.analysis import (
    check_extremal,
    erdos_szekeres_extremal,
    erdos_szekeres_permutation,
    extremal_witness,
)
from partial_shuffles.common import InvalidParamsError
from partial_shuffles.perm import longest_decreasing, longest_increasing


def test_three_by_three():
    assert erdos_szekeres_extremal(3, 3) == 4
    assert extremal_witness(3, 3).label() == "2143"


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_decreasing_only(q):
    assert erdos_szekeres_extremal(2, q) == q - 1


@pytest.mark.parametrize("p", [2, 3, 4])
@pytest.mark.parametrize("q", [2, 3, 4])
def test_extremal_size(p, q):
    report = check_extremal(p, q)
    assert report.passed
    assert report.n == (p - 1) * (q - 1)


def test_layered_permutation():
    perm = erdos_szekeres_permutation(3, 4)
    assert perm.label() == "563412"
    assert longest_increasing(perm) == 2
    assert longest_decreasing(perm) == 3


@pytest.mark.parametrize("p, q", [(2, 2), (3, 3), (4, 3), (3, 5)])
def test_layered_permutation_is_extremal(p, q):
    perm = erdos_szekeres_permutation(p, q)
    assert len(perm) == (p - 1) * (q - 1)
    assert longest_increasing(perm) < p
    assert longest_decreasing(perm) < q


def test_domain():
    with pytest.raises(InvalidParamsError):
        erdos_szekeres_extremal(1, 3)
