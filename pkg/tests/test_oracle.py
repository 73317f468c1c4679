import pytest

from tatami.core import census_value, validate_covering
from tatami.oracle import enumerate_tn, enumerate_valid_codes, vertical_histogram
from tatami.polylab.published import VH_TABLE


def test_small_counts():
    assert len(list(enumerate_tn(2))) == 1
    assert len(list(enumerate_tn(8))) == 256
    assert len(list(enumerate_tn(9))) == 576


def test_histogram_examples():
    assert vertical_histogram(4).by_vertical == {0: 1, 1: 2, 2: 3, 3: 2}
    assert vertical_histogram(8).by_vertical[7] == 24
    assert vertical_histogram(5).row() == [1, 2, 3, 6, 4, 2, 2]


@pytest.mark.parametrize("n", range(2, 11))
def test_histogram_matches_published_table(n):
    assert tuple(vertical_histogram(n).row()) == VH_TABLE[n]


@pytest.mark.parametrize("n", range(2, 9))
def test_every_covering_valid_and_unique(n):
    covs = list(enumerate_tn(n))
    assert all(validate_covering(c).ok for c in covs)
    assert len({c.key for c in covs}) == len(covs)
    assert vertical_histogram(n).total == len(covs)
    assert sum(1 for c in covs if census_value(c) == 0) == 1


def test_valid_code_counts():
    assert len(enumerate_valid_codes(2)) == 1
    assert len(enumerate_valid_codes(6)) == 48
    assert len(enumerate_valid_codes(10)) == 1280


def test_bounds_refused():
    with pytest.raises(ValueError):
        list(enumerate_tn(13))
    with pytest.raises(ValueError):
        enumerate_valid_codes(15)
    with pytest.raises(ValueError):
        list(enumerate_tn(1))
