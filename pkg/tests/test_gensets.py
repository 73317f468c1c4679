import functools
import itertools
import random

import pytest

from tatami.gensets import (
    SubsetPairGenerator,
    gen_subset_pairs,
    max_sum,
    subset_pairs,
    subset_sum_count,
    subset_sum_counts,
)


def brute_subsets(s, k):
    return {
        combo
        for r in range(s + 1)
        for combo in itertools.combinations(range(1, s + 1), r)
        if sum(combo) == k
    }


def test_counts_examples():
    assert subset_sum_count(0, 0) == 1
    assert subset_sum_count(3, 3) == 2
    assert subset_sum_count(4, 5) == 2
    assert subset_sum_count(4, -1) == 0
    assert subset_sum_count(4, 11) == 0


@pytest.mark.parametrize("s", range(0, 25))
def test_counts_sum_to_power_of_two(s):
    assert sum(subset_sum_counts(s)) == 2 ** s
    assert len(subset_sum_counts(s)) == max_sum(s) + 1


def test_pair_examples():
    assert subset_pairs(3, 3, 0, 0) == [([3], []), ([1, 2], [])]
    assert subset_pairs(0, 0, 0, 0) == [([], [])]
    assert subset_pairs(2, 5, 2, 1) == []


def test_negative_parameters_rejected():
    with pytest.raises(ValueError):
        gen_subset_pairs(-1, 0, 0, 0, lambda x, y: None)
    with pytest.raises(ValueError):
        SubsetPairGenerator(3, 3).run(2, -1, 1, 0, lambda x, y: None)


@functools.lru_cache(maxsize=None)
def cached_subsets(s, k):
    return frozenset(brute_subsets(s, k))


def sum_pairs(a, b, rng):
    """All (i, j) for small a + b; a fixed random sample otherwise."""
    pairs = [(i, j) for i in range(max_sum(a) + 1) for j in range(max_sum(b) + 1)]
    return pairs if a + b <= 16 else rng.sample(pairs, 40)


def test_matches_brute_force_up_to_12():
    rng = random.Random(20)
    gen = SubsetPairGenerator(12, 12)
    for a in range(13):
        for b in range(13):
            for i, j in sum_pairs(a, b, rng):
                seen = []
                count = gen.run(a, i, b, j, lambda x, y: seen.append((tuple(x), tuple(y))))
                assert count == subset_sum_count(a, i) * subset_sum_count(b, j)
                assert len(seen) == count
                assert set(seen) == set(itertools.product(cached_subsets(a, i), cached_subsets(b, j)))


def test_lists_are_restored():
    gen = SubsetPairGenerator(9, 9)
    gen.run(9, 20, 7, 11, lambda x, y: None)
    assert gen.first[1:] == list(range(2, 11))
    assert gen.second[1:] == list(range(2, 11))


def test_visited_lists_sorted():
    for x, y in subset_pairs(10, 23, 6, 9):
        assert x == sorted(x) and y == sorted(y)


def test_amortized_ops_bounded():
    gen = SubsetPairGenerator(13, 13)
    worst = 0.0
    for a, b in [(11, 6), (12, 3), (7, 10), (13, 0)]:
        for i in range(max_sum(a) + 1):
            before_ops, before_out = gen.ops, gen.outputs
            gen.run(a, i, b, max_sum(b) // 2, lambda x, y: None)
            produced = gen.outputs - before_out
            if produced >= 100:
                worst = max(worst, (gen.ops - before_ops) / produced)
    assert 0 < worst <= 50
