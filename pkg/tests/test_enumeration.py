from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import join_spaces
from oracle import Naive
from joingeom.enumeration import (EnumSpec, canonical_form, count_join_spaces,
                                  enumerate_join_spaces, iter_range, join_space_at,
                                  partition_ranges, sample_join_spaces, sample_line_join_spaces)
from joingeom.relations import ResourceLimitError, StructuralError


@pytest.mark.parametrize("n,total", [(0, 1), (1, 1), (2, 1), (3, 8), (4, 4096), (5, 2 ** 30)])
def test_counts(n, total):
    assert count_join_spaces(n) == total


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_stream_length_and_distinctness(n):
    models = list(enumerate_join_spaces(n))
    assert len(models) == count_join_spaces(n)
    assert len(set(models)) == len(models)


def test_stream_is_deterministic():
    assert list(enumerate_join_spaces(4)) == list(enumerate_join_spaces(4))


def test_odometer_order():
    first, second = list(iter_range(3, 0, 2))
    assert first.pair_joins == (0b011, 0b101, 0b110)
    # the last pair (1, 2) turns fastest
    assert second.pair_joins == (0b011, 0b101, 0b111)
    assert join_space_at(3, 7).pair_joins == (0b111, 0b111, 0b111)


@given(st.integers(0, 4095))
def test_random_access_matches_stream(i):
    assert join_space_at(4, i) == next(iter_range(4, i, i + 1))


def test_random_access_bounds():
    with pytest.raises(IndexError):
        join_space_at(3, 8)


@given(st.integers(0, 5000), st.integers(1, 9))
def test_partition_property(total, parts):
    ranges = partition_ranges(total, parts)
    assert len(ranges) == parts
    assert ranges[0][0] == 0 and ranges[-1][1] == total
    for (a, b), (c, d) in zip(ranges, ranges[1:]):
        assert b == c
    sizes = [b - a for a, b in ranges]
    assert max(sizes) - min(sizes) <= 1


def test_partitioned_stream_equals_whole():
    whole = list(iter_range(4, 0, 4096))
    pieces = []
    for a, b in partition_ranges(4096, 7):
        pieces += list(iter_range(4, a, b))
    assert pieces == whole


def naive_orbits(models):
    seen, count = set(), 0
    for s in models:
        if s.pair_joins in seen:
            continue
        count += 1
        for perm in permutations(range(s.n)):
            seen.add(s.relabel(perm).pair_joins)
    return count


@pytest.mark.parametrize("n", [2, 3, 4])
def test_isomorph_rejection_counts_orbits(n):
    classes = list(enumerate_join_spaces(EnumSpec(n, dedup=True)))
    assert len(classes) == naive_orbits(list(enumerate_join_spaces(n)))
    assert all(canonical_form(s) == s for s in classes)


def test_known_orbit_counts():
    assert len(list(enumerate_join_spaces(EnumSpec(3, dedup=True)))) == 4
    assert len(list(enumerate_join_spaces(EnumSpec(4, dedup=True)))) == 218


@given(join_spaces(max_n=5), st.randoms())
def test_canonical_form_invariant_and_idempotent(s, rnd):
    perm = list(range(s.n))
    rnd.shuffle(perm)
    c = canonical_form(s)
    assert canonical_form(c) == c
    assert canonical_form(s.relabel(tuple(perm))) == c


def test_samples_reproduce():
    assert sample_join_spaces(5, 20, 3) == sample_join_spaces(5, 20, 3)
    assert sample_join_spaces(5, 20, 3) != sample_join_spaces(5, 20, 4)
    assert sample_line_join_spaces(6, 20, 9) == sample_line_join_spaces(6, 20, 9)
    spec = EnumSpec(4, mode="sampled", count=10, seed=1)
    assert list(enumerate_join_spaces(spec)) == list(enumerate_join_spaces(spec))


@given(st.integers(0, 8), st.integers(0, 2 ** 32))
def test_line_sampler_is_equivalence_relational(n, seed):
    for s in sample_line_join_spaces(n, 3, seed):
        assert Naive(s).er()


def test_guards():
    with pytest.raises(ResourceLimitError):
        EnumSpec(5)
    EnumSpec(5, allow_n5=True)
    with pytest.raises(ResourceLimitError):
        list(enumerate_join_spaces(EnumSpec(5, allow_n5=True)))   # 2^30 > ceiling
    with pytest.raises(ResourceLimitError):
        EnumSpec(6, allow_n5=True)
    with pytest.raises(ResourceLimitError):
        EnumSpec(9, mode="sampled", count=1, dedup=True)
    with pytest.raises(StructuralError):
        EnumSpec(3, mode="other")
    with pytest.raises(StructuralError):
        EnumSpec(-1)
