import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import join_spaces, line_join_spaces
from oracle import Naive
from joingeom import propositions as P
from joingeom.generators import affine_join_space, grid_segment_space

spaces = st.one_of(join_spaces(max_n=5), line_join_spaces(max_n=7))


@settings(max_examples=25)
@given(spaces)
def test_battery_passes(s):
    for rep in P.battery(s):
        assert rep, (rep.label, rep.witness)


@given(join_spaces(max_n=5))
def test_battery_is_exact_on_small_spaces(s):
    assert all(r.exact for r in P.battery(s))


def test_sampled_battery_is_flagged():
    reps = P.battery(affine_join_space(3, 2))
    assert any(not r.exact for r in reps)
    assert all(reps)


@given(join_spaces(max_n=5))
def test_set_join_laws_hold(s):
    laws = P.set_join_laws(s)
    assert sorted(laws) == ["absorbs", "commutative", "monotone-both", "monotone-left",
                            "monotone-right"]
    assert all(laws.values())


@given(join_spaces(min_n=6, max_n=7), st.integers(0, 10))
def test_sampled_family_is_seeded(s, seed):
    fam, exact = P.subset_family(s, 8, seed)
    assert not exact
    assert fam == sorted(set(fam))
    assert fam == P.subset_family(s, 8, seed)[0]


def test_subset_family():
    from joingeom.relations import JoinSpace
    fam, exact = P.subset_family(JoinSpace.minimal(3))
    assert exact and fam == list(range(8))
    fam, exact = P.subset_family(JoinSpace.minimal(7), samples=5, seed=2)
    assert not exact
    assert 0 in fam and 127 in fam and all(1 << p in fam for p in range(7))
    assert fam == P.subset_family(JoinSpace.minimal(7), samples=5, seed=2)[0]


@given(spaces)
def test_base_point_conditions_match_oracle(s):
    o = Naive(s)
    for a in range(s.n):
        one, two, three = P.base_point_conditions(s, a)
        assert one == o.a_er(frozenset([a]))
        assert one == two == three


@given(spaces)
def test_equivalence_conditions(s):
    one, two, three = P.equivalence_conditions(s)
    assert one == Naive(s).er() == two == three


def test_grid_is_not_base_point_er():
    s = grid_segment_space((3, 1))
    assert P.base_point_conditions(s, 0) == (False, False, False)
    assert P.base_point_conditions(s, 1) == (True, True, True)


def test_labels_unique(fano):
    _, s = fano
    labels = [r.label for r in P.battery(s)]
    assert len(labels) == len(set(labels)) == 12
