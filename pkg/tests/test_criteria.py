import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import join_spaces, line_join_spaces
from oracle import Naive
from joingeom import axioms, criteria
from joingeom.generators import affine_join_space, grid_segment_space, projective_space
from joingeom.relations import JoinSpace, ResourceLimitError, dependent4_points

spaces = st.one_of(join_spaces(max_n=5), line_join_spaces(max_n=6))


@given(join_spaces(max_n=4))
def test_subset_table_matches_set_join(s):
    T = criteria.subset_join_table(s)
    for A in range(1 << s.n):
        for C in range(1 << s.n):
            assert T[A, C] == s.set_join(A, C)


@given(join_spaces(max_n=3))
def test_associativity_matches_oracle(s):
    w = criteria.associativity_witness(s, exact=True)
    assert (w is None) == Naive(s).associative()
    if w is not None:
        A, B, C = w
        assert s.set_join(s.set_join(A, B), C) != s.set_join(A, s.set_join(B, C))


@given(spaces)
def test_join_transitivity_criterion_agrees(s):
    v = criteria.thm_join_transitivity_vector(s, exact=True)
    assert len(v.conditions) == 9
    assert v.agree, v.verdicts
    assert v.verdicts[0] == Naive(s).join_transitive()


@given(spaces)
def test_join_equivalence_criterion_agrees_under_hypothesis(s):
    v = criteria.thm_join_equivalence_vector(s)
    assert v.hypothesis_met == Naive(s).er()
    if v.hypothesis_met:
        assert v.agree, v.verdicts


@given(spaces)
def test_matroid_criterion_agrees_under_hypothesis(s):
    v = criteria.matroid_criterion_vector(s)
    assert v.hypothesis_met == Naive(s).join_transitive()
    if v.hypothesis_met:
        assert v.agree, v.verdicts


@given(spaces)
def test_corollary_identities(s):
    for fn in (criteria.projectivity_identity, criteria.matroid_preprojectivity_identity,
               criteria.matroid_projectivity_identity):
        lhs, rhs = fn(s)
        assert lhs == rhs, fn.__name__


@given(spaces)
def test_entailment_reversal(s):
    rep = criteria.entailment_reverse_check(s)
    if rep.hypothesis_met:
        assert rep


def test_entailment_reversal_meaning(fano):
    """Reverse check by hand: y in jc(A + x) iff <A, y, x>."""
    _, s = fano
    o = Naive(s)
    for A in o.closed_sets():
        if not A:
            continue
        for x in range(s.n):
            hull = o.cl(A | {x})
            for y in range(s.n):
                assert (y in hull) == o.bet(A, y, x)


def test_hypothesis_flags_propagate(grid33):
    v = criteria.thm_join_equivalence_vector(grid33)
    assert not v.hypothesis_met
    assert all(not c.hypothesis_met for c in v.conditions)


def test_sampled_conditions_are_flagged():
    s = affine_join_space(2, 3)          # 8 points: sampled by default
    v = criteria.thm_join_transitivity_vector(s)
    assert not v["4"].exact and not v["5"].exact
    assert all(v[k].exact for k in "1236789")
    assert v.agree


def test_exact_bound():
    s = JoinSpace.minimal(8)
    with pytest.raises(ResourceLimitError):
        criteria.thm_join_transitivity_vector(s, exact=True)


def test_ag23_vectors(ag23):
    v = criteria.thm_join_transitivity_vector(ag23)
    assert v.verdicts == (False,) * 9
    w = criteria.thm_join_equivalence_vector(ag23)
    assert w.hypothesis_met and w.verdicts == (False,) * 5
    # the two failures the theorem ties together
    assert not w["2"] and not w["5"]
    assert w["5"].witness[0] == "XII"


def test_fano_vectors(fano):
    _, s = fano
    assert criteria.thm_join_transitivity_vector(s).verdicts == (True,) * 9
    assert criteria.thm_join_equivalence_vector(s).verdicts == (True,) * 5
    assert criteria.matroid_criterion_vector(s).verdicts == (True,) * 4
    assert criteria.projectivity_identity(s) == (True, True)


def test_grid_vectors(grid33):
    v = criteria.thm_join_transitivity_vector(grid33, exact=False)
    assert v.agree


def test_witnesses_are_reported():
    s = grid_segment_space((3, 1))
    v = criteria.matroid_criterion_vector(s)
    assert v.hypothesis_met
    assert v.verdicts == (False,) * 4
    assert v["3"].witness == (0b001, 2, 1)
    assert v["1"].witness is not None


@given(spaces)
def test_quadruple_reversal_witness_meaning(s):
    w = criteria.quadruple_reversal_witness(s)
    if w is not None:
        a, b, c, d = w
        assert dependent4_points(s, c, b, a, d) and not dependent4_points(s, a, b, c, d)


def test_quadruple_reversal_in_affine_plane(ag23):
    a, b, c, d = criteria.quadruple_reversal_witness(ag23)
    assert dependent4_points(ag23, c, b, a, d) and not dependent4_points(ag23, a, b, c, d)


def test_triple_joins_definitions(fano):
    _, s = fano
    left, right = criteria.triple_joins(s)
    for a in range(7):
        for b in range(7):
            for c in range(7):
                assert left[a][b][c] == s.set_join(1 << a, s.join(b, c))
                assert right[a][b][c] == s.set_join(s.join(a, b), 1 << c)


def test_pg32_criterion_needs_override():
    _, s = projective_space(2, 3)
    with pytest.raises(ResourceLimitError):
        criteria.thm_join_transitivity_vector(s)
    v = criteria.thm_join_transitivity_vector(s, max_closed_n=15)
    assert v.verdicts == (True,) * 9
