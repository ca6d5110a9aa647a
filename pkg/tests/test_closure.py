import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import join_spaces, line_join_spaces
from oracle import Naive, mask, subsets
from joingeom import closure
from joingeom.closure import (ClosureSystem, OrderDependenceWarning, all_join_closed, entails,
                              exchange_witness, greedy_basis, is_combinatorial, is_exchange_space,
                              is_join_closed, is_matroid, iter_join_closed, join_closed_witness,
                              join_closure, matroid_rank)
from joingeom.generators import affine_join_space, grid_segment_space, projective_space
from joingeom.relations import JoinSpace, ResourceLimitError, StructuralError


@given(join_spaces(max_n=5))
def test_join_closed_matches_oracle(s):
    o = Naive(s)
    assert sorted(mask(C) for C in o.closed_sets()) == list(iter_join_closed(s))
    for C in subsets(s.n):
        assert is_join_closed(s, mask(C)) == o.join_closed(C)
        w = join_closed_witness(s, mask(C))
        assert (w is None) == o.join_closed(C)
        if w is not None:
            a, b, x = w
            assert a in C and b in C and x not in C and x in o.J[a, b]


@given(st.one_of(join_spaces(max_n=6), line_join_spaces(max_n=10)), st.data())
def test_fixpoint_closure_equals_intersection_closure(s, data):
    """The frontier fixpoint agrees with the intersection of all closed supersets."""
    o = Naive(s)
    closed = [mask(C) for C in o.closed_sets()]
    A = data.draw(st.integers(0, (1 << s.n) - 1)) if s.n else 0
    cap = (1 << s.n) - 1
    for C in closed:
        if A & ~C == 0:
            cap &= C
    assert join_closure(s, A) == cap


@given(join_spaces(max_n=5), st.data())
def test_closure_operator_laws(s, data):
    fam = data.draw(st.lists(st.integers(0, (1 << s.n) - 1), min_size=1, max_size=12))
    assert closure.closure_is_extensive_monotone_idempotent(s, fam)
    for A in fam:
        for B in fam:
            if A & ~B == 0:
                assert join_closure(s, A) & ~join_closure(s, B) == 0


@given(join_spaces(max_n=5))
def test_closure_system_invariants(s):
    cs = all_join_closed(s)
    assert cs.is_closed(cs.universe)
    assert cs.is_closed(0)          # the empty set is join-closed
    for A in cs.closed:
        for B in cs.closed:
            assert cs.is_closed(A & B)
    for A in range(1 << s.n):
        assert cs.closure(A) == join_closure(s, A)
        assert cs.is_closed(cs.closure(A))


def test_closure_system_validation():
    with pytest.raises(ValueError):
        ClosureSystem(2, frozenset({0b01}))
    with pytest.raises(ValueError):
        ClosureSystem(3, frozenset({0b011, 0b110, 0b111}))
    with pytest.raises(StructuralError):
        ClosureSystem(2, frozenset({0b11, 0b100}))
    cs = ClosureSystem(3, frozenset({0b111, 0b011, 0b001}))
    assert cs.closure(0b010) == 0b011


@given(join_spaces(max_n=5))
def test_exchange_matches_oracle(s):
    o = Naive(s)
    assert bool(is_exchange_space(s)) == o.exchange()
    assert bool(is_matroid(s)) == o.exchange()
    w = exchange_witness(s)
    if w is not None:
        A, p, q = w
        assert entails(s, A, p, q) and not entails(s, A, q, p)


@given(join_spaces(max_n=4))
def test_every_finite_join_space_is_combinatorial(s):
    assert is_combinatorial(s)


def test_chain_enumeration():
    # {0} < {0,1} < {0,1,2} and {2} < {0,1,2}: 4 singletons, 4 comparable pairs, 1 triple
    chains = list(closure._chains([0b001, 0b011, 0b111, 0b100]))
    assert len(chains) == 9
    assert [0b001, 0b011, 0b111] in chains
    assert not any(0b001 in c and 0b100 in c for c in chains)


def test_entailment_on_closure_system_and_space(fano):
    _, s = fano
    cs = ClosureSystem.from_join_space(s)
    for A in (0, 1, s.join(0, 1)):
        for p in range(7):
            for q in range(7):
                assert entails(s, A, p, q) == entails(cs, A, p, q)
    assert entails(s, 0b1, 1, 2)     # the line through 0 and 1 is {0, 1, 2}


def test_fano_closure_of_two_points(fano):
    _, s = fano
    assert join_closure(s, 0) == 0
    assert join_closure(s, 0b11) == s.join(0, 1)
    assert bin(join_closure(s, 0b11)).count("1") == 3
    assert join_closure(s, s.join(0, 1) | 1 << 3) == s.universe


def test_rank_of_classical_spaces(fano):
    _, s = fano
    r = matroid_rank(s)
    assert (r.rank, r.dimension, r.matroid) == (3, 2, True)
    assert str(r) == "rank 3, dimension 2"
    _, pg32 = projective_space(2, 3)
    assert matroid_rank(pg32, max_n=15).rank == 4
    assert matroid_rank(affine_join_space(3, 2)).rank == 3


def test_rank_warns_on_non_matroid():
    s = grid_segment_space((3, 1))
    assert exchange_witness(s) == (0b001, 2, 1)
    with pytest.warns(OrderDependenceWarning):
        r = matroid_rank(s)
    assert not r.matroid
    assert r.rank == 3


def test_rank_no_warning_on_matroid():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert matroid_rank(JoinSpace.minimal(3)).rank == 3


def test_greedy_basis_is_independent(fano):
    _, s = fano
    basis = greedy_basis(s)
    assert basis == (0, 1, 3)
    for p in basis:
        rest = mask(set(basis) - {p})
        assert not join_closure(s, rest) >> p & 1


def test_closed_set_guard():
    _, s = projective_space(2, 3)
    with pytest.raises(ResourceLimitError):
        list(iter_join_closed(s))
    with pytest.raises(ResourceLimitError):
        matroid_rank(s)


def test_pg32_flats():
    # flats of PG(3,2): empty, 15 points, 35 lines, 15 planes, whole space
    _, s = projective_space(2, 3)
    assert len(list(iter_join_closed(s, max_n=15))) == 1 + 15 + 35 + 15 + 1
