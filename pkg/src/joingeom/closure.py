"""Join-closed sets, join closure, closure systems, entailment and matroids."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .bitset import full, lowest, members
from .relations import CheckReport, JoinSpace, ResourceLimitError, StructuralError

DEFAULT_MAX_CLOSED_N = 14


def join_closed_witness(s: JoinSpace, C: int) -> tuple[int, int, int] | None:
    """First ``(a, b, x)`` with ``a < b`` in ``C`` and ``x`` in ``ab`` outside ``C``."""
    rows = s.rows
    pts = tuple(members(C))
    for i, a in enumerate(pts):
        row = rows[a]
        for b in pts[i + 1:]:
            extra = row[b] & ~C
            if extra:
                return a, b, lowest(extra)
    return None


def is_join_closed(s: JoinSpace, C: int) -> bool:
    """``CC`` is contained in ``C``.  Pairs of distinct points suffice since ``aa = {a}``."""
    rows = s.rows
    pts = tuple(members(C))
    for i, a in enumerate(pts):
        row = rows[a]
        for b in pts[i + 1:]:
            if row[b] & ~C:
                return False
    return True


def join_closure(s: JoinSpace, A: int) -> int:
    """Least join-closed superset of ``A``, as the fixpoint of ``A -> A | AA``.

    Only joins involving at least one newly added point can contribute in a
    later round, so each round joins the frontier against the whole set.
    """
    rows = s.rows
    closed = A
    frontier = A
    while frontier:
        grown = closed
        olds = tuple(members(closed))
        for a in members(frontier):
            row = rows[a]
            for b in olds:
                grown |= row[b]
        frontier = grown & ~closed
        closed = grown
    return closed


def _guard(n: int, max_n: int | None) -> None:
    bound = DEFAULT_MAX_CLOSED_N if max_n is None else max_n
    if n > bound:
        raise ResourceLimitError(
            f"enumerating closed sets of a {n}-point space needs 2^{n} subsets; "
            f"bound is n <= {bound} (raise max_n to override)")


@dataclass(frozen=True)
class ClosureSystem:
    """A family of subsets of ``{0..n-1}`` containing the ground set and
    closed under intersection of non-empty subfamilies."""

    n: int
    closed: frozenset[int]

    def __post_init__(self):
        X = full(self.n)
        if any(c & ~X for c in self.closed):
            raise StructuralError("closed set outside the ground set")
        if X not in self.closed:
            raise ValueError("closure system must contain the ground set")
        # pairwise closure gives closure under every finite non-empty intersection
        fam = sorted(self.closed)
        for i, c in enumerate(fam):
            for d in fam[i + 1:]:
                if c & d not in self.closed:
                    raise ValueError(
                        f"intersection of closed sets {c:#x} and {d:#x} is not closed")

    @classmethod
    def from_join_space(cls, s: JoinSpace, max_n: int | None = None) -> "ClosureSystem":
        return all_join_closed(s, max_n)

    @property
    def universe(self) -> int:
        return full(self.n)

    def is_closed(self, A: int) -> bool:
        return A in self.closed

    def closure(self, A: int) -> int:
        out = full(self.n)
        for c in self.closed:
            if A & ~c == 0:
                out &= c
        return out

    def sorted_closed(self) -> list[int]:
        return sorted(self.closed)


def iter_join_closed(s: JoinSpace, max_n: int | None = None) -> Iterator[int]:
    """Join-closed subsets in ascending mask order, by filtering the power set."""
    _guard(s.n, max_n)
    for C in range(1 << s.n):
        if is_join_closed(s, C):
            yield C


def all_join_closed(s: JoinSpace, max_n: int | None = None) -> ClosureSystem:
    return ClosureSystem(s.n, frozenset(iter_join_closed(s, max_n)))


Space = Union[JoinSpace, ClosureSystem]


def _closure_fn(x: Space):
    if isinstance(x, JoinSpace):
        return lambda A: join_closure(x, A)
    return x.closure


def _closed_sets(x: Space, max_n: int | None) -> list[int]:
    if isinstance(x, JoinSpace):
        return list(iter_join_closed(x, max_n))
    return x.sorted_closed()


def entails(x: Space, A: int, p: int, q: int) -> bool:
    """``p |-_A q``: ``q`` lies in the closure of ``A`` plus ``p``."""
    return bool(_closure_fn(x)(A | 1 << p) >> q & 1)


def exchange_witness(x: Space, max_n: int | None = None) -> tuple[int, int, int] | None:
    """First ``(A, p, q)`` with ``A`` closed, ``p, q`` outside ``A``, ``p |-_A q``
    but not ``q |-_A p``; ``None`` when the exchange property holds."""
    cl = _closure_fn(x)
    for A in _closed_sets(x, max_n):
        outside = tuple(members(full(x.n) & ~A))
        hull = {p: cl(A | 1 << p) for p in outside}
        for p in outside:
            for q in outside:
                if q != p and hull[p] >> q & 1 and not hull[q] >> p & 1:
                    return A, p, q
    return None


def is_exchange_space(x: Space, max_n: int | None = None) -> CheckReport:
    return CheckReport.judge("exchange", exchange_witness(x, max_n))


def is_matroid(x: Space, max_n: int | None = None) -> CheckReport:
    """A matroid is a combinatorial exchange space.

    Every finite closure system is combinatorial (the union of a finite chain
    is its largest member, see :func:`is_combinatorial`), so only the
    exchange property is evaluated here.
    """
    return is_exchange_space(x, max_n).relabel("matroid")


def _chains(fam: list[int]) -> Iterator[list[int]]:
    """All non-empty chains of ``fam`` (ordered by inclusion), as ascending lists."""
    fam = sorted(fam, key=lambda c: (bin(c).count("1"), c))

    def extend(chain: list[int], start: int) -> Iterator[list[int]]:
        yield chain
        top = chain[-1]
        for i in range(start, len(fam)):
            c = fam[i]
            if c != top and top & ~c == 0:
                yield from extend(chain + [c], i + 1)

    for i, c in enumerate(fam):
        yield from extend([c], i + 1)


def is_combinatorial(x: Space, max_n: int | None = None,
                     max_chains: int = 200_000) -> CheckReport:
    """Brute-force check that the union of every non-empty chain of closed sets is closed."""
    fam = _closed_sets(x, max_n)
    closed = set(fam)
    for count, chain in enumerate(_chains(fam)):
        if count >= max_chains:
            raise ResourceLimitError(f"more than {max_chains} chains")
        union = 0
        for c in chain:
            union |= c
        if union not in closed:
            return CheckReport("combinatorial", False, tuple(chain))
    return CheckReport("combinatorial", True)


class OrderDependenceWarning(UserWarning):
    """Greedy rank of a non-matroid depends on the adjunction order."""


@dataclass(frozen=True)
class Rank:
    rank: int
    basis: tuple[int, ...]
    matroid: bool

    @property
    def dimension(self) -> int:
        return self.rank - 1

    def __str__(self) -> str:
        return f"rank {self.rank}, dimension {self.dimension}"


def greedy_basis(x: Space) -> tuple[int, ...]:
    """Adjoin the smallest point outside the current closure until the closure is everything."""
    cl = _closure_fn(x)
    X = full(x.n)
    current = cl(0)
    basis = []
    while current != X:
        p = lowest(X & ~current)
        basis.append(p)
        current = cl(current | 1 << p)
    return tuple(basis)


def matroid_rank(x: Space, max_n: int | None = None) -> Rank:
    """Greedy basis size.  Meaningful only for matroids; otherwise the value
    is still returned, flagged, and an :class:`OrderDependenceWarning` is issued."""
    matroid = bool(is_matroid(x, max_n))
    basis = greedy_basis(x)
    if not matroid:
        warnings.warn("not a matroid: greedy rank depends on point order",
                      OrderDependenceWarning, stacklevel=2)
    return Rank(len(basis), basis, matroid)


def closure_is_extensive_monotone_idempotent(s: JoinSpace, subsets: Iterable[int]) -> CheckReport:
    """Closure-operator laws for ``join_closure`` over the given subsets (and all pairs of them)."""
    subs = list(subsets)
    hull = {A: join_closure(s, A) for A in subs}
    for A in subs:
        if A & ~hull[A]:
            return CheckReport("closure-operator", False, ("extensive", A))
        if join_closure(s, hull[A]) != hull[A]:
            return CheckReport("closure-operator", False, ("idempotent", A))
    for A in subs:
        for B in subs:
            if A & ~B == 0 and hull[A] & ~hull[B]:
                return CheckReport("closure-operator", False, ("monotone", A, B))
    return CheckReport("closure-operator", True)
