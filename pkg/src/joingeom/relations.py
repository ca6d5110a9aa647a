"""Ternary relations, validated join spaces, set joins and dependence.

Points are the integers ``0..n-1``; subsets are ``int`` bitmasks (see
:mod:`joingeom.bitset`).  A :class:`TernaryRelation` is an arbitrary
candidate relation; a :class:`JoinSpace` is one that satisfies the three
join axioms and stores a single join per unordered pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Mapping, NamedTuple

from .bitset import full, members

MAX_POINTS = 128


class StructuralError(ValueError):
    """Malformed input: wrong mask widths, bad point counts, bad indices."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size bound."""


class HypothesisError(ValueError):
    """An operation was called outside the hypothesis that gives it meaning."""

    def __init__(self, message: str, report: "CheckReport | None" = None):
        super().__init__(message)
        self.report = report


class AxiomViolation(NamedTuple):
    axiom: str
    witness: tuple[int, ...]


class JoinAxiomError(ValueError):
    def __init__(self, violations: list[AxiomViolation]):
        self.violations = violations
        head = ", ".join(f"{v.axiom} at {v.witness}" for v in violations[:5])
        more = f" (+{len(violations) - 5} more)" if len(violations) > 5 else ""
        super().__init__(f"not a join relation: {head}{more}")


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one checked condition.

    ``witness`` is present exactly when ``verdict`` is false.  When the
    condition is only meaningful under a hypothesis that does not hold,
    the condition is still evaluated and ``hypothesis_met`` is false.
    """

    label: str
    verdict: bool
    witness: tuple | None = None
    hypothesis_met: bool = True
    exact: bool = True

    def __post_init__(self):
        if self.verdict and self.witness is not None:
            raise ValueError(f"{self.label}: passing report carries a witness")
        if not self.verdict and self.witness is None:
            raise ValueError(f"{self.label}: failing report lacks a witness")

    def __bool__(self) -> bool:
        return self.verdict

    @classmethod
    def judge(cls, label: str, witness: tuple | None, **kw) -> "CheckReport":
        """Pass iff no witness was found."""
        return cls(label, witness is None, witness, **kw)

    def relabel(self, label: str, **kw) -> "CheckReport":
        return CheckReport(label, self.verdict, self.witness,
                           kw.get("hypothesis_met", self.hypothesis_met),
                           kw.get("exact", self.exact))


@dataclass(frozen=True)
class ConditionVector:
    """The conditions of one equivalence theorem, evaluated on one space.

    Condition reports are labelled ``"1"``, ``"2"``, ... in theorem order.
    The theorem claims the verdicts are all equal; ``agree`` tests exactly that.
    """

    label: str
    conditions: tuple[CheckReport, ...]
    hypothesis_met: bool = True

    @property
    def verdicts(self) -> tuple[bool, ...]:
        return tuple(c.verdict for c in self.conditions)

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts)) <= 1

    def __getitem__(self, cid: int | str) -> CheckReport:
        cid = str(cid)
        for c in self.conditions:
            if c.label == cid:
                return c
        raise KeyError(cid)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise StructuralError(f"point count must be a non-negative int, got {n!r}")
    if n > MAX_POINTS:
        raise StructuralError(f"{n} points exceeds MAX_POINTS={MAX_POINTS}")


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pairs(n: int) -> Iterator[tuple[int, int]]:
    """Unordered pairs ``(a, c)`` with ``a < c`` in lexicographic order."""
    return combinations(range(n), 2)


def pair_index(n: int, a: int, c: int) -> int:
    if a > c:
        a, c = c, a
    return a * (2 * n - a - 1) // 2 + (c - a - 1)


@dataclass(frozen=True)
class TernaryRelation:
    """Raw ternary relation: ``rel[a * n + c]`` is the mask ``{b | <a, b, c>}``."""

    n: int
    rel: tuple[int, ...]

    def __post_init__(self):
        _check_n(self.n)
        if len(self.rel) != self.n * self.n:
            raise StructuralError(
                f"expected {self.n * self.n} ordered-pair entries, got {len(self.rel)}")
        width = full(self.n)
        for i, mask in enumerate(self.rel):
            if not isinstance(mask, int) or mask < 0 or mask & ~width:
                a, c = divmod(i, self.n)
                raise StructuralError(f"entry ({a}, {c}) is not a subset of the {self.n} points")

    @classmethod
    def from_predicate(cls, n: int, holds: Callable[[int, int, int], bool]) -> "TernaryRelation":
        rel = []
        for a in range(n):
            for c in range(n):
                rel.append(sum(1 << b for b in range(n) if holds(a, b, c)))
        return cls(n, tuple(rel))

    def between(self, a: int, c: int) -> int:
        return self.rel[a * self.n + c]

    def holds(self, a: int, b: int, c: int) -> bool:
        return bool(self.rel[a * self.n + c] >> b & 1)


@dataclass(frozen=True)
class JoinSpace:
    """A validated join relation on ``n`` points.

    ``pair_joins[pair_index(n, a, c)]`` is the join ``ac`` for ``a < c``;
    diagonal joins ``aa = {a}`` are implicit.  Equality and hashing use
    ``(n, pair_joins)`` only.
    """

    n: int
    pair_joins: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _check_n(self.n)
        n = self.n
        if len(self.pair_joins) != pair_count(n):
            raise StructuralError(
                f"expected {pair_count(n)} pair joins for {n} points, got {len(self.pair_joins)}")
        width = full(n)
        table = [[0] * n for _ in range(n)]
        missing = []
        for (a, c), mask in zip(pairs(n), self.pair_joins):
            if not isinstance(mask, int) or mask < 0 or mask & ~width:
                raise StructuralError(f"join ({a}, {c}) is not a subset of the {n} points")
            if not mask >> a & 1:
                missing.append(AxiomViolation("VII", (a, c)))
            if not mask >> c & 1:
                missing.append(AxiomViolation("VII", (c, a)))
            table[a][c] = table[c][a] = mask
        if missing:
            raise JoinAxiomError(missing)
        for a in range(n):
            table[a][a] = 1 << a
        object.__setattr__(self, "rows", tuple(map(tuple, table)))

    @classmethod
    def from_joins(cls, n: int, joins: Mapping[tuple[int, int], int] | Callable[[int, int], int]
                   ) -> "JoinSpace":
        """Build from a mapping or function giving the mask for each pair ``a < c``.

        Pairs missing from a mapping get the minimal join ``{a, c}``.
        """
        get = joins if callable(joins) else (
            lambda a, c: joins.get((a, c), (1 << a) | (1 << c)))
        return cls(n, tuple(get(a, c) for a, c in pairs(n)))

    @classmethod
    def minimal(cls, n: int) -> "JoinSpace":
        """The join space in which every join ``ac`` is just ``{a, c}``."""
        return cls(n, tuple((1 << a) | (1 << c) for a, c in pairs(n)))

    @property
    def points(self) -> range:
        return range(self.n)

    @property
    def universe(self) -> int:
        return full(self.n)

    def join(self, a: int, c: int) -> int:
        if not (0 <= a < self.n and 0 <= c < self.n):
            raise IndexError(f"point out of range for {self.n}-point space: ({a}, {c})")
        return self.rows[a][c]

    def between(self, a: int, b: int, c: int) -> bool:
        """``<a, b, c>``, i.e. ``b`` lies in the join ``ac``."""
        return bool(self.rows[a][c] >> b & 1)

    def point_join(self, a: int, C: int) -> int:
        """``aC``: union of ``ac`` over ``c`` in ``C``."""
        row = self.rows[a]
        out = 0
        for c in members(C):
            out |= row[c]
        return out

    def set_join(self, A: int, C: int) -> int:
        """``AC``: union of ``ac`` over ``a`` in ``A``, ``c`` in ``C``."""
        rows = self.rows
        out = 0
        cs = tuple(members(C))
        for a in members(A):
            row = rows[a]
            for c in cs:
                out |= row[c]
        return out

    def to_relation(self) -> TernaryRelation:
        return TernaryRelation(self.n, tuple(m for row in self.rows for m in row))

    def joins(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(a, c, ac)`` for every unordered pair."""
        for (a, c), mask in zip(pairs(self.n), self.pair_joins):
            yield a, c, mask

    def relabel(self, perm: tuple[int, ...]) -> "JoinSpace":
        """Image under the point map ``i -> perm[i]``."""
        n = self.n
        out = [0] * pair_count(n)
        for a, c, mask in self.joins():
            image = 0
            for b in members(mask):
                image |= 1 << perm[b]
            out[pair_index(n, perm[a], perm[c])] = image
        return JoinSpace(n, tuple(out))


def axiom_violations(t: TernaryRelation) -> list[AxiomViolation]:
    """Every failure of the three join axioms, in ascending witness order.

    ``VII``: ``a`` in ``ac`` for ``a != c`` (witness ``(a, c)``).
    ``VI``: ``ac`` within ``ca`` for ``a != c`` (witness ``(a, c, b)``, ``b`` in ``ac \\ ca``).
    ``diagonal``: ``aa = {a}`` (witness ``(a, b)``; ``b == a`` when ``a`` is missing).
    """
    n = t.n
    out = []
    for a in range(n):
        for c in range(n):
            ac = t.between(a, c)
            if a == c:
                if not ac >> a & 1:
                    out.append(AxiomViolation("diagonal", (a, a)))
                for b in members(ac & ~(1 << a)):
                    out.append(AxiomViolation("diagonal", (a, b)))
                continue
            if not ac >> a & 1:
                out.append(AxiomViolation("VII", (a, c)))
            for b in members(ac & ~t.between(c, a)):
                out.append(AxiomViolation("VI", (a, c, b)))
    return out


def validate(t: TernaryRelation) -> JoinSpace:
    """Return the join space of ``t``; raise :class:`JoinAxiomError` listing all violations."""
    found = axiom_violations(t)
    if found:
        raise JoinAxiomError(found)
    n = t.n
    return JoinSpace(n, tuple(t.between(a, c) for a, c in pairs(n)))


def dependent3(s: JoinSpace, A: int, B: int, C: int) -> bool:
    """``(A, B, C)`` is dependent iff ``A & B`` or ``AB & C`` is non-empty."""
    return bool(A & B) or bool(s.set_join(A, B) & C)


def dependent4(s: JoinSpace, A: int, B: int, C: int, D: int) -> bool:
    if A & B:
        return True
    AB = s.set_join(A, B)
    return bool(AB & C) or bool(s.set_join(AB, C) & D)


def dependent3_points(s: JoinSpace, a: int, b: int, c: int) -> bool:
    return b == a or s.between(a, c, b)


def dependent4_points(s: JoinSpace, a: int, b: int, c: int, d: int) -> bool:
    if b == a:
        return True
    ab = s.rows[a][b]
    return bool(ab >> c & 1) or bool(s.set_join(ab, 1 << c) >> d & 1)
