"""Line spaces, their set representation, and the correspondence with
equivalence-relational join spaces.

``iota`` sends a set-represented line structure to its associated join space
(``ac`` is the line through ``a`` and ``c``, ``aa = {a}``); ``lambda_`` sends
an equivalence-relational join space to the set of its pair joins.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .axioms import is_equivalence_relational
from .bitset import full, members, popcount
from .relations import (CheckReport, HypothesisError, JoinSpace, StructuralError,
                        pair_index, pairs)


class LineSpaceError(ValueError):
    def __init__(self, message: str, report: CheckReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class AbstractLineSpace:
    """Points ``0..n-1``, lines ``0..m-1`` and an ``m x n`` incidence matrix.

    ``line_labels`` may carry whatever objects the lines really are (for
    projective spaces, bases of 2-dimensional subspaces); they take no part
    in equality.
    """

    n: int
    m: int
    incidence: tuple[tuple[bool, ...], ...]
    line_labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.incidence) != self.m or any(len(r) != self.n for r in self.incidence):
            raise StructuralError(f"incidence must be {self.m} x {self.n}")

    def incident(self, a: int, y: int) -> bool:
        return self.incidence[y][a]

    def points_on(self, y: int) -> int:
        return sum(1 << a for a, on in enumerate(self.incidence[y]) if on)


@dataclass(frozen=True)
class SetLineStructure:
    """Lines as point masks, kept sorted so that equality is set equality."""

    n: int
    lines: tuple[int, ...]

    def __post_init__(self):
        X = full(self.n)
        canon = tuple(sorted(self.lines))
        if len(set(canon)) != len(canon):
            raise StructuralError("duplicate lines")
        for y in canon:
            if y < 0 or y & ~X:
                raise StructuralError(f"line {y:#x} is not a subset of the {self.n} points")
        object.__setattr__(self, "lines", canon)

    def points_on(self, y: int) -> int:
        return self.lines[y]

    @property
    def m(self) -> int:
        return len(self.lines)

    def line_through(self, a: int, b: int) -> int | None:
        """The unique line through ``a != b``; ``None`` if there is none."""
        both = (1 << a) | (1 << b)
        found = [y for y in self.lines if y & both == both]
        return found[0] if len(found) == 1 else None


LineStructure = Union[AbstractLineSpace, SetLineStructure]


def _line_masks(L: LineStructure) -> list[int]:
    return [L.points_on(y) for y in range(L.m)]


def validate_lines(L: LineStructure) -> CheckReport:
    """Assumptions A1, A2 and the two-points-per-line condition.

    Witnesses: ``("line", y)`` for a line with fewer than two points,
    ``("pair", a, b, k)`` for a pair of distinct points on ``k != 1`` lines.
    """
    masks = _line_masks(L)
    for y, mask in enumerate(masks):
        if popcount(mask) < 2:
            return CheckReport("A1-A2", False, ("line", y))
    count = [0] * (L.n * L.n)
    for mask in masks:
        pts = tuple(members(mask))
        for i, a in enumerate(pts):
            for b in pts[i + 1:]:
                count[a * L.n + b] += 1
    for a, b in pairs(L.n):
        k = count[a * L.n + b]
        if k != 1:
            return CheckReport("A1-A2", False, ("pair", a, b, k))
    return CheckReport("A1-A2", True)


def _require_valid(L: LineStructure) -> None:
    rep = validate_lines(L)
    if not rep:
        raise LineSpaceError(f"not a line structure: {rep.witness}", rep)


def set_represent(L: AbstractLineSpace) -> SetLineStructure:
    """Replace every line by the set of points on it."""
    masks = _line_masks(L)
    if len(set(masks)) != len(masks):
        dup = next(y for y, m in enumerate(masks) if masks.index(m) != y)
        raise LineSpaceError(f"lines {masks.index(masks[dup])} and {dup} carry the same points")
    _require_valid(L)
    return SetLineStructure(L.n, tuple(masks))


def line_table(L: LineStructure) -> list[list[int]]:
    """``t[a][c]`` is the line through ``a, c`` for ``a != c`` and ``{a}`` on the diagonal.

    Assumes a valid line structure.
    """
    n = L.n
    t = [[0] * n for _ in range(n)]
    for mask in _line_masks(L):
        pts = tuple(members(mask))
        for a in pts:
            for c in pts:
                t[a][c] = mask
    for a in range(n):
        t[a][a] = 1 << a
    return t


def iota(L: SetLineStructure) -> JoinSpace:
    _require_valid(L)
    t = line_table(L)
    return JoinSpace(L.n, tuple(t[a][c] for a, c in pairs(L.n)))


def lambda_(s: JoinSpace) -> SetLineStructure:
    """Lines of an equivalence-relational join space; raises :class:`HypothesisError` otherwise."""
    rep = is_equivalence_relational(s)
    if not rep:
        raise HypothesisError(f"join space is not equivalence-relational: {rep.witness}", rep)
    return SetLineStructure(s.n, tuple(set(s.pair_joins)))


def roundtrip_check(x: SetLineStructure | JoinSpace) -> CheckReport:
    """``lambda(iota(L)) == L`` for line structures, ``iota(lambda(s)) == s`` for join spaces."""
    if isinstance(x, SetLineStructure):
        back = lambda_(iota(x))
        diff = sorted(set(back.lines) ^ set(x.lines))
        return CheckReport.judge("lambda-iota", ("line", diff[0]) if diff else None)
    back = iota(lambda_(x))
    for a, c in pairs(x.n):
        i = pair_index(x.n, a, c)
        if back.pair_joins[i] != x.pair_joins[i]:
            return CheckReport("iota-lambda", False, (a, c))
    return CheckReport("iota-lambda", True)


def assumption_a3(L: LineStructure) -> CheckReport:
    """If ``b = c`` or ``a = d`` or ``bc`` meets ``ad``, then ``a = b`` or
    ``c = d`` or ``ab`` meets ``cd``, with joins read off the lines."""
    t = line_table(L)
    n = L.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    premise = b == c or a == d or bool(t[b][c] & t[a][d])
                    if premise and not (a == b or c == d or t[a][b] & t[c][d]):
                        return CheckReport("A3", False, (a, b, c, d))
    return CheckReport("A3", True)


def assumption_e(L: LineStructure) -> CheckReport:
    """Every line carries a third point."""
    for y, mask in enumerate(_line_masks(L)):
        if popcount(mask) < 3:
            return CheckReport("E", False, ("line", y))
    return CheckReport("E", True)


def is_projective_line_space(L: LineStructure) -> CheckReport:
    for check in (validate_lines, assumption_a3, assumption_e):
        rep = check(L)
        if not rep:
            return CheckReport("projective-lines", False, (rep.label,) + tuple(rep.witness))
    return CheckReport("projective-lines", True)


def collinearity_witness(L: LineStructure) -> tuple[int, int, int, int] | None:
    """``a != b``, ``c != d`` on the line ``ab`` but line ``cd`` differs."""
    t = line_table(L)
    n = L.n
    for a, b in pairs(n):
        ab = t[a][b]
        pts = tuple(members(ab))
        for i, c in enumerate(pts):
            for d in pts[i + 1:]:
                if t[c][d] != ab:
                    return a, b, c, d
    return None


def incidence_preserved(L: AbstractLineSpace, R: SetLineStructure) -> bool:
    """``a * y`` iff ``a`` is a member of the ``y``-th represented line, for the
    line order of ``L``."""
    masks = _line_masks(L)
    if sorted(masks) != list(R.lines):
        return False
    return all(L.incident(a, y) == bool(masks[y] >> a & 1)
               for y in range(L.m) for a in range(L.n))
