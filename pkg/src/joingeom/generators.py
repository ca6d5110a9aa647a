"""Concrete model families: affine and projective spaces over prime fields,
lattice line-segment spaces, and the minimal join space."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .bitset import from_points
from .linespace import AbstractLineSpace, iota, set_represent
from .relations import MAX_POINTS, JoinSpace, ResourceLimitError, StructuralError, pairs


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"field size must be prime, got {self.p!r}")

    @property
    def elements(self) -> range:
        return range(self.p)

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(x, -1, self.p)


def _field(p: int | PrimeField) -> PrimeField:
    return p if isinstance(p, PrimeField) else PrimeField(p)


def _size_guard(count: int, what: str, max_points: int) -> None:
    if count > max_points:
        raise ResourceLimitError(f"{what} has {count} points; bound is {max_points}")


def affine_points(p: int, d: int) -> list[tuple[int, ...]]:
    """Vectors of ``F_p^d`` in lexicographic order; a point's index is its position."""
    return list(product(range(p), repeat=d))


def affine_join_space(p: int | PrimeField, d: int, max_points: int = MAX_POINTS) -> JoinSpace:
    """``<x, y, z>`` iff ``y = x + t (z - x)`` for some ``t`` in ``F_p``."""
    F = _field(p)
    if d < 0:
        raise StructuralError("dimension must be non-negative")
    _size_guard(F.p ** d, f"AG({d},{F.p})", max_points)
    pts = affine_points(F.p, d)
    index = {v: i for i, v in enumerate(pts)}

    def line(i: int, j: int) -> int:
        x, z = pts[i], pts[j]
        diff = [F.sub(zk, xk) for xk, zk in zip(x, z)]
        return from_points(index[tuple(F.add(xk, F.mul(t, dk)) for xk, dk in zip(x, diff))]
                           for t in F.elements)

    return JoinSpace(len(pts), tuple(line(a, c) for a, c in pairs(len(pts))))


def normalize(v: tuple[int, ...], F: PrimeField) -> tuple[int, ...]:
    """Scale so that the first non-zero coordinate is 1."""
    lead = next(x for x in v if x)
    k = F.inv(lead)
    return tuple(F.mul(k, x) for x in v)


def rref(rows: list[tuple[int, ...]], F: PrimeField) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form over ``F_p`` with zero rows dropped."""
    m = [list(r) for r in rows]
    width = len(m[0]) if m else 0
    lead_row = 0
    for col in range(width):
        pivot = next((r for r in range(lead_row, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[lead_row], m[pivot] = m[pivot], m[lead_row]
        k = F.inv(m[lead_row][col])
        m[lead_row] = [F.mul(k, x) for x in m[lead_row]]
        for r in range(len(m)):
            if r != lead_row and m[r][col]:
                f = m[r][col]
                m[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[r], m[lead_row])]
        lead_row += 1
    return tuple(tuple(r) for r in m[:lead_row])


def projective_points(p: int, d: int) -> list[tuple[int, ...]]:
    """Normalized representatives of the 1-dimensional subspaces of ``F_p^(d+1)``, lex order."""
    F = _field(p)
    return [v for v in product(range(F.p), repeat=d + 1) if any(v) and normalize(v, F) == v]


def projective_line_space(p: int | PrimeField, d: int,
                          max_points: int = MAX_POINTS) -> AbstractLineSpace:
    """Points: 1-dimensional subspaces; lines: 2-dimensional subspaces; ``a * y`` iff ``a`` lies in ``y``.

    Lines are labelled by the RREF basis of the subspace, not by point sets.
    """
    F = _field(p)
    if d < 0:
        raise StructuralError("dimension must be non-negative")
    count = (F.p ** (d + 1) - 1) // (F.p - 1)
    _size_guard(count, f"PG({d},{F.p})", max_points)
    pts = projective_points(F.p, d)
    planes: dict[tuple, None] = {}
    for i, j in pairs(len(pts)):
        planes.setdefault(rref([pts[i], pts[j]], F))
    lines = sorted(planes)

    def contains(basis: tuple, v: tuple[int, ...]) -> bool:
        return len(rref(list(basis) + [v], F)) == len(basis)

    incidence = tuple(tuple(contains(y, v) for v in pts) for y in lines)
    return AbstractLineSpace(len(pts), len(lines), incidence, tuple(lines))


def projective_space(p: int | PrimeField, d: int,
                     max_points: int = MAX_POINTS) -> tuple[AbstractLineSpace, JoinSpace]:
    L = projective_line_space(p, d, max_points)
    return L, iota(set_represent(L))


@dataclass(frozen=True)
class GridSpec:
    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise StructuralError("grid sides must be positive")

    def points(self) -> list[tuple[int, int]]:
        """Lattice points ``(x, y)`` in lexicographic order."""
        return [(x, y) for x in range(self.width) for y in range(self.height)]


def on_segment(a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> bool:
    """``b`` on the closed segment from ``a`` to ``c``, in exact integer arithmetic."""
    cross = (c[0] - a[0]) * (b[1] - a[1]) - (c[1] - a[1]) * (b[0] - a[0])
    return (cross == 0
            and min(a[0], c[0]) <= b[0] <= max(a[0], c[0])
            and min(a[1], c[1]) <= b[1] <= max(a[1], c[1]))


def grid_segment_space(g: GridSpec | tuple[int, int], max_points: int = MAX_POINTS) -> JoinSpace:
    """Joins are the lattice points of closed segments."""
    if not isinstance(g, GridSpec):
        g = GridSpec(*g)
    _size_guard(g.width * g.height, f"{g.width}x{g.height} grid", max_points)
    pts = g.points()
    return JoinSpace(len(pts), tuple(
        from_points(k for k, q in enumerate(pts) if on_segment(pts[a], q, pts[c]))
        for a, c in pairs(len(pts))))


def minimal_join_space(n: int) -> JoinSpace:
    return JoinSpace.minimal(n)
