"""Exhaustive and sampled generation of small join spaces.

A join space on ``n`` points is determined by choosing, for every unordered
pair ``{a, c}``, which of the other ``n - 2`` points join ``ac``.  The
exhaustive stream is an odometer over those choices: pairs in lexicographic
order, the last pair turning fastest, so model ``i`` can be decoded directly
and the index range split between workers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from math import comb
from typing import Iterator

from .relations import JoinSpace, ResourceLimitError, StructuralError, pairs

DEFAULT_MAX_EXHAUSTIVE_N = 4
OVERRIDE_MAX_EXHAUSTIVE_N = 5
DEFAULT_CEILING = 1 << 20
MAX_CANONICAL_N = 8


def count_join_spaces(n: int) -> int:
    """``(2^(n-2))^C(n,2)`` for ``n >= 2``; one space on 0 or 1 points."""
    if n < 2:
        return 1
    return (1 << (n - 2)) ** comb(n, 2)


@dataclass(frozen=True)
class EnumSpec:
    n: int
    mode: str = "exhaustive"
    count: int = 0
    seed: int = 0
    dedup: bool = False
    allow_n5: bool = False
    ceiling: int = DEFAULT_CEILING

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise StructuralError(f"unknown enumeration mode {self.mode!r}")
        if self.n < 0:
            raise StructuralError("n must be non-negative")
        if self.mode == "exhaustive":
            bound = OVERRIDE_MAX_EXHAUSTIVE_N if self.allow_n5 else DEFAULT_MAX_EXHAUSTIVE_N
            if self.n > bound:
                raise ResourceLimitError(
                    f"exhaustive enumeration bounded to n <= {bound}, got {self.n}")
        if self.dedup and self.n > MAX_CANONICAL_N:
            raise ResourceLimitError(f"isomorph rejection bounded to n <= {MAX_CANONICAL_N}")


def _free_points(n: int) -> list[tuple[int, int, list[int]]]:
    return [(a, c, [b for b in range(n) if b != a and b != c]) for a, c in pairs(n)]


def _expand(bits: int, free: list[int]) -> int:
    out = 0
    for i, p in enumerate(free):
        if bits >> i & 1:
            out |= 1 << p
    return out


def join_space_at(n: int, index: int) -> JoinSpace:
    """Model number ``index`` of the exhaustive stream."""
    total = count_join_spaces(n)
    if not 0 <= index < total:
        raise IndexError(f"model index {index} out of range for n={n}")
    slots = _free_points(n)
    radix = 1 << max(n - 2, 0)
    digits = []
    for _ in slots:
        index, d = divmod(index, radix)
        digits.append(d)
    digits.reverse()
    return JoinSpace(n, tuple((1 << a) | (1 << c) | _expand(d, free)
                              for (a, c, free), d in zip(slots, digits)))


def iter_range(n: int, start: int, stop: int) -> Iterator[JoinSpace]:
    """Models ``start <= i < stop`` of the exhaustive stream, in index order."""
    if start >= stop:
        return
    slots = _free_points(n)
    if not slots:
        yield JoinSpace(n, ())
        return
    radix = 1 << (n - 2)
    options = [[(1 << a) | (1 << c) | _expand(d, free) for d in range(radix)]
               for a, c, free in slots]
    digits = []
    i = start
    for _ in slots:
        i, d = divmod(i, radix)
        digits.append(d)
    digits.reverse()
    k = len(slots)
    for _ in range(stop - start):
        yield JoinSpace(n, tuple(options[j][digits[j]] for j in range(k)))
        j = k - 1
        while j >= 0:
            digits[j] += 1
            if digits[j] < radix:
                break
            digits[j] = 0
            j -= 1


def partition_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(total)`` into ``parts`` contiguous, nearly equal ranges."""
    parts = max(1, parts)
    step, extra = divmod(total, parts)
    out = []
    start = 0
    for k in range(parts):
        stop = start + step + (1 if k < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def enumerate_join_spaces(spec: EnumSpec | int) -> Iterator[JoinSpace]:
    """Every join space on ``spec.n`` points (or a seeded sample), in deterministic order."""
    if isinstance(spec, int):
        spec = EnumSpec(spec)
    if spec.mode == "sampled":
        stream: Iterator[JoinSpace] = iter(sample_join_spaces(spec.n, spec.count, spec.seed))
    else:
        total = count_join_spaces(spec.n)
        if total > spec.ceiling:
            raise ResourceLimitError(
                f"{total} models on {spec.n} points exceeds the ceiling {spec.ceiling}")
        stream = iter_range(spec.n, 0, total)
    if not spec.dedup:
        yield from stream
        return
    seen = set()
    for s in stream:
        key = canonical_form(s)
        if key not in seen:
            seen.add(key)
            yield key


def canonical_form(s: JoinSpace) -> JoinSpace:
    """Lexicographically least ``pair_joins`` over all relabelings of the points."""
    if s.n > MAX_CANONICAL_N:
        raise ResourceLimitError(f"canonical form scans n! relabelings; bound is n <= {MAX_CANONICAL_N}")
    best = None
    for perm in permutations(range(s.n)):
        image = s.relabel(perm).pair_joins
        if best is None or image < best:
            best = image
    return JoinSpace(s.n, best if best is not None else ())


def sample_join_spaces(n: int, count: int, seed: int) -> list[JoinSpace]:
    """Each pair join chosen uniformly among the supersets of the pair."""
    rng = random.Random(seed)
    slots = _free_points(n)
    out = []
    for _ in range(count):
        out.append(JoinSpace(n, tuple(
            (1 << a) | (1 << c) | _expand(rng.getrandbits(len(free)) if free else 0, free)
            for a, c, free in slots)))
    return out


def sample_line_join_spaces(n: int, count: int, seed: int) -> list[JoinSpace]:
    """Join spaces whose pair joins are the lines of a random linear space.

    Uniform pair sampling almost never produces an equivalence-relational
    space once ``n >= 5``; this sampler does by construction.  Lines are grown
    greedily: each still-uncovered pair (in random order) starts a line, and
    random points are added while every new pair in the line stays uncovered.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        covered = [[False] * n for _ in range(n)]
        join = {}
        order = list(pairs(n))
        rng.shuffle(order)
        for a, c in order:
            if covered[a][c]:
                continue
            line = [a, c]
            others = [p for p in range(n) if p != a and p != c]
            rng.shuffle(others)
            limit = rng.randint(0, len(others))
            for p in others[:limit]:
                if all(not covered[p][q] for q in line):
                    line.append(p)
            mask = sum(1 << p for p in line)
            for p in line:
                for q in line:
                    covered[p][q] = True
            for p in line:
                for q in line:
                    if p < q:
                        join[(p, q)] = mask
        out.append(JoinSpace.from_joins(n, join))
    return out
