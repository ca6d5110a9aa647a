"""Run one theorem over a scope of join spaces and collect disagreements."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

from . import axioms, criteria
from .enumeration import count_join_spaces, iter_range, partition_ranges
from .linespace import is_projective_line_space, iota, lambda_
from .relations import JoinSpace


class Outcome(NamedTuple):
    applicable: bool
    agree: bool
    verdicts: tuple


VECTOR_OPTS = ("exact", "samples", "seed", "max_closed_n")


def _pick(opts: dict, keys: tuple[str, ...]) -> dict:
    return {k: opts[k] for k in keys if k in opts}


def _vector(fn, keys: tuple[str, ...] = ()):
    def run(s: JoinSpace, opts: dict) -> Outcome:
        v = fn(s, **_pick(opts, keys))
        return Outcome(v.hypothesis_met, v.agree, v.verdicts)
    return run


def _identity(fn, keys: tuple[str, ...] = ()):
    def run(s: JoinSpace, opts: dict) -> Outcome:
        lhs, rhs = fn(s, **_pick(opts, keys))
        return Outcome(True, lhs == rhs, (lhs, rhs))
    return run


def _correspondence(s: JoinSpace, opts: dict) -> Outcome:
    if not axioms.is_equivalence_relational(s):
        return Outcome(False, True, ())
    L = lambda_(s)
    back = iota(L)
    forth = lambda_(back)
    proj = bool(axioms.is_projective(s))
    proj_lines = bool(is_projective_line_space(L))
    verdicts = (back == s, forth == L, proj, proj_lines)
    return Outcome(True, back == s and forth == L and proj == proj_lines, verdicts)


CLOSED = ("max_closed_n",)

THEOREMS: dict[str, Callable[[JoinSpace, dict], Outcome]] = {
    "thm-join-transitivity": _vector(criteria.thm_join_transitivity_vector, VECTOR_OPTS),
    "thm-join-equiv": _vector(criteria.thm_join_equivalence_vector),
    "cor-projectivity": _identity(criteria.projectivity_identity),
    "thm-matroid": _vector(criteria.matroid_criterion_vector, CLOSED),
    "cor-matroid-pre": _identity(criteria.matroid_preprojectivity_identity, CLOSED),
    "cor-matroid-proj": _identity(criteria.matroid_projectivity_identity, CLOSED),
    "thm-correspondence": _correspondence,
}


@dataclass
class VerifyResult:
    theorem: str
    scanned: int = 0
    applicable: int = 0
    disagreements: int = 0
    first_disagreement: JoinSpace | None = None
    first_index: int | None = None
    first_verdicts: tuple | None = None
    elapsed: float = 0.0
    patterns: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0

    def merge(self, other: "VerifyResult") -> None:
        """Fold in a result covering later models."""
        self.scanned += other.scanned
        self.applicable += other.applicable
        self.disagreements += other.disagreements
        if self.first_disagreement is None and other.first_disagreement is not None:
            self.first_disagreement = other.first_disagreement
            self.first_index = other.first_index
            self.first_verdicts = other.first_verdicts
        for k, v in other.patterns.items():
            self.patterns[k] = self.patterns.get(k, 0) + v


def verify(theorem: str, spaces: Iterable[JoinSpace], offset: int = 0, **opts) -> VerifyResult:
    """Evaluate ``theorem`` on every space; ``offset`` numbers the first one."""
    check = THEOREMS[theorem]
    res = VerifyResult(theorem)
    t0 = time.perf_counter()
    for i, s in enumerate(spaces, offset):
        res.scanned += 1
        out = check(s, opts)
        if not out.applicable:
            continue
        res.applicable += 1
        res.patterns[out.verdicts] = res.patterns.get(out.verdicts, 0) + 1
        if not out.agree:
            res.disagreements += 1
            if res.first_disagreement is None:
                res.first_disagreement, res.first_index, res.first_verdicts = s, i, out.verdicts
    res.elapsed = time.perf_counter() - t0
    return res


def _verify_range(theorem: str, n: int, start: int, stop: int, opts: dict) -> VerifyResult:
    return verify(theorem, iter_range(n, start, stop), offset=start, **opts)


def verify_exhaustive(theorem: str, n: int, jobs: int = 1, **opts) -> VerifyResult:
    """All join spaces on ``n`` points, optionally split across ``jobs`` processes.

    Partial results are merged in index order, so the reported first
    disagreement does not depend on ``jobs``.
    """
    if theorem not in THEOREMS:
        raise KeyError(theorem)
    total = count_join_spaces(n)
    t0 = time.perf_counter()
    if jobs <= 1:
        res = _verify_range(theorem, n, 0, total, opts)
    else:
        ranges = partition_ranges(total, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_verify_range, [theorem] * len(ranges), [n] * len(ranges),
                                  [a for a, _ in ranges], [b for _, b in ranges],
                                  [opts] * len(ranges)))
        res = VerifyResult(theorem)
        for part in parts:
            res.merge(part)
    res.elapsed = time.perf_counter() - t0
    return res
