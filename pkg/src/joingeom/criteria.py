"""Condition vectors for the equivalence theorems on join spaces.

Each ``*_vector`` function evaluates every condition of one theorem
independently and returns a :class:`~joingeom.relations.ConditionVector`;
the theorem holds on the space when all verdicts are equal.
"""

from __future__ import annotations

import random

import numpy as np

from . import axioms
from .bitset import full, lowest, members
from .closure import (exchange_witness, iter_join_closed, join_closed_witness, join_closure)
from .relations import (CheckReport, ConditionVector, JoinSpace, ResourceLimitError)

# power-set conditions run exactly up to this size unless asked otherwise
DEFAULT_EXACT_N = 4
MAX_EXACT_N = 7
DEFAULT_SAMPLES = 2000


def subset_join_table(s: JoinSpace) -> np.ndarray:
    """``T[A, C]`` is the set join ``AC`` for all subsets ``A, C``."""
    n = s.n
    N = 1 << n
    point_rows = []
    for a in range(n):
        row = s.rows[a]
        out = [0] * N
        for C in range(1, N):
            low = C & -C
            out[C] = out[C ^ low] | row[low.bit_length() - 1]
        point_rows.append(out)
    table = [[0] * N]
    for A in range(1, N):
        low = A & -A
        prev = table[A ^ low]
        add = point_rows[low.bit_length() - 1]
        table.append([x | y for x, y in zip(prev, add)])
    return np.array(table, dtype=np.int64)


def _exact_mode(n: int, exact: bool | None) -> bool:
    if exact is None:
        return n <= DEFAULT_EXACT_N
    if exact and n > MAX_EXACT_N:
        raise ResourceLimitError(
            f"exact power-set evaluation on {n} points needs 2^{3 * n} subset triples; "
            f"bound is n <= {MAX_EXACT_N}")
    return exact


def _sampled_triples(s: JoinSpace, samples: int, seed: int):
    """All point triples, then ``samples`` seeded triples of small random subsets."""
    n = s.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                yield 1 << a, 1 << b, 1 << c
    rng = random.Random(seed)
    pts = list(range(n))
    for _ in range(samples):
        yield tuple(sum(1 << p for p in rng.sample(pts, rng.randint(0, min(n, 3))))
                    for _ in range(3))


def associativity_witness(s: JoinSpace, exact: bool, samples: int = DEFAULT_SAMPLES,
                          seed: int = 0) -> tuple[int, int, int] | None:
    if exact:
        T = subset_join_table(s)
        bad = np.argwhere(T[T] != T[:, T])
        return tuple(int(v) for v in bad[0]) if len(bad) else None
    for A, B, C in _sampled_triples(s, samples, seed):
        if s.set_join(s.set_join(A, B), C) != s.set_join(A, s.set_join(B, C)):
            return A, B, C
    return None


def commutativity_witness(s: JoinSpace, exact: bool, samples: int = DEFAULT_SAMPLES,
                          seed: int = 0) -> tuple[int, int] | None:
    if exact:
        T = subset_join_table(s)
        bad = np.argwhere(T != T.T)
        return tuple(int(v) for v in bad[0]) if len(bad) else None
    for A, B, _ in _sampled_triples(s, samples, seed):
        if s.set_join(A, B) != s.set_join(B, A):
            return A, B
    return None


def triple_joins(s: JoinSpace) -> tuple[list, list]:
    """``left[a][b][c] = a(bc)`` and ``right[a][b][c] = (ab)c``."""
    n = s.n
    rows = s.rows
    left = [[[s.point_join(a, rows[b][c]) for c in range(n)] for b in range(n)] for a in range(n)]
    right = [[[s.point_join(c, rows[a][b]) for c in range(n)] for b in range(n)] for a in range(n)]
    return left, right


def _inclusion_witness(left, right, n: int):
    for a in range(n):
        for b in range(n):
            for c in range(n):
                extra = left[a][b][c] & ~right[a][b][c]
                if extra:
                    return a, b, c, lowest(extra)
    return None


def _equality_witness(left, right, n: int):
    for a in range(n):
        for b in range(n):
            for c in range(n):
                diff = left[a][b][c] ^ right[a][b][c]
                if diff:
                    return a, b, c, lowest(diff)
    return None


def _closed_list(s: JoinSpace, max_closed_n: int | None) -> list[int]:
    return list(iter_join_closed(s, max_closed_n))


def thm_join_transitivity_vector(s: JoinSpace, *, exact: bool | None = None,
                                 samples: int = DEFAULT_SAMPLES, seed: int = 0,
                                 max_closed_n: int | None = None) -> ConditionVector:
    """Nine conditions, the first being join-transitivity.

    (4) and (5) quantify over the power set: exactly when ``exact`` (default:
    ``n <= DEFAULT_EXACT_N``), otherwise over all point triples plus seeded
    random subset triples, in which case their reports carry ``exact=False``.
    (6) and (7) enumerate all join-closed sets and obey ``max_closed_n``.
    """
    n = s.n
    exact = _exact_mode(n, exact)
    left, right = triple_joins(s)
    closed = _closed_list(s, max_closed_n)
    reports = []

    reports.append(axioms.is_join_transitive(s).relabel("1"))
    reports.append(CheckReport.judge("2", _inclusion_witness(left, right, n)))
    reports.append(CheckReport.judge("3", _equality_witness(left, right, n)))

    w = associativity_witness(s, exact, samples, seed)
    reports.append(CheckReport.judge("4", w, exact=exact))
    if w is not None:
        w5 = ("associative",) + w
    else:
        wc = commutativity_witness(s, exact, samples, seed)
        w5 = None if wc is None else ("commutative",) + wc
    reports.append(CheckReport.judge("5", w5, exact=exact))

    w6 = None
    proper = axioms.is_proper(s)
    if not proper:
        w6 = ("proper",) + proper.witness
    else:
        for A in closed:
            wt = axioms.a_transitivity_witness(s, A)
            if wt is not None:
                w6 = ("A-transitive", A) + wt
                break
    reports.append(CheckReport.judge("6", w6))

    w7 = None
    for A in closed:
        for C in closed:
            wc = join_closed_witness(s, s.set_join(A, C))
            if wc is not None:
                w7 = (A, C) + wc
                break
        if w7:
            break
    reports.append(CheckReport.judge("7", w7))

    w8 = w9 = None
    for a in range(n):
        for b in range(n):
            for c in range(n):
                abc = right[a][b][c]
                if w8 is None:
                    wc = join_closed_witness(s, abc)
                    if wc is not None:
                        w8 = (a, b, c) + wc
                if w9 is None and join_closure(s, (1 << a) | (1 << b) | (1 << c)) != abc:
                    w9 = (a, b, c)
    reports.append(CheckReport.judge("8", w8))
    reports.append(CheckReport.judge("9", w9))
    return ConditionVector("join-transitivity criterion", tuple(reports))


def quadruple_reversal_witness(s: JoinSpace) -> tuple[int, int, int, int] | None:
    """First ``(a, b, c, d)`` with ``(c, b, a, d)`` dependent but ``(a, b, c, d)`` not."""
    n = s.n
    rows = s.rows
    _, right = triple_joins(s)

    def dependent(a, b, c, d):
        return b == a or bool(rows[a][b] >> c & 1) or bool(right[a][b][c] >> d & 1)

    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if dependent(c, b, a, d) and not dependent(a, b, c, d):
                        return a, b, c, d
    return None


def thm_join_equivalence_vector(s: JoinSpace) -> ConditionVector:
    """Five conditions, meaningful for equivalence-relational spaces.

    When the hypothesis fails the conditions are still evaluated and the
    vector is flagged; its agreement is then not claimed.
    """
    hyp = bool(axioms.is_equivalence_relational(s))
    left, right = triple_joins(s)
    reports = (
        axioms.is_join_equivalence_relational(s).relabel("1"),
        axioms.is_join_transitive(s).relabel("2"),
        CheckReport.judge("3", _inclusion_witness(left, right, s.n)),
        CheckReport.judge("4", quadruple_reversal_witness(s)),
        axioms.is_preprojective(s).relabel("5"),
    )
    if not hyp:
        reports = tuple(r.relabel(r.label, hypothesis_met=False) for r in reports)
    return ConditionVector("join-equivalence-relationality criterion", reports, hyp)


def matroid_criterion_vector(s: JoinSpace, max_closed_n: int | None = None) -> ConditionVector:
    """Four conditions, meaningful for join-transitive spaces."""
    hyp = bool(axioms.is_join_transitive(s))
    w = exchange_witness(s, max_closed_n)
    reports = (
        axioms.is_symmetric(s).relabel("1"),
        axioms.is_join_equivalence_relational(s).relabel("2"),
        CheckReport.judge("3", w),
        CheckReport.judge("4", w),
    )
    if not hyp:
        reports = tuple(r.relabel(r.label, hypothesis_met=False) for r in reports)
    return ConditionVector("matroid criterion", reports, hyp)


def entailment_reverse_check(s: JoinSpace, max_closed_n: int | None = None) -> CheckReport:
    """``y`` in ``jc(A + x)`` iff ``<A, y, x>``, for every non-empty join-closed ``A``.

    ``A`` empty is excluded: ``<{}, ., .>`` is the empty relation while
    ``x |- x`` always holds.  Witness ``(A, x, y)``.
    """
    hyp = bool(axioms.is_join_transitive(s))
    X = full(s.n)
    for A in _closed_list(s, max_closed_n):
        if not A:
            continue
        for x in range(s.n):
            hull = join_closure(s, A | 1 << x)
            Ax = axioms.a_join(s, A, x)
            diff = (hull ^ Ax) & X
            if diff:
                return CheckReport("entailment-reverse", False, (A, x, lowest(diff)),
                                   hypothesis_met=hyp)
    return CheckReport("entailment-reverse", True, hypothesis_met=hyp)


def projectivity_identity(s: JoinSpace) -> tuple[bool, bool]:
    """(projective, dense and join-equivalence-relational)."""
    return (bool(axioms.is_projective(s)),
            bool(axioms.is_dense(s)) and bool(axioms.is_join_equivalence_relational(s)))


def matroid_preprojectivity_identity(s: JoinSpace, max_closed_n: int | None = None
                                     ) -> tuple[bool, bool]:
    """(preprojective, join-transitive and matroid)."""
    jt = bool(axioms.is_join_transitive(s))
    return (bool(axioms.is_preprojective(s)),
            jt and exchange_witness(s, max_closed_n) is None)


def matroid_projectivity_identity(s: JoinSpace, max_closed_n: int | None = None
                                  ) -> tuple[bool, bool]:
    """(projective, dense and join-transitive and matroid)."""
    rhs = (bool(axioms.is_dense(s)) and bool(axioms.is_join_transitive(s))
           and exchange_witness(s, max_closed_n) is None)
    return bool(axioms.is_projective(s)), rhs
