"""Universally quantified propositions about join spaces, as executable checks.

Each function evaluates one proposition over a whole space and returns a
:class:`~joingeom.relations.CheckReport` whose witness, on failure, is the
first input for which the proposition's conclusion fails.  Quantifiers over
subsets run over the full power set for ``n <= EXACT_SUBSET_N`` and over a
seeded random family of subsets otherwise (reports then carry ``exact=False``).
"""

from __future__ import annotations

import random

import numpy as np

from . import axioms
from .criteria import subset_join_table, triple_joins
from .relations import CheckReport, JoinSpace, dependent3, dependent4

EXACT_SUBSET_N = 4


def subset_family(s: JoinSpace, samples: int = 48, seed: int = 0) -> tuple[list[int], bool]:
    """All subsets when small, else empty set, universe, singletons, pair joins and random subsets.

    The flag says whether the family is the whole power set.
    """
    n = s.n
    if n <= EXACT_SUBSET_N:
        return list(range(1 << n)), True
    rng = random.Random(seed)
    fam = {0, s.universe}
    fam.update(1 << p for p in range(n))
    fam.update(s.pair_joins[:samples])
    target = min(2 * n + 2 + 2 * samples, 1 << n)
    while len(fam) < target:
        fam.add(rng.getrandbits(n))
        fam.add(sum(1 << p for p in rng.sample(range(n), rng.randint(1, min(n, 4)))))
    return sorted(fam), len(fam) == 1 << n


def _first(mask: np.ndarray):
    hit = np.argwhere(mask)
    return tuple(int(v) for v in hit[0]) if len(hit) else None


def set_join_laws(s: JoinSpace, samples: int = 48, seed: int = 0) -> dict[str, CheckReport]:
    """Commutativity, ``A`` within ``AB`` for non-empty ``B``, and monotonicity.

    Keys: ``commutative`` (A, B), ``absorbs`` (A, B), ``monotone-left``
    (A, B, C: A within B but AC not within BC), ``monotone-right`` (CA vs CB),
    ``monotone-both`` (A, B, C, D).
    """
    fam, exact = subset_family(s, samples, seed)
    if exact:
        T = subset_join_table(s)
        N = T.shape[0]
        idx = np.arange(N)
        sub = np.array([(A, B) for A in range(N) for B in range(N) if A & ~B == 0])
        SA, SB = sub[:, 0], sub[:, 1]
        out = {
            "commutative": _first(T != T.T),
            "absorbs": _first((idx[:, None] & ~T != 0) & (idx[None, :] != 0)),
            "monotone-left": _first(T[SA] & ~T[SB] != 0),
            "monotone-right": _first(T[:, SA].T & ~T[:, SB].T != 0),
            "monotone-both": _first(T[SA[:, None], SA[None, :]] & ~T[SB[:, None], SB[None, :]] != 0),
        }
        # translate pair indices back to subsets
        if out["monotone-left"] is not None:
            i, C = out["monotone-left"]
            out["monotone-left"] = (int(SA[i]), int(SB[i]), C)
        if out["monotone-right"] is not None:
            i, C = out["monotone-right"]
            out["monotone-right"] = (int(SA[i]), int(SB[i]), C)
        if out["monotone-both"] is not None:
            i, j = out["monotone-both"]
            out["monotone-both"] = (int(SA[i]), int(SB[i]), int(SA[j]), int(SB[j]))
    else:
        out = dict.fromkeys(("commutative", "absorbs", "monotone-left",
                             "monotone-right", "monotone-both"))
        J = {(A, B): s.set_join(A, B) for A in fam for B in fam}
        sub = [(A, B) for A in fam for B in fam if A & ~B == 0]
        for A in fam:
            for B in fam:
                if out["commutative"] is None and J[A, B] != J[B, A]:
                    out["commutative"] = (A, B)
                if out["absorbs"] is None and B and A & ~J[A, B]:
                    out["absorbs"] = (A, B)
        for A, B in sub:
            for C in fam:
                if out["monotone-left"] is None and J[A, C] & ~J[B, C]:
                    out["monotone-left"] = (A, B, C)
                if out["monotone-right"] is None and J[C, A] & ~J[C, B]:
                    out["monotone-right"] = (A, B, C)
            for C, D in sub:
                if out["monotone-both"] is None and J[A, C] & ~J[B, D]:
                    out["monotone-both"] = (A, B, C, D)
    return {k: CheckReport.judge(k, w, exact=exact) for k, w in out.items()}


def nondegenerate_joins(s: JoinSpace) -> CheckReport:
    """``<a, b, c>`` and ``a != b`` imply ``a != c``."""
    for a in range(s.n):
        for b in range(s.n):
            if b != a and s.between(a, b, a):
                return CheckReport("nondegenerate", False, (a, b, a))
    return CheckReport("nondegenerate", True)


def transitivity_forms_agree(s: JoinSpace, samples: int = 48, seed: int = 0) -> CheckReport:
    """The closure and quantifier forms of ``A``-transitivity agree on every ``A``."""
    fam, exact = subset_family(s, samples, seed)
    for A in fam:
        if (axioms.a_transitivity_witness(s, A) is None) != \
                (axioms.a_transitivity_witness_quantified(s, A) is None):
            return CheckReport("transitivity-forms", False, (A,), exact=exact)
    return CheckReport("transitivity-forms", True, exact=exact)


def rejoinability(s: JoinSpace) -> CheckReport:
    """Where ``X`` is ``a``-equivalence-relational and ``b``-symmetric:
    [``d`` in ``a(bc)`` implies ``d`` in ``(ab)c``] iff
    [``(c, b, a, d)`` dependent implies ``(a, b, c, d)`` dependent]."""
    n = s.n
    rows = s.rows
    left, right = triple_joins(s)
    er = [bool(axioms.is_a_equivalence_relational(s, 1 << p)) for p in range(n)]
    sym = [axioms.a_symmetry_witness(s, 1 << p) is None for p in range(n)]

    def dependent(a, b, c, d):
        return b == a or bool(rows[a][b] >> c & 1) or bool(right[a][b][c] >> d & 1)

    for a in range(n):
        if not er[a]:
            continue
        for b in range(n):
            if not sym[b]:
                continue
            for c in range(n):
                for d in range(n):
                    one = not (left[a][b][c] >> d & 1) or bool(right[a][b][c] >> d & 1)
                    two = not dependent(c, b, a, d) or dependent(a, b, c, d)
                    if one != two:
                        return CheckReport("rejoinability", False, (a, b, c, d))
    return CheckReport("rejoinability", True)


def symmetric_base_set(s: JoinSpace, samples: int = 48, seed: int = 0) -> CheckReport:
    """If ``X`` is ``A``-symmetric, ``C`` non-empty and ``(A, B, C)`` dependent,
    then ``(A, C, B)`` is dependent."""
    fam, exact = subset_family(s, samples, seed)
    sym_bases = [A for A in fam if axioms.a_symmetry_witness(s, A) is None]
    if exact:
        T = subset_join_table(s)
        N = T.shape[0]
        idx = np.arange(N)
        for A in sym_bases:
            AB = T[A]
            dep = (A & idx)[:, None] != 0
            dep = dep | ((AB[:, None] & idx[None, :]) != 0)      # (A, B, C) indexed [B, C]
            rev = ((A & idx)[None, :] != 0) | ((AB[None, :] & idx[:, None]) != 0)  # (A, C, B)
            bad = dep & ~rev & (idx[None, :] != 0)
            w = _first(bad)
            if w is not None:
                return CheckReport("symmetric-base-set", False, (A,) + w, exact=True)
        return CheckReport("symmetric-base-set", True, exact=True)
    for A in sym_bases:
        for B in fam:
            for C in fam:
                if C and dependent3(s, A, B, C) and not dependent3(s, A, C, B):
                    return CheckReport("symmetric-base-set", False, (A, B, C), exact=False)
    return CheckReport("symmetric-base-set", True, exact=False)


def quadruple_dependence(s: JoinSpace) -> CheckReport:
    """If ``X`` is ``c``-symmetric: ``(a, b, c, d)`` dependent iff
    ``a = b`` or ``c = d`` or ``ab`` meets ``cd``."""
    n = s.n
    rows = s.rows
    for c in range(n):
        if axioms.a_symmetry_witness(s, 1 << c) is not None:
            continue
        for a in range(n):
            for b in range(n):
                for d in range(n):
                    lhs = dependent4(s, 1 << a, 1 << b, 1 << c, 1 << d)
                    rhs = a == b or c == d or bool(rows[a][b] & rows[c][d])
                    if lhs != rhs:
                        return CheckReport("quadruple-dependence", False, (a, b, c, d))
    return CheckReport("quadruple-dependence", True)


def base_point_conditions(s: JoinSpace, a: int) -> tuple[bool, bool, bool]:
    """(a-equivalence-relational,
    [<a,b,c>, a != b imply ab within ac and <a,c,b>],
    [<a,b,c>, a != b imply ab = ac])."""
    row = s.rows[a]
    two = three = True
    for b in range(s.n):
        if b == a:
            continue
        for c in range(s.n):
            if row[c] >> b & 1:
                if row[b] & ~row[c] or not row[b] >> c & 1:
                    two = False
                if row[b] != row[c]:
                    three = False
    return bool(axioms.is_a_equivalence_relational(s, 1 << a)), two, three


def base_point_criterion(s: JoinSpace) -> CheckReport:
    for a in range(s.n):
        if len(set(base_point_conditions(s, a))) > 1:
            return CheckReport("base-point", False, (a,))
    return CheckReport("base-point", True)


def equivalence_conditions(s: JoinSpace) -> tuple[bool, bool, bool]:
    """(equivalence-relational,
    [<a,b,c>, a != b imply ab = ac],
    [c, d in ab, c != d imply ab = cd])."""
    rows = s.rows
    n = s.n
    two = all(rows[a][b] == rows[a][c]
              for a in range(n) for b in range(n) for c in range(n)
              if b != a and rows[a][c] >> b & 1)
    three = all(rows[a][b] == rows[c][d]
                for a in range(n) for b in range(n) for c in range(n) for d in range(n)
                if c != d and rows[a][b] >> c & 1 and rows[a][b] >> d & 1)
    return bool(axioms.is_equivalence_relational(s)), two, three


def equivalence_criterion(s: JoinSpace) -> CheckReport:
    v = equivalence_conditions(s)
    return CheckReport.judge("equivalence-criterion", v if len(set(v)) > 1 else None)


def battery(s: JoinSpace, samples: int = 48, seed: int = 0) -> list[CheckReport]:
    """Every proposition check on one space."""
    out = list(set_join_laws(s, samples, seed).values())
    out += [
        nondegenerate_joins(s),
        transitivity_forms_agree(s, samples, seed),
        rejoinability(s),
        symmetric_base_set(s, samples, seed),
        quadruple_dependence(s),
        base_point_criterion(s),
        equivalence_criterion(s),
    ]
    return out
