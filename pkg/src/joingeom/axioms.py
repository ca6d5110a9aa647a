"""Join axioms, relative transitivity/symmetry, and the projectivity axioms.

Every predicate returns a :class:`~joingeom.relations.CheckReport`.  Witness
conventions (all scans are in ascending order, so the witness is the
lexicographically smallest failing tuple):

* ``A``-transitivity: ``(b, x, y)`` with ``y`` in ``Ab``, ``x`` in ``Ay``, ``x`` not in ``Ab``.
* ``A``-symmetry: ``(b, c)`` with ``c`` in ``Ab \\ A`` and ``b`` not in ``Ac``.
* Postulato X: ``(a, b, c)`` with ``<a, b, c>`` and ``ab`` not within ``ac``.
* Postulato IX: ``(a, b, c)`` with ``<a, b, c>``, ``a != b`` and not ``<a, c, b>``.
* Postulato XII: ``(a, b, c, d)``.
* Conjunctions prefix the failing part's label, e.g. ``("IX", 0, 1, 2)``.
"""

from __future__ import annotations

from typing import Callable

from .bitset import lowest, members
from .closure import join_closed_witness
from .relations import CheckReport, JoinSpace


def a_join(s: JoinSpace, A: int, b: int) -> int:
    """``Ab = {x | <A, x, b>}``."""
    rows = s.rows
    out = 0
    for a in members(A):
        out |= rows[a][b]
    return out


def a_transitivity_witness(s: JoinSpace, A: int) -> tuple[int, int, int] | None:
    """Closure form: ``A(Ab)`` within ``Ab`` for every ``b``."""
    n = s.n
    col = [a_join(s, A, y) for y in range(n)]
    for b in range(n):
        Ab = col[b]
        grown = 0
        for y in members(Ab):
            grown |= col[y]
        extra = grown & ~Ab
        if extra:
            x = lowest(extra)
            y = next(y for y in members(Ab) if col[y] >> x & 1)
            return b, x, y
    return None


def a_transitivity_witness_quantified(s: JoinSpace, A: int) -> tuple[int, int, int] | None:
    """Quantifier form: ``<A, x, y>`` and ``<A, y, z>`` imply ``<A, x, z>`` on all of X.

    Evaluates the ternary predicate point by point, without set joins; the
    returned ``(z, x, y)`` matches the closure form's ``(b, x, y)``.
    """
    n = s.n
    base = tuple(members(A))

    def rel(x: int, y: int) -> bool:
        return any(s.between(a, x, y) for a in base)

    for z in range(n):
        for x in range(n):
            if rel(x, z):
                continue
            for y in range(n):
                if rel(x, y) and rel(y, z):
                    return z, x, y
    return None


def is_a_transitive(s: JoinSpace, A: int, method: str = "closure") -> CheckReport:
    finders = {"closure": a_transitivity_witness,
               "quantifier": a_transitivity_witness_quantified}
    if method not in finders:
        raise ValueError(f"unknown method {method!r}")
    finder = finders[method]
    return CheckReport.judge("A-transitive", finder(s, A))


def a_symmetry_witness(s: JoinSpace, A: int) -> tuple[int, int] | None:
    col = [a_join(s, A, y) for y in range(s.n)]
    for b in range(s.n):
        for c in members(col[b] & ~A):
            if not col[c] >> b & 1:
                return b, c
    return None


def is_a_symmetric(s: JoinSpace, A: int) -> CheckReport:
    return CheckReport.judge("A-symmetric", a_symmetry_witness(s, A))


def is_a_equivalence_relational(s: JoinSpace, A: int) -> CheckReport:
    w = a_transitivity_witness(s, A)
    if w is not None:
        return CheckReport("A-equivalence-relational", False, ("A-transitive",) + w)
    w = a_symmetry_witness(s, A)
    if w is not None:
        return CheckReport("A-equivalence-relational", False, ("A-symmetric",) + w)
    return CheckReport("A-equivalence-relational", True)


def a_equivalence_by_restriction(s: JoinSpace, A: int) -> bool:
    """``<A, ., .>`` restricted to ``X \\ A`` is reflexive, symmetric and transitive.

    Implied by :func:`is_a_equivalence_relational` for non-empty ``A``, and
    equivalent to it for singletons.  Chains through points of ``A`` are not
    seen here, so for larger ``A`` the restricted relation can be transitive
    while ``A(Ab)`` escapes ``Ab``.  For ``A`` empty the relation is empty,
    hence not reflexive on a non-empty ``X``.
    """
    rest = [p for p in range(s.n) if not A >> p & 1]
    base = tuple(members(A))

    def rel(x: int, y: int) -> bool:
        return any(s.between(a, x, y) for a in base)

    for x in rest:
        if not rel(x, x):
            return False
        for y in rest:
            if rel(x, y) != rel(y, x):
                return False
            if rel(x, y):
                if any(rel(y, z) and not rel(x, z) for z in rest):
                    return False
    return True


def transitivity_witness(s: JoinSpace) -> tuple[int, int, int] | None:
    rows = s.rows
    for a in range(s.n):
        row = rows[a]
        for c in range(s.n):
            ac = row[c]
            for b in members(ac):
                if row[b] & ~ac:
                    return a, b, c
    return None


def symmetry_witness(s: JoinSpace) -> tuple[int, int, int] | None:
    rows = s.rows
    for a in range(s.n):
        row = rows[a]
        for c in range(s.n):
            for b in members(row[c] & ~(1 << a)):
                if not row[b] >> c & 1:
                    return a, b, c
    return None


def is_transitive(s: JoinSpace) -> CheckReport:
    """Postulato X: ``<a, b, c>`` implies ``ab`` within ``ac``."""
    return CheckReport.judge("X", transitivity_witness(s))


def is_symmetric(s: JoinSpace) -> CheckReport:
    """Postulato IX: ``<a, b, c>`` and ``a != b`` imply ``<a, c, b>``."""
    return CheckReport.judge("IX", symmetry_witness(s))


def is_equivalence_relational(s: JoinSpace) -> CheckReport:
    w = transitivity_witness(s)
    if w is not None:
        return CheckReport("equivalence-relational", False, ("X",) + w)
    w = symmetry_witness(s)
    if w is not None:
        return CheckReport("equivalence-relational", False, ("IX",) + w)
    return CheckReport("equivalence-relational", True)


def pair_join_bases(s: JoinSpace):
    """Yield ``(a, b, ab)`` for all ``a <= b``, diagonal singletons included."""
    rows = s.rows
    for a in range(s.n):
        for b in range(a, s.n):
            yield a, b, rows[a][b]


def _over_pair_joins(s: JoinSpace, label: str,
                     check: Callable[[JoinSpace, int], CheckReport | tuple | None]) -> CheckReport:
    seen: dict[int, tuple | None] = {}
    for a, b, A in pair_join_bases(s):
        if A not in seen:
            seen[A] = check(s, A)
        w = seen[A]
        if isinstance(w, CheckReport):
            w = w.witness
        if w is not None:
            return CheckReport(label, False, (a, b) + tuple(w))
    return CheckReport(label, True)


def is_join_transitive(s: JoinSpace) -> CheckReport:
    """``X`` is ``ab``-transitive for all ``a, b`` (``a == b`` included)."""
    return _over_pair_joins(s, "join-transitive", a_transitivity_witness)


def is_join_equivalence_relational(s: JoinSpace) -> CheckReport:
    return _over_pair_joins(s, "join-equivalence-relational", is_a_equivalence_relational)


def postulate_xii_witness(s: JoinSpace) -> tuple[int, int, int, int] | None:
    """If ``b = c`` or ``a = d`` or ``bc`` meets ``ad``, then ``a = b`` or
    ``c = d`` or ``ab`` meets ``cd``."""
    n = s.n
    rows = s.rows
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            if b == a:
                continue
            ab = ra[b]
            rb = rows[b]
            for c in range(n):
                rc = rows[c]
                for d in range(n):
                    if d == c or ab & rc[d]:
                        continue
                    if b == c or a == d or rb[c] & ra[d]:
                        return a, b, c, d
    return None


def postulate_xii(s: JoinSpace) -> CheckReport:
    return CheckReport.judge("XII", postulate_xii_witness(s))


def is_preprojective(s: JoinSpace) -> CheckReport:
    er = is_equivalence_relational(s)
    if not er:
        return CheckReport("preprojective", False, er.witness)
    w = postulate_xii_witness(s)
    if w is not None:
        return CheckReport("preprojective", False, ("XII",) + w)
    return CheckReport("preprojective", True)


def density_witness(s: JoinSpace) -> tuple[int, int] | None:
    for a, c, ac in s.joins():
        if not ac & ~((1 << a) | (1 << c)):
            return a, c
    return None


def is_dense(s: JoinSpace) -> CheckReport:
    """Postulato VIII: every join of two distinct points has a third point."""
    return CheckReport.judge("VIII", density_witness(s))


def is_projective(s: JoinSpace) -> CheckReport:
    pre = is_preprojective(s)
    if not pre:
        return CheckReport("projective", False, ("preprojective",) + tuple(pre.witness))
    w = density_witness(s)
    if w is not None:
        return CheckReport("projective", False, ("VIII",) + w)
    return CheckReport("projective", True)


def is_proper(s: JoinSpace) -> CheckReport:
    """Every pair join is join-closed; witness ``(a, c, p, q, x)``."""
    for a, c, ac in s.joins():
        w = join_closed_witness(s, ac)
        if w is not None:
            return CheckReport("proper", False, (a, c) + w)
    return CheckReport("proper", True)


def postulate_vi(s: JoinSpace) -> CheckReport:
    """``ac`` within ``ca``; structural for a :class:`JoinSpace` but still evaluated."""
    rows = s.rows
    for a in range(s.n):
        for c in range(s.n):
            if a != c:
                extra = rows[a][c] & ~rows[c][a]
                if extra:
                    return CheckReport("VI", False, (a, c, lowest(extra)))
    return CheckReport("VI", True)


def postulate_vii(s: JoinSpace) -> CheckReport:
    rows = s.rows
    for a in range(s.n):
        for c in range(s.n):
            if a != c and not rows[a][c] >> a & 1:
                return CheckReport("VII", False, (a, c))
    return CheckReport("VII", True)


def diagonal_axiom(s: JoinSpace) -> CheckReport:
    for a in range(s.n):
        if s.rows[a][a] != 1 << a:
            return CheckReport("diagonal", False, (a,))
    return CheckReport("diagonal", True)


AXIOMS: dict[str, Callable[[JoinSpace], CheckReport]] = {
    "VI": postulate_vi,
    "VII": postulate_vii,
    "diagonal": diagonal_axiom,
    "X": is_transitive,
    "IX": is_symmetric,
    "XII": postulate_xii,
    "VIII": is_dense,
    "transitive": is_transitive,
    "symmetric": is_symmetric,
    "equivalence-relational": is_equivalence_relational,
    "preprojective": is_preprojective,
    "dense": is_dense,
    "projective": is_projective,
    "proper": is_proper,
    "join-transitive": is_join_transitive,
    "join-equivalence-relational": is_join_equivalence_relational,
}
