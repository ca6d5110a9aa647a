"""Naive reference implementations over frozensets, written from the definitions.

Nothing here reuses the package's predicates; only ``JoinSpace.join`` is read
to get the raw pair joins.
"""

from __future__ import annotations

from itertools import combinations, product


def subsets(n):
    pts = range(n)
    for k in range(n + 1):
        for c in combinations(pts, k):
            yield frozenset(c)


def mask(A) -> int:
    return sum(1 << p for p in A)


def unmask(m: int) -> frozenset:
    return frozenset(i for i in range(m.bit_length()) if m >> i & 1)


class Naive:
    def __init__(self, s):
        self.n = s.n
        self.X = frozenset(range(s.n))
        self.J = {(a, c): unmask(s.join(a, c)) for a in range(s.n) for c in range(s.n)}

    # joins
    def sj(self, A, C) -> frozenset:
        out = set()
        for a in A:
            for c in C:
                out |= self.J[a, c]
        return frozenset(out)

    def bet(self, A, b, c) -> bool:
        """<A, b, c>: some a in A with b in ac."""
        return any(b in self.J[a, c] for a in A)

    # relative properties
    def a_transitive(self, A) -> bool:
        """<A, ., .> transitive on all of X."""
        X = self.X
        return all(self.bet(A, x, z) for x in X for y in X for z in X
                   if self.bet(A, x, y) and self.bet(A, y, z))

    def a_transitive_restricted(self, A) -> bool:
        """<A, ., .> transitive on X minus A; weaker once A has two points."""
        rest = self.X - A
        return all(self.bet(A, x, z) for x in rest for y in rest for z in rest
                   if self.bet(A, x, y) and self.bet(A, y, z))

    def a_symmetric(self, A) -> bool:
        rest = self.X - A
        return all(self.bet(A, c, b) for b in rest for c in rest if self.bet(A, b, c))

    def a_er(self, A) -> bool:
        return self.a_transitive(A) and self.a_symmetric(A)

    def transitive(self) -> bool:
        return all(self.a_transitive(frozenset([a])) for a in self.X)

    def symmetric(self) -> bool:
        return all(self.a_symmetric(frozenset([a])) for a in self.X)

    def er(self) -> bool:
        return self.transitive() and self.symmetric()

    def join_transitive(self) -> bool:
        return all(self.a_transitive(self.J[a, b]) for a in self.X for b in self.X)

    def join_er(self) -> bool:
        return all(self.a_er(self.J[a, b]) for a in self.X for b in self.X)

    # projective axioms, literally
    def xii(self) -> bool:
        for a, b, c, d in product(self.X, repeat=4):
            if b == c or a == d or self.J[b, c] & self.J[a, d]:
                if not (a == b or c == d or self.J[a, b] & self.J[c, d]):
                    return False
        return True

    def dense(self) -> bool:
        return all(self.J[a, b] - {a, b} for a in self.X for b in self.X if a != b)

    def preprojective(self) -> bool:
        return self.er() and self.xii()

    def projective(self) -> bool:
        return self.preprojective() and self.dense()

    # closure
    def join_closed(self, C) -> bool:
        return self.sj(C, C) <= C

    def proper(self) -> bool:
        return all(self.join_closed(self.J[a, b]) for a in self.X for b in self.X)

    def closed_sets(self) -> list[frozenset]:
        return [C for C in subsets(self.n) if self.join_closed(C)]

    def cl(self, A, closed=None) -> frozenset:
        out = self.X
        for B in closed if closed is not None else self.closed_sets():
            if A <= B:
                out = out & B
        return out

    def exchange(self) -> bool:
        closed = self.closed_sets()
        for A in closed:
            rest = self.X - A
            for x in rest:
                hx = self.cl(A | {x}, closed)
                for y in rest:
                    if y in hx and x not in self.cl(A | {y}, closed):
                        return False
        return True

    def associative(self) -> bool:
        S = list(subsets(self.n))
        return all(self.sj(self.sj(A, B), C) == self.sj(A, self.sj(B, C))
                   for A in S for B in S for C in S)

    def lines(self) -> set[frozenset]:
        return {self.J[a, b] for a in self.X for b in self.X if a != b}


def naive_linear_space_ok(n: int, lines) -> bool:
    """Every line has two points and every pair of distinct points lies on exactly one line."""
    if any(len(y) < 2 for y in lines):
        return False
    return all(sum(1 for y in lines if a in y and b in y) == 1
               for a, b in combinations(range(n), 2))
