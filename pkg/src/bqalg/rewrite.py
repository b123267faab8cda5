"""Bi-quadratic presentations and rewriting to PBW normal form.

A presentation on generators x1..xn has one relation per pair i > j::

    x_i x_j - q_ij x_j x_i = sum_k a_ij,k x_k + b_ij

Read left to right it rewrites every descent ``x_i x_j`` (i > j).  The only
ambiguities are the words ``x_k x_j x_i`` with i < j < k, so comparing the two
ways of resolving each of them decides whether the ordered monomials form a
basis (Diamond Lemma).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .field import Field, QQ
from .freealg import NcPoly, Word, is_ordered

__all__ = [
    "BqPresentation",
    "OverlapReport",
    "InconsistentPresentation",
    "pairs",
    "reduce",
    "overlap_check",
    "pbw_consistent",
    "reduce_in_order",
    "permuted_presentation",
]

STRATEGIES = ("leftmost", "rightmost")


class InconsistentPresentation(ValueError):
    """The relations do not give a PBW basis."""


def pairs(n: int):
    """Relation index pairs (i, j), i > j, in row-major lower-triangle order."""
    return [(i, j) for i in range(2, n + 1) for j in range(1, i)]


@dataclass(frozen=True)
class BqPresentation:
    """The data (n, Q, A, B); ``q``, ``a``, ``b`` are indexed like :func:`pairs`."""

    n: int
    K: Field
    q: tuple
    a: tuple  # one length-n tuple per pair
    b: tuple

    def __post_init__(self):
        m = len(pairs(self.n))
        if self.n < 2:
            raise ValueError("need at least 2 generators")
        if not (len(self.q) == len(self.a) == len(self.b) == m):
            raise ValueError(f"expected {m} relations for n={self.n}")
        if any(len(row) != self.n for row in self.a):
            raise ValueError(f"each row of A needs {self.n} entries")
        if any(x == 0 for x in self.q):
            raise ValueError("every q_ij must be nonzero")

    @classmethod
    def build(cls, n: int, K: Field = QQ, q=None, a=None, b=None) -> "BqPresentation":
        """Build from sequences (pair order) or dicts keyed by (i, j); missing entries default."""
        ps = pairs(n)

        def pick(src, key, idx, default):
            if src is None:
                return default
            if isinstance(src, dict):
                return src.get(key, default)
            return src[idx]

        qs = tuple(K(pick(q, p, t, 1)) for t, p in enumerate(ps))
        rows = []
        for t, p in enumerate(ps):
            row = pick(a, p, t, None)
            rows.append(tuple(K(x) for x in row) if row is not None else (K.zero,) * n)
        bs = tuple(K(pick(b, p, t, 0)) for t, p in enumerate(ps))
        return cls(n, K, qs, tuple(rows), bs)

    def index(self, i: int, j: int) -> int:
        if not (1 <= j < i <= self.n):
            raise KeyError((i, j))
        return (i - 1) * (i - 2) // 2 + (j - 1)

    def qij(self, i, j):
        return self.q[self.index(i, j)]

    def aij(self, i, j):
        return self.a[self.index(i, j)]

    def bij(self, i, j):
        return self.b[self.index(i, j)]

    def relation(self, i: int, j: int) -> NcPoly:
        """x_i x_j - q_ij x_j x_i - sum a_ij,k x_k - b_ij."""
        t = self.index(i, j)
        terms = {(i, j): 1, (j, i): -self.q[t], (): -self.b[t]}
        f = NcPoly(self.n, self.K, terms)
        for k, c in enumerate(self.a[t], start=1):
            f = f - NcPoly(self.n, self.K, {(k,): c})
        return f

    def is_lie_type(self) -> bool:
        return all(x == 1 for x in self.q)

    def __str__(self):
        lines = []
        for (i, j) in pairs(self.n):
            rhs = self.relation(i, j) - NcPoly(self.n, self.K, {(i, j): 1})
            lines.append(f"x{i}*x{j} = {(-rhs).render()}")
        return "\n".join(lines)


class _Rewriter:
    """Word-by-word normal forms with a per-presentation memo."""

    def __init__(self, P: BqPresentation, strategy: str):
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        self.P = P
        self.strategy = strategy
        self.rules = {}
        for (i, j) in pairs(P.n):
            t = P.index(i, j)
            lin = [((k,), c) for k, c in enumerate(P.a[t], start=1) if c != 0]
            if P.b[t] != 0:
                lin.append(((), P.b[t]))
            self.rules[(i, j)] = (P.q[t], lin)
        self.memo = {}

    def _descent(self, w: Word):
        rng = range(len(w) - 1)
        if self.strategy == "rightmost":
            rng = reversed(rng)
        for p in rng:
            if w[p] > w[p + 1]:
                return p
        return None

    def word(self, w: Word) -> dict:
        hit = self.memo.get(w)
        if hit is not None:
            return hit
        # explicit stack keeps deep words off the Python recursion limit
        stack = [w]
        while stack:
            top = stack[-1]
            if top in self.memo:
                stack.pop()
                continue
            p = self._descent(top)
            if p is None:
                self.memo[top] = {top: self.P.K.one}
                stack.pop()
                continue
            q, lin = self.rules[(top[p], top[p + 1])]
            head, tail = top[:p], top[p + 2:]
            swapped = head + (top[p + 1], top[p]) + tail
            deps = [(swapped, q)] + [(head + m + tail, c) for m, c in lin]
            missing = [u for u, _ in deps if u not in self.memo]
            if missing:
                stack.extend(missing)
                continue
            out = {}
            for u, c in deps:
                for v, d in self.memo[u].items():
                    s = out.get(v, 0) + c * d
                    if s == 0:
                        out.pop(v, None)
                    else:
                        out[v] = s
            self.memo[top] = out
            stack.pop()
        return self.memo[w]

    def poly(self, f: NcPoly) -> NcPoly:
        out = {}
        for w, c in f.terms.items():
            for v, d in self.word(w).items():
                s = out.get(v, 0) + c * d
                if s == 0:
                    out.pop(v, None)
                else:
                    out[v] = s
        return NcPoly._raw(f.n, f.K, out)


@lru_cache(maxsize=256)
def _rewriter(P: BqPresentation, strategy: str) -> _Rewriter:
    return _Rewriter(P, strategy)


def reduce(f: NcPoly, P: BqPresentation, strategy: str = "leftmost") -> NcPoly:
    """Rewrite ``f`` until only ordered words x1^a1 ... xn^an remain.

    The default strategy rewrites the leftmost descent of each word; the
    ``"rightmost"`` strategy is an independent alternative used to test
    confluence.  Inconsistent presentations are accepted, but then the
    result depends on the strategy.
    """
    if f.n != P.n or f.K != P.K:
        raise ValueError("polynomial and presentation disagree on n or field")
    return _rewriter(P, strategy).poly(f)


@dataclass(frozen=True)
class OverlapReport:
    triple: tuple  # (k, j, i) with i < j < k
    difference: NcPoly


def overlap_check(P: BqPresentation, strategy: str = "leftmost") -> list:
    """Resolve every ``x_k x_j x_i`` (i<j<k) both ways; report the mismatches."""
    n, K = P.n, P.K
    reports = []
    for k in range(3, n + 1):
        for j in range(2, k):
            for i in range(1, j):
                x = lambda t: NcPoly.gen(t, n, K)  # noqa: E731
                rest_kj = P.relation(k, j) - x(k) * x(j)  # = -(q x_j x_k + lin)
                rest_ji = P.relation(j, i) - x(j) * x(i)
                left = reduce((-rest_kj) * x(i), P, strategy)
                right = reduce(x(k) * (-rest_ji), P, strategy)
                diff = left - right
                if diff:
                    reports.append(OverlapReport((k, j, i), diff))
    return reports


def pbw_consistent(P: BqPresentation) -> bool:
    return not overlap_check(P)


def permuted_presentation(P: BqPresentation, order) -> BqPresentation:
    """The presentation in generators y_m = x_order[m-1].

    Relations whose original orientation is reversed are solved for the new
    leading word, which needs q_ij to be invertible.
    """
    n, K = P.n, P.K
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"{order} is not a permutation of 1..{n}")
    pos = {order[m]: m + 1 for m in range(n)}  # x index -> y index
    q, a, b = {}, {}, {}
    for (m, l) in pairs(n):
        xi, xj = order[m - 1], order[l - 1]
        if xi > xj:
            qq, row, bb = P.qij(xi, xj), P.aij(xi, xj), P.bij(xi, xj)
            scale = K.one
        else:
            qq0, row, bb = P.qij(xj, xi), P.aij(xj, xi), P.bij(xj, xi)
            qq = 1 / qq0
            scale = -qq  # y_m y_l - q^-1 y_l y_m = -q^-1 (lin)
        new_row = [K.zero] * n
        for k, c in enumerate(row, start=1):
            new_row[pos[k] - 1] = scale * c
        q[(m, l)], a[(m, l)], b[(m, l)] = qq, new_row, scale * bb
    return BqPresentation.build(n, K, q, a, b)


def reduce_in_order(f: NcPoly, P: BqPresentation, order) -> NcPoly:
    """Normal form in the monomials x_order[0]^a1 ... x_order[n-1]^an."""
    if not pbw_consistent(P):
        raise InconsistentPresentation("reduce_in_order needs a PBW-consistent presentation")
    order = tuple(order)
    Pp = permuted_presentation(P, order)
    to_y = {order[m]: m + 1 for m in range(P.n)}
    to_x = {m + 1: order[m] for m in range(P.n)}
    g = reduce(f.relabel(to_y), Pp)
    return g.relabel(to_x)


def is_normal(f: NcPoly) -> bool:
    return all(is_ordered(w) for w in f.terms)
