"""Exact rank and row-space bases over our coefficient fields, via sympy."""

from __future__ import annotations

from fractions import Fraction

from sympy import GF as _SymGF
from sympy import QQ as _SymQQ
from sympy.polys.matrices import DomainMatrix

from .field import Field, Fp


def _domain(K: Field):
    return _SymGF(K.characteristic) if K.finite else _SymQQ


def _to_dm(rows, K: Field, width: int) -> DomainMatrix:
    dom = _domain(K)
    if K.finite:
        conv = [[dom(int(x)) for x in row] for row in rows]
    else:
        conv = [[dom(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows]
    return DomainMatrix(conv, (len(rows), width), dom)


def _from_dom(x, K: Field):
    if K.finite:
        return Fp(_domain(K).to_int(x), K.characteristic)
    return Fraction(int(x.numerator), int(x.denominator))


def rank(rows, K: Field, width: int) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    return _to_dm(rows, K, width).rank()


def row_basis(rows, K: Field, width: int) -> list:
    """A basis (reduced echelon rows) of the span of ``rows``."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    reduced, pivots = _to_dm(rows, K, width).rref()
    out = reduced.to_list()[: len(pivots)]
    return [tuple(_from_dom(x, K) for x in row) for row in out]


def in_span(v, rows, K: Field, width: int) -> bool:
    return rank(list(rows) + [list(v)], K, width) == rank(rows, K, width)
