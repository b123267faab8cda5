"""Words, the deglex order, and polynomials in the free algebra K<x1..xn>."""

from __future__ import annotations

import enum
import re
from itertools import groupby

from .field import Field, QQ

Word = tuple  # tuple of generator indices in [1, n]; () is the unit


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def deglex_key(w: Word):
    return (len(w), w)


def deglex_compare(u: Word, v: Word) -> Ordering:
    """Shorter words are smaller; equal lengths compare letter by letter."""
    ku, kv = deglex_key(u), deglex_key(v)
    if ku < kv:
        return Ordering.LT
    if ku > kv:
        return Ordering.GT
    return Ordering.EQ


def is_ordered(w: Word) -> bool:
    return all(w[i] <= w[i + 1] for i in range(len(w) - 1))


class NcPoly:
    """An element of K<x1, ..., xn>: a finite map from words to nonzero scalars.

    Values are treated as immutable.  Iteration and rendering run over the
    terms in descending deglex order, leading term first.
    """

    __slots__ = ("n", "K", "terms")

    def __init__(self, n: int, K: Field = QQ, terms=None):
        self.n = n
        self.K = K
        clean = {}
        if terms:
            for w, c in terms.items():
                w = tuple(w)
                if any(not 1 <= i <= n for i in w):
                    raise ValueError(f"word {w} uses an index outside [1, {n}]")
                c = K(c)
                if c != 0:
                    clean[w] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, K, terms):
        obj = cls.__new__(cls)
        obj.n, obj.K, obj.terms = n, K, terms
        return obj

    @classmethod
    def gen(cls, i: int, n: int, K: Field = QQ) -> "NcPoly":
        return cls(n, K, {(i,): 1})

    @classmethod
    def const(cls, c, n: int, K: Field = QQ) -> "NcPoly":
        return cls(n, K, {(): c})

    @classmethod
    def zero(cls, n: int, K: Field = QQ) -> "NcPoly":
        return cls._raw(n, K, {})

    def _check(self, other: "NcPoly"):
        if other.n != self.n or other.K != self.K:
            raise ValueError(
                f"mismatched polynomials: n={self.n}/{other.n}, {self.K}/{other.K}"
            )

    def _lift(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        return NcPoly.const(other, self.n, self.K)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return NcPoly._raw(self.n, self.K, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw(self.n, self.K, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "NcPoly":
        c = self.K(c)
        if c == 0:
            return NcPoly.zero(self.n, self.K)
        return NcPoly._raw(self.n, self.K, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return self.scale(other)
        self._check(other)
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                s = out.get(w, 0) + a * b
                if s == 0:
                    out.pop(w, None)
                else:
                    out[w] = s
        return NcPoly._raw(self.n, self.K, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        out = NcPoly.const(1, self.n, self.K)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.n == other.n and self.K == other.K and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        for w in sorted(self.terms, key=deglex_key, reverse=True):
            yield w, self.terms[w]

    def __len__(self):
        return len(self.terms)

    def coeff(self, w: Word):
        return self.terms.get(tuple(w), self.K.zero)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def leading_word(self):
        return max(self.terms, key=deglex_key) if self.terms else None

    def relabel(self, mapping, n: int | None = None) -> "NcPoly":
        """Rename letters through ``mapping`` (index -> index)."""
        n = self.n if n is None else n
        out = {tuple(mapping[i] for i in w): c for w, c in self.terms.items()}
        return NcPoly._raw(n, self.K, out)

    def substitute(self, images) -> "NcPoly":
        """Replace each x_i by ``images[i-1]`` (all images share n and K)."""
        target = images[0]
        result = NcPoly.zero(target.n, target.K)
        for w, c in self.terms.items():
            term = NcPoly.const(c, target.n, target.K)
            for i in w:
                term = term * images[i - 1]
            result = result + term
        return result

    def render(self) -> str:
        return render(self)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"NcPoly({render(self)!r}, n={self.n}, K={self.K.spec})"


def _render_word(w: Word) -> str:
    parts = []
    for i, run in groupby(w):
        k = len(list(run))
        parts.append(f"x{i}" if k == 1 else f"x{i}^{k}")
    return "*".join(parts)


def render(f: NcPoly) -> str:
    """Leading term first, exact coefficients, e.g. ``x1*x2*x3 + 1/2*x3^2``."""
    if not f.terms:
        return "0"
    out = []
    for w, c in f:
        negative = f.K.characteristic == 0 and c < 0
        mag = -c if negative else c
        if not w:
            body = str(mag)
        elif mag == 1:
            body = _render_word(w)
        else:
            body = f"{mag}*{_render_word(w)}"
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


class ExprSyntaxError(ValueError):
    """Bad expression text; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, msg: str, pos: int, text: str = ""):
        super().__init__(f"{msg} at position {pos}")
        self.msg = msg
        self.pos = pos
        self.text = text


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<gen>x(?P<idx>\d+))|(?P<op>[-+*^()]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[start]!r}", start, text)
        start = m.start(m.lastgroup)
        if m.group("num"):
            toks.append(("num", m.group("num"), start))
        elif m.group("gen"):
            toks.append(("gen", int(m.group("idx")), start))
        else:
            toks.append(("op", m.group("op"), start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, n, K):
        self.text, self.n, self.K = text, n, K
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ExprSyntaxError(msg, tok[2], self.text)

    def expr(self):
        f = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            f = f * self.factor()
        return f

    def factor(self):
        tok = self.peek()
        if tok[:2] in (("op", "-"), ("op", "+")):
            self.take()
            f = self.factor()
            return -f if tok[1] == "-" else f
        f = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            e = self.take()
            if e[0] != "num" or "/" in e[1]:
                self.error("expected a non-negative integer exponent", e)
            f = f ** int(e[1])
        return f

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            try:
                c = self.K.parse(val)
            except ZeroDivisionError:
                self.error("zero denominator", tok)
            return NcPoly.const(c, self.n, self.K)
        if kind == "gen":
            if not 1 <= val <= self.n:
                self.error(f"generator index x{val} out of range [1, {self.n}]", tok)
            return NcPoly.gen(val, self.n, self.K)
        if tok[:2] == ("op", "("):
            f = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return f
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected token {val!r}", tok)


def parse_expr(text: str, n: int, K: Field = QQ) -> NcPoly:
    """Parse ``x1``..``xn``, exact literals, ``+ - * ^`` and parentheses.

    ``*`` is the noncommutative product: ``x2*x1`` stays ``x2*x1``.
    """
    p = _Parser(text, n, K)
    f = p.expr()
    if p.peek()[0] != "end":
        p.error(f"unexpected token {p.peek()[1]!r}")
    return f
