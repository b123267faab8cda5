"""Exact coefficient fields: the rationals and prime fields GF(p).

Rationals are plain :class:`fractions.Fraction` values.  Prime-field values
are :class:`Fp` instances carrying their modulus, so mixing two different
fields in one operation raises :class:`FieldMismatchError`.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy import factorint, integer_nthroot, isprime
from sympy.ntheory import nthroot_mod

__all__ = [
    "Field",
    "Rationals",
    "PrimeField",
    "Fp",
    "QQ",
    "GF",
    "PowerClass",
    "FieldMismatchError",
    "field_from_spec",
    "field_of",
    "add",
    "sub",
    "mul",
    "div",
    "power_class",
    "same_class",
]

_LITERAL = re.compile(r"^\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")
MAX_PRIME = 2**31


class FieldMismatchError(TypeError):
    """Operands from two different fields were combined."""


class Fp:
    """An element of GF(p), stored as its least non-negative residue."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.p
        raise FieldMismatchError(f"cannot combine GF({self.p}) with {type(other).__name__}")

    def __add__(self, other):
        return Fp(self.v + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.v - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Fp(self._coerce(other) - self.v, self.p)

    def __mul__(self, other):
        return Fp(self.v * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(self._coerce(other) * pow(self.v, -1, self.p), self.p)

    def __pow__(self, e: int):
        if e < 0:
            if self.v == 0:
                raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
            return Fp(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return Fp(pow(self.v, e, self.p), self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class PowerClass:
    """The coset ``representative * K^{x n}`` in ``K^x / K^{x n}``."""

    n: int
    representative: object

    def __str__(self):
        return f"{self.representative}*K^x{self.n}"


class Field:
    """Common interface of :data:`QQ` and :func:`GF`."""

    spec: str
    characteristic: int
    finite = False

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, text: str):
        """Parse an exact literal ``[+-]int`` or ``[+-]int/int``."""
        m = _LITERAL.match(text)
        if not m:
            raise ValueError(f"not an exact literal: {text!r}")
        sign, num, den = m.groups()
        value = self(int(num))
        if den is not None:
            if int(den) == 0:
                raise ZeroDivisionError(f"zero denominator in {text!r}")
            value = value / self(int(den))
        return -value if sign == "-" else value

    def render(self, x) -> str:
        return str(x)

    def is_zero(self, x) -> bool:
        return x == 0

    def power_class(self, x, n: int) -> PowerClass:
        raise NotImplementedError

    def nth_root(self, x, n: int):
        """Some ``r`` with ``r**n == x``, or ``None`` if there is none."""
        raise NotImplementedError

    def random_element(self, rng: random.Random, bound: int = 5):
        raise NotImplementedError

    def random_nonzero(self, rng: random.Random, bound: int = 5):
        while True:
            x = self.random_element(rng, bound)
            if x != 0:
                return x

    def __repr__(self):
        return f"Field({self.spec!r})"


class Rationals(Field):
    spec = "Q"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fp):
            raise FieldMismatchError("GF(p) value used over Q")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def power_class(self, x, n):
        x = self(x)
        if x == 0:
            raise ValueError("power class of zero")
        # x*K^n contains num*den^(n-1), an integer
        m = x.numerator * x.denominator ** (n - 1)
        sign = -1 if m < 0 and n % 2 == 0 else 1
        rep = 1
        for prime, e in factorint(abs(m)).items():
            rep *= prime ** (e % n)
        return PowerClass(n, Fraction(sign * rep))

    def nth_root(self, x, n):
        x = self(x)
        if x == 0:
            return Fraction(0)
        if x < 0 and n % 2 == 0:
            return None
        num, exact_n = integer_nthroot(abs(x.numerator), n)
        den, exact_d = integer_nthroot(x.denominator, n)
        if not (exact_n and exact_d):
            return None
        root = Fraction(num, den)
        return -root if x < 0 else root

    def random_element(self, rng, bound=5):
        num = rng.randint(-bound, bound)
        den = rng.choice((1, 1, 1, 2, 3))
        return Fraction(num, den)


class PrimeField(Field):
    finite = True

    def __init__(self, p: int):
        if not (1 < p < MAX_PRIME and isprime(p)):
            raise ValueError(f"GF(p) needs a prime p < 2^31, got {p}")
        self.p = p
        self.characteristic = p
        self.spec = f"fp:{p}"

    def __call__(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatchError(f"GF({x.p}) value used over GF({self.p})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return Fp(x.numerator, self.p) / Fp(x.denominator, self.p)
        return Fp(int(x), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def elements(self):
        return [Fp(v, self.p) for v in range(self.p)]

    def nonzero_elements(self):
        return [Fp(v, self.p) for v in range(1, self.p)]

    def _coset_key(self, v: int, d: int) -> int:
        # x, y lie in the same coset of the n-th powers iff x^((p-1)/d) == y^((p-1)/d)
        return pow(v, (self.p - 1) // d, self.p)

    def power_class(self, x, n):
        x = self(x)
        if x.v == 0:
            raise ValueError("power class of zero")
        d = gcd(n, self.p - 1)
        key = self._coset_key(x.v, d)
        r = 1
        while self._coset_key(r, d) != key:
            r += 1
        return PowerClass(n, Fp(r, self.p))

    def nth_root(self, x, n):
        x = self(x)
        if x.v == 0:
            return x
        root = nthroot_mod(x.v, n, self.p)
        if root is None:
            return None
        return Fp(int(root), self.p)

    def random_element(self, rng, bound=None):
        return Fp(rng.randrange(self.p), self.p)


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """``"Q"`` or ``"fp:<prime>"``."""
    s = spec.strip().strip('"')
    if s in ("Q", "QQ"):
        return QQ
    if s.startswith("fp:"):
        try:
            p = int(s[3:])
        except ValueError:
            raise ValueError(f"bad field spec {spec!r}") from None
        return GF(p)
    raise ValueError(f"bad field spec {spec!r}; expected 'Q' or 'fp:<p>'")


def field_of(x) -> Field:
    if isinstance(x, Fp):
        return GF(x.p)
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"not a field value: {x!r}")


def _same_field(x, y) -> Field:
    K = field_of(x)
    if field_of(y) != K:
        raise FieldMismatchError(f"{x!r} and {y!r} live in different fields")
    return K


def add(x, y):
    K = _same_field(x, y)
    return K(x) + K(y)


def sub(x, y):
    K = _same_field(x, y)
    return K(x) - K(y)


def mul(x, y):
    K = _same_field(x, y)
    return K(x) * K(y)


def div(x, y):
    K = _same_field(x, y)
    if y == 0:
        raise ZeroDivisionError("division by zero")
    return K(x) / K(y)


def power_class(x, n: int) -> PowerClass:
    return field_of(x).power_class(x, n)


def same_class(x, y, n: int) -> bool:
    """True iff ``x / y`` is an n-th power."""
    K = _same_field(x, y)
    if x == 0 or y == 0:
        raise ValueError("same_class needs nonzero values")
    return K.power_class(x, n) == K.power_class(y, n)
