"""Monomial-affine changes of generators and their action on presentations.

A transform ``g = (perm, scale, shift)`` introduces new generators::

    y_i = scale[i] * x_perm[i] + shift[i]

``apply(A, g)`` is the presentation of the same algebra in the y's.  Products
compose so that ``apply(apply(A, g), h) == apply(A, compose(h, g))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .consistency3 import Bq3
from .field import Field
from .freealg import NcPoly
from .rewrite import BqPresentation, pairs


class TransformError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialAffineTransform:
    perm: tuple  # perm[i-1] = sigma(i)
    scale: tuple
    shift: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise TransformError(f"{self.perm} is not a permutation of 1..{n}")
        if len(self.scale) != n or len(self.shift) != n:
            raise TransformError("perm, scale and shift must have the same length")
        if any(s == 0 for s in self.scale):
            raise TransformError("scale entries must be nonzero")

    @property
    def n(self):
        return len(self.perm)

    @classmethod
    def identity(cls, K: Field, n: int = 3) -> "MonomialAffineTransform":
        return cls(tuple(range(1, n + 1)), (K.one,) * n, (K.zero,) * n)

    @classmethod
    def torus(cls, K: Field, scale) -> "MonomialAffineTransform":
        n = len(scale)
        return cls(tuple(range(1, n + 1)), tuple(K(s) for s in scale), (K.zero,) * n)

    @classmethod
    def shift_by(cls, K: Field, shift) -> "MonomialAffineTransform":
        n = len(shift)
        return cls(tuple(range(1, n + 1)), (K.one,) * n, tuple(K(s) for s in shift))

    @classmethod
    def permutation(cls, K: Field, perm) -> "MonomialAffineTransform":
        n = len(perm)
        return cls(tuple(perm), (K.one,) * n, (K.zero,) * n)

    def is_identity(self) -> bool:
        return (self.perm == tuple(range(1, self.n + 1))
                and all(s == 1 for s in self.scale) and all(m == 0 for m in self.shift))

    def has_permutation(self) -> bool:
        return self.perm != tuple(range(1, self.n + 1))

    def is_even(self) -> bool:
        p = self.perm
        inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
        return inversions % 2 == 0

    def as_dict(self) -> dict:
        return {
            "perm": "".join(str(i) for i in self.perm),
            "scale": [str(s) for s in self.scale],
            "shift": [str(m) for m in self.shift],
        }


def compose(h: MonomialAffineTransform, g: MonomialAffineTransform) -> MonomialAffineTransform:
    """``h∘g``: first change generators by g, then by h."""
    if h.n != g.n:
        raise TransformError("cannot compose transforms on different generator counts")
    perm, scale, shift = [], [], []
    for i in range(h.n):
        j = h.perm[i] - 1
        perm.append(g.perm[j])
        scale.append(h.scale[i] * g.scale[j])
        shift.append(h.scale[i] * g.shift[j] + h.shift[i])
    return MonomialAffineTransform(tuple(perm), tuple(scale), tuple(shift))


def compose_all(transforms, K: Field, n: int = 3) -> MonomialAffineTransform:
    """Compose a trace applied left to right (first element acts first)."""
    total = MonomialAffineTransform.identity(K, n)
    for g in transforms:
        total = compose(g, total)
    return total


def inverse(g: MonomialAffineTransform) -> MonomialAffineTransform:
    n = g.n
    perm = [0] * n
    for i in range(n):
        perm[g.perm[i] - 1] = i + 1
    scale, shift = [], []
    for i in range(n):
        j = perm[i] - 1
        s = 1 / g.scale[j]
        scale.append(s)
        shift.append(-s * g.shift[j])
    return MonomialAffineTransform(tuple(perm), tuple(scale), tuple(shift))


def _substitute_affine(f: NcPoly, images) -> NcPoly:
    """f with each x_i replaced by the affine polynomial ``images[i-1]`` (a word dict)."""
    out = {}
    for w, c in f.terms.items():
        partial = {(): c}
        for letter in w:
            nxt = {}
            for u, cu in partial.items():
                for v, cv in images[letter - 1].items():
                    if cv == 0:
                        continue
                    key = u + v
                    nxt[key] = nxt.get(key, 0) + cu * cv
            partial = nxt
        for u, cu in partial.items():
            out[u] = out.get(u, 0) + cu
    return NcPoly(f.n, f.K, out)


def _apply_presentation(P: BqPresentation, g: MonomialAffineTransform) -> BqPresentation:
    n, K = P.n, P.K
    if g.n != n:
        raise TransformError(f"transform on {g.n} generators applied to n={n}")
    # x_m = (y_k - shift_k) / scale_k where perm[k] = m
    images = [None] * n
    for k in range(n):
        m = g.perm[k]
        inv = 1 / g.scale[k]
        images[m - 1] = {(k + 1,): inv, (): -g.shift[k] * inv}
    where = {g.perm[k]: k + 1 for k in range(n)}
    q, a, b = {}, {}, {}
    for (i, j) in pairs(n):
        r = _substitute_affine(P.relation(i, j), images)
        k, l = where[i], where[j]
        hi, lo = (k, l) if k > l else (l, k)
        lead = r.coeff((hi, lo))
        other = r.coeff((lo, hi))
        quad = {w for w in r.terms if len(w) == 2}
        # a monomial change of generators keeps the bi-quadratic shape
        assert quad <= {(hi, lo), (lo, hi)} and lead != 0 and other != 0, r
        r = r * (1 / lead)
        q[(hi, lo)] = -r.coeff((lo, hi))
        a[(hi, lo)] = [-r.coeff((t,)) for t in range(1, n + 1)]
        b[(hi, lo)] = -r.coeff(())
    return BqPresentation.build(n, K, q, a, b)


def apply(A, g: MonomialAffineTransform):
    """Rewrite the relations of A in the generators defined by g.

    Accepts a :class:`Bq3` or a :class:`BqPresentation` and returns the
    same kind.  Each relation is substituted, then solved for its new
    descent word, so the result q-matrix is the permuted completion of Q.
    """
    if isinstance(A, Bq3):
        return Bq3.from_presentation(_apply_presentation(A.to_presentation(), g))
    return _apply_presentation(A, g)


def kill_ab(A: Bq3):
    """Shift x1, x2 so that a = b = 0 (needs q1 != 1)."""
    K = A.K
    if A.q1 == 1:
        raise TransformError("kill_ab needs q1 != 1")
    d = 1 - A.q1
    g = MonomialAffineTransform.shift_by(K, (-A.b / d, -A.a / d, K.zero))
    if g.is_identity():
        return A, g
    return apply(A, g), g


def kill_alpha(A: Bq3, rescale: bool = True):
    """Remove alpha by a change of x3 (needs q2 != 1).

    With ``rescale`` x3 is first divided by alpha and then shifted by
    -1/(1-q2); without it the single shift x3 - alpha/(1-q2) is used.
    """
    K = A.K
    if A.q2 == 1:
        raise TransformError("kill_alpha needs q2 != 1")
    if A.alpha == 0:
        return A, MonomialAffineTransform.identity(K)
    d = 1 - A.q2
    if rescale:
        g = MonomialAffineTransform((1, 2, 3), (K.one, K.one, 1 / A.alpha),
                                    (K.zero, K.zero, -1 / d))
    else:
        g = MonomialAffineTransform.shift_by(K, (K.zero, K.zero, -A.alpha / d))
    return apply(A, g), g


def all_permutations(n: int = 3):
    """Permutation tuples of 1..n in lexicographic order."""
    return list(permutations(range(1, n + 1)))


def parse_transform(K: Field, perm: str | None, scale: str | None, shift: str | None,
                    n: int = 3) -> MonomialAffineTransform:
    """Build a transform from CLI strings like ``"132"``, ``"1,2,1/3"``, ``"0,0,1"``."""
    p = tuple(range(1, n + 1))
    if perm:
        digits = [c for c in perm if not c.isspace() and c != ","]
        if not all(c.isdigit() for c in digits):
            raise TransformError(f"bad permutation {perm!r}")
        p = tuple(int(c) for c in digits)
    sc = tuple(K.parse(t) for t in scale.split(",")) if scale else (K.one,) * n
    sh = tuple(K.parse(t) for t in shift.split(",")) if shift else (K.zero,) * n
    if not (len(p) == len(sc) == len(sh) == n):
        raise TransformError(f"transform needs {n} entries in perm, scale and shift")
    return MonomialAffineTransform(p, sc, sh)
