"""Three-generator presentations and the explicit ten-condition PBW test.

The relations are::

    x2 x1 - q1 x1 x2 = a x1     + b x2  + c x3     + b1
    x3 x1 - q2 x1 x3 = alpha x1 + beta x2 + gamma x3 + b2
    x3 x2 - q3 x2 x3 = lam x1   + mu x2 + nu x3    + b3
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace

from .field import Field, QQ
from .rewrite import BqPresentation, overlap_check

PARAMS = ("q1", "q2", "q3", "a", "b", "c", "alpha", "beta", "gamma",
          "lam", "mu", "nu", "b1", "b2", "b3")
RESIDUE_LABELS = ("X1X2", "X1X3", "X2X3", "X1X1", "X2X2", "X3X3", "X1", "X2", "X3", "1")


@dataclass(frozen=True)
class Bq3:
    K: Field
    q1: object
    q2: object
    q3: object
    a: object
    b: object
    c: object
    alpha: object
    beta: object
    gamma: object
    lam: object
    mu: object
    nu: object
    b1: object
    b2: object
    b3: object

    def __post_init__(self):
        for name in PARAMS:
            object.__setattr__(self, name, self.K(getattr(self, name)))
        if self.q1 == 0 or self.q2 == 0 or self.q3 == 0:
            raise ValueError("q1, q2, q3 must be nonzero")

    @classmethod
    def make(cls, K: Field = QQ, **kw) -> "Bq3":
        """Unspecified q's default to 1, everything else to 0."""
        unknown = set(kw) - set(PARAMS)
        if unknown:
            raise TypeError(f"unknown parameters {sorted(unknown)}")
        vals = {name: kw.get(name, 1 if name.startswith("q") else 0) for name in PARAMS}
        return cls(K, **vals)

    def params(self) -> dict:
        return {name: getattr(self, name) for name in PARAMS}

    def with_(self, **kw) -> "Bq3":
        return replace(self, **kw)

    def to_presentation(self) -> BqPresentation:
        return BqPresentation(
            3,
            self.K,
            (self.q1, self.q2, self.q3),
            ((self.a, self.b, self.c), (self.alpha, self.beta, self.gamma),
             (self.lam, self.mu, self.nu)),
            (self.b1, self.b2, self.b3),
        )

    @classmethod
    def from_presentation(cls, P: BqPresentation) -> "Bq3":
        if P.n != 3:
            raise ValueError("Bq3 needs a 3-generator presentation")
        (a, b, c), (al, be, ga), (la, mu, nu) = P.a
        return cls(P.K, *P.q, a, b, c, al, be, ga, la, mu, nu, *P.b)

    def __str__(self):
        return str(self.to_presentation())


@dataclass(frozen=True)
class ConsistencyResidues:
    X1X2: object
    X1X3: object
    X2X3: object
    X1X1: object
    X2X2: object
    X3X3: object
    X1: object
    X2: object
    X3: object
    one: object

    def as_dict(self) -> dict:
        vals = [getattr(self, f.name) for f in fields(self)]
        return dict(zip(RESIDUE_LABELS, vals))

    def all_zero(self) -> bool:
        return all(v == 0 for v in self.as_dict().values())


def residues(A: Bq3) -> ConsistencyResidues:
    """Left side minus right side of each of the ten conditions."""
    q1, q2, q3 = A.q1, A.q2, A.q3
    a, b, c = A.a, A.b, A.c
    al, be, ga = A.alpha, A.beta, A.gamma
    la, mu, nu = A.lam, A.mu, A.nu
    b1, b2, b3 = A.b1, A.b2, A.b3
    return ConsistencyResidues(
        X1X2=(1 - q3) * al - (1 - q2) * mu,
        X1X3=(1 - q3) * a - (1 - q1) * nu,
        X2X3=(1 - q2) * b - (1 - q1) * ga,
        X1X1=(1 - q1 * q2) * la,
        X2X2=(q1 - q3) * be,
        X3X3=(1 - q2 * q3) * c,
        X1=((1 - q3) * al - mu) * a + (b + q1 * ga) * la - nu * al + (q1 * q2 - 1) * b3,
        X2=(a - nu) * be + q1 * ga * mu - q3 * al * b + (q1 - q3) * b2,
        X3=(a + (q1 - 1) * nu) * ga + b * nu - (mu + q3 * al) * c + (1 - q2 * q3) * b1,
        one=-(mu + q3 * al) * b1 + (a - nu) * b2 + (b + q1 * ga) * b3,
    )


def is_consistent3(A: Bq3) -> bool:
    return residues(A).all_zero()


def consistent_by_overlap(A: Bq3) -> bool:
    """The same question answered by resolving x3 x2 x1 both ways."""
    return not overlap_check(A.to_presentation())
