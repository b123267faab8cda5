"""The 4-dimensional Lie algebra behind a Lie-type presentation.

For q1 = q2 = q3 = 1 the relations are commutators, so the span of
x1, x2, x3 and a central z (standing in for the constant 1) is a Lie
algebra.  The algebra itself is its enveloping algebra modulo z - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .consistency3 import Bq3
from .field import Field
from .linalg import in_span, rank, row_basis

DIM = 4  # basis x1, x2, x3, z


def bracket_table(A: Bq3) -> dict:
    """[e_i, e_j] as coordinate 4-tuples, 0-based indices, z = index 3."""
    K = A.K
    zero = (K.zero,) * DIM
    rows = {
        (1, 0): (A.a, A.b, A.c, A.b1),
        (2, 0): (A.alpha, A.beta, A.gamma, A.b2),
        (2, 1): (A.lam, A.mu, A.nu, A.b3),
    }
    table = {}
    for i in range(DIM):
        for j in range(DIM):
            if (i, j) in rows:
                table[(i, j)] = rows[(i, j)]
            elif (j, i) in rows:
                table[(i, j)] = tuple(-x for x in rows[(j, i)])
            else:
                table[(i, j)] = zero
    return table


@dataclass(frozen=True)
class LieAlgebra:
    K: Field
    table: dict

    @classmethod
    def from_bq3(cls, A: Bq3) -> "LieAlgebra":
        return cls(A.K, bracket_table(A))

    def bracket(self, u, v):
        K = self.K
        out = [K.zero] * DIM
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = ui * vj
                for k, t in enumerate(self.table[(i, j)]):
                    out[k] = out[k] + c * t
        return tuple(out)

    def basis_vector(self, i):
        return tuple(self.K.one if k == i else self.K.zero for k in range(DIM))

    def span_brackets(self, left, right):
        return row_basis([self.bracket(u, v) for u in left for v in right], self.K, DIM)

    def full(self):
        return [self.basis_vector(i) for i in range(DIM)]

    def center_dim(self) -> int:
        # v is central iff ad(v) = 0; stack the columns [e_i, e_j] per basis vector
        rows = []
        for i in range(DIM):
            row = []
            for j in range(DIM):
                row.extend(self.table[(i, j)])
            rows.append(row)
        # rank of the linear map v -> (ad v)
        return DIM - rank(rows, self.K, DIM * DIM)

    def derived(self):
        return self.span_brackets(self.full(), self.full())

    def is_nilpotent(self) -> bool:
        cur = self.full()
        for _ in range(DIM + 1):
            if not cur:
                return True
            nxt = self.span_brackets(self.full(), cur)
            if len(nxt) == len(cur):
                return False
            cur = nxt
        return not cur

    def is_solvable(self) -> bool:
        cur = self.full()
        for _ in range(DIM + 1):
            if not cur:
                return True
            nxt = self.span_brackets(cur, cur)
            if len(nxt) == len(cur):
                return False
            cur = nxt
        return not cur

    def jacobi_holds(self) -> bool:
        es = self.full()
        for x in es:
            for y in es:
                for w in es:
                    s = [self.K.zero] * DIM
                    for t in (self.bracket(x, self.bracket(y, w)),
                              self.bracket(y, self.bracket(w, x)),
                              self.bracket(w, self.bracket(x, y))):
                        s = [p + r for p, r in zip(s, t)]
                    if any(v != 0 for v in s):
                        return False
        return True


def quotient_type(A: Bq3) -> str:
    """Isomorphism type of the 3-dimensional quotient by z.

    One of ``abelian``, ``heisenberg``, ``n2xK``, ``simple`` or
    ``solvable_other`` (derived algebra of dimension 2).
    """
    q = LieAlgebra.from_bq3(A.with_(b1=0, b2=0, b3=0))
    d = q.derived()
    dz = [v for v in d if any(x != 0 for x in v[:3])]
    k = len(dz)
    if k == 0:
        return "abelian"
    if k == 3:
        return "simple"
    if k == 2:
        return "solvable_other"
    # one-dimensional derived algebra: central in the quotient or not
    w = dz[0]
    central = all(all(x == 0 for x in q.bracket(w, e)) for e in q.full()[:3])
    return "heisenberg" if central else "n2xK"


@dataclass(frozen=True)
class LieInvariants:
    center_dim: int
    nilpotent: bool
    solvable: bool
    z_in_derived: bool
    quotient: str

    def as_dict(self):
        return {
            "center_dim": self.center_dim,
            "nilpotent": self.nilpotent,
            "solvable": self.solvable,
            "z_in_derived": self.z_in_derived,
            "quotient": self.quotient,
        }


def lie_invariants(A: Bq3) -> LieInvariants:
    L = LieAlgebra.from_bq3(A)
    z = L.basis_vector(3)
    return LieInvariants(
        center_dim=L.center_dim(),
        nilpotent=L.is_nilpotent(),
        solvable=L.is_solvable(),
        z_in_derived=in_span(z, L.derived(), A.K, DIM),
        quotient=quotient_type(A),
    )


# quotient type, whether z is a commutator -> tag
_TAGS = {
    ("abelian", False): "P3",
    ("abelian", True): "UN_mod",
    ("heisenberg", False): "UH3",
    ("heisenberg", True): "UN_mod",
    ("n2xK", False): "Un2xKz",
    ("n2xK", True): "UM_mod",
    ("simple", False): "Usl2",
}


def lie_tag(inv: LieInvariants) -> str:
    return _TAGS.get((inv.quotient, inv.z_in_derived), "Unlisted")


# one presentation per listed type, q1 = q2 = q3 = 1
LIE_MODELS = {
    "P3": {},
    "Usl2": {"c": -1, "alpha": 2, "mu": -2},
    "UH3": {"c": 1},
    "UN_mod": {"c": -1, "b3": -1},
    "Un2xKz": {"a": 1},
    "UM_mod": {"alpha": 1, "b3": 1},
}

# (dim Z, nilpotent, solvable) of the Lie algebra behind each model
LIE_INVARIANT_TABLE = {
    "P3": (4, True, True),
    "Usl2": (1, False, False),
    "UH3": (2, True, True),
    "UN_mod": (1, True, True),
    "Un2xKz": (2, False, True),
    "UM_mod": (1, False, True),
}


def lie_model(tag: str, K: Field) -> Bq3:
    return Bq3.make(K, **LIE_MODELS[tag])
