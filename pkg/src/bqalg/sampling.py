"""Random presentations and group elements for property checks."""

from __future__ import annotations

import random

from .consistency3 import PARAMS, Bq3
from .field import Field
from .lie import LIE_MODELS, lie_model
from .transform import MonomialAffineTransform, all_permutations, apply

# a solvable Lie type outside the listed six: [x3, x1] = x1, [x3, x2] = x2
UNLISTED_LIE = {"alpha": 1, "mu": 1}

SUBFAMILIES = (
    "LieType",
    "OneQ.MuAlphaNonzero",
    "OneQ.MuAlphaZero",
    "TwoQ.Q1Q2NonUnit",
    "TwoQ.Q1Q2Unit",
    "ThreeQ.Quantum",
    "ThreeQ.C2",
    "ThreeQ.C3",
    "ThreeQ.C4",
    "ThreeQ.C5",
)
# families whose tag is stable under generator permutations as well
PERMUTATION_STABLE = {
    "LieType", "OneQ.MuAlphaNonzero", "OneQ.MuAlphaZero", "TwoQ.Q1Q2NonUnit",
    "TwoQ.Q1Q2Unit", "ThreeQ.Quantum", "ThreeQ.C5",
}


def random_bq3(K: Field, rng: random.Random, sparsity: float = 0.0, bound: int = 3) -> Bq3:
    """Uniform-ish random data; each non-q entry is zeroed with probability ``sparsity``."""
    kw = {}
    for name in PARAMS:
        if name.startswith("q"):
            kw[name] = K.random_nonzero(rng, bound)
        elif rng.random() < sparsity:
            kw[name] = K.zero
        else:
            kw[name] = K.random_element(rng, bound)
    return Bq3.make(K, **kw)


def random_transform(K: Field, rng: random.Random, with_perm: bool = True, bound: int = 3):
    perm = rng.choice(all_permutations(3)) if with_perm else (1, 2, 3)
    scale = tuple(K.random_nonzero(rng, bound) for _ in range(3))
    shift = tuple(K.random_element(rng, bound) for _ in range(3))
    return MonomialAffineTransform(perm, scale, shift)


def _maybe(K, rng, p_zero=0.3, bound=3):
    return K.zero if rng.random() < p_zero else K.random_nonzero(rng, bound)


def _nonunit(K, rng, bound=3, avoid=()):
    for _ in range(1000):
        x = K.random_nonzero(rng, bound)
        if x != 1 and all(x != y for y in avoid):
            return x
    raise ValueError(f"cannot draw a suitable q in {K.spec}")


def _random_lie(K: Field, rng: random.Random) -> Bq3:
    """A listed Lie-type model pushed through a random linear change of x1, x2, x3."""
    from .lie import bracket_table

    choice = rng.choice(sorted(LIE_MODELS) + ["unlisted"])
    A = Bq3.make(K, **UNLISTED_LIE) if choice == "unlisted" else lie_model(choice, K)
    table = bracket_table(A)
    while True:
        M = [[K.random_element(rng, 2) for _ in range(3)] for _ in range(3)]
        det = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
               - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
               + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
        if det != 0:
            break
    inv = _inverse3(M, det)
    # new basis y_i = sum_k M[k][i] x_k, z unchanged
    new = {}
    for (i, j) in ((1, 0), (2, 0), (2, 1)):
        acc = [K.zero] * 4
        for k in range(3):
            for l in range(3):
                c = M[k][i] * M[l][j]
                if c != 0:
                    acc = [u + c * v for u, v in zip(acc, table[(k, l)])]
        # express the x-part in y coordinates: x = M y  =>  y = M^{-1} x
        ycoords = [sum((inv[r][k] * acc[k] for k in range(3)), K.zero) for r in range(3)]
        new[(i, j)] = ycoords + [acc[3]]
    return Bq3.make(
        K,
        a=new[(1, 0)][0], b=new[(1, 0)][1], c=new[(1, 0)][2], b1=new[(1, 0)][3],
        alpha=new[(2, 0)][0], beta=new[(2, 0)][1], gamma=new[(2, 0)][2], b2=new[(2, 0)][3],
        lam=new[(2, 1)][0], mu=new[(2, 1)][1], nu=new[(2, 1)][2], b3=new[(2, 1)][3],
    )


def _inverse3(M, det):
    def cof(r, c):
        rows = [i for i in range(3) if i != r]
        cols = [j for j in range(3) if j != c]
        m = (M[rows[0]][cols[0]] * M[rows[1]][cols[1]] - M[rows[0]][cols[1]] * M[rows[1]][cols[0]])
        return m if (r + c) % 2 == 0 else -m
    return [[cof(c, r) / det for c in range(3)] for r in range(3)]


def canonical_instance(family: str, K: Field, rng: random.Random) -> Bq3:
    """A consistent presentation already in the shape of ``family``."""
    one = K.one
    if family == "LieType":
        return _random_lie(K, rng)
    if family == "OneQ.MuAlphaNonzero":
        q1 = _nonunit(K, rng)
        while True:
            al, mu = _maybe(K, rng), _maybe(K, rng)
            if al + mu != 0:
                return Bq3.make(K, q1=q1, alpha=al, mu=mu)
    if family == "OneQ.MuAlphaZero":
        al = _maybe(K, rng)
        return Bq3.make(K, q1=_nonunit(K, rng), alpha=al, mu=-al, c=_maybe(K, rng), b1=_maybe(K, rng))
    if family == "TwoQ.Q1Q2NonUnit":
        q1 = _nonunit(K, rng)
        q2 = _nonunit(K, rng, avoid=(1 / q1,))
        return Bq3.make(K, q1=q1, q2=q2)
    if family == "TwoQ.Q1Q2Unit":
        q1 = _nonunit(K, rng, avoid=(-one,))
        return Bq3.make(K, q1=q1, q2=1 / q1, lam=_maybe(K, rng), b3=_maybe(K, rng))
    if family == "ThreeQ.Quantum":
        q = _nonunit(K, rng)
        kw = {n: _maybe(K, rng, 0.35) for n in ("c", "beta", "lam", "b1", "b2", "b3")}
        return Bq3.make(K, q1=q, q2=1 / q, q3=q, **kw)
    if family == "ThreeQ.C2":
        q = _nonunit(K, rng)
        q2 = _nonunit(K, rng, avoid=(1 / q,))
        return Bq3.make(K, q1=q, q2=q2, q3=q, beta=_maybe(K, rng), b2=_maybe(K, rng))
    if family == "ThreeQ.C3":
        q1 = _nonunit(K, rng, avoid=(-one,))
        q3 = _nonunit(K, rng, avoid=(q1,))
        return Bq3.make(K, q1=q1, q2=1 / q1, q3=q3, lam=_maybe(K, rng), b3=_maybe(K, rng))
    if family == "ThreeQ.C4":
        q2 = _nonunit(K, rng, avoid=(-one,))
        q1 = _nonunit(K, rng, avoid=(1 / q2,))
        return Bq3.make(K, q1=q1, q2=q2, q3=1 / q2, c=_maybe(K, rng), b1=_maybe(K, rng))
    if family == "ThreeQ.C5":
        while True:
            q1, q2, q3 = (_nonunit(K, rng) for _ in range(3))
            if q1 != q3 and q1 * q2 != 1 and q2 * q3 != 1:
                return Bq3.make(K, q1=q1, q2=q2, q3=q3)
    raise ValueError(f"unknown family {family!r}")


def disguised_instance(family: str, K: Field, rng: random.Random, with_perm: bool | None = None):
    """A canonical instance hidden behind a random group element."""
    A = canonical_instance(family, K, rng)
    if with_perm is None:
        with_perm = family in PERMUTATION_STABLE
    return apply(A, random_transform(K, rng, with_perm=with_perm))
