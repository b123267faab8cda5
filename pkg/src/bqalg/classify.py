"""Canonical forms of consistent bi-quadratic algebras on 2 and 3 generators.

``classify3`` first permutes generators so the q-pattern is one of four
shapes (all q = 1, one q != 1 in slot 1, two in slots 1-2, or none equal
to 1), then removes a, b and alpha by shifts and fixes the remaining
parameters by scaling.  The returned trace composes to a transform that
maps the input presentation onto the canonical one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .consistency3 import PARAMS, Bq3, is_consistent3
from .field import QQ, Field
from .lie import LIE_INVARIANT_TABLE, LieInvariants, lie_invariants, lie_model, lie_tag
from .orbits import OrbitInvariant, expected_representative, orbit_invariant, representative
from .rewrite import BqPresentation, InconsistentPresentation
from .transform import (
    MonomialAffineTransform,
    all_permutations,
    apply,
    compose_all,
    kill_ab,
    kill_alpha,
)

EVEN_PERMS = [(1, 2, 3), (2, 3, 1), (3, 1, 2)]
ODD_PERMS = [(1, 3, 2), (2, 1, 3), (3, 2, 1)]

# allowed supports of the case triple after normalization
QUANTUM_SUPPORTS = {
    1: {(1, 1, 1)},
    2: {(1, 1, 1), (1, 1, 0)},
    3: {(1, 1, 1), (1, 1, 0), (1, 0, 0)},
    4: {(1, 1, 1), (1, 1, 0), (1, 0, 0), (0, 0, 0)},
}
# the entries of (c, beta, lam) that must vanish in each case
QUANTUM_ZEROS = {1: (), 2: ("lam",), 3: ("beta", "lam"), 4: ("c", "beta", "lam")}
QUANTUM_TRIPLES = {
    1: ("c", "beta", "lam"),
    2: ("c", "beta", "b3"),
    3: ("c", "b2", "b3"),
    4: ("b1", "b2", "b3"),
}


@dataclass(frozen=True)
class CanonicalForm:
    family: str  # "<Top>.<Sub>", e.g. "ThreeQ.Quantum"
    case: int | None = None
    params: dict = field(default_factory=dict)
    closure_flag: bool = False
    presentation: object = None
    transforms: tuple = ()
    invariant: OrbitInvariant | None = None
    q_inverted: bool = False
    lie: LieInvariants | None = None

    @property
    def top(self) -> str:
        return self.family.split(".")[0]

    def as_dict(self) -> dict:
        out = {
            "family": self.family,
            "case": self.case,
            "params": {k: str(v) for k, v in self.params.items()},
            "closure_flag": self.closure_flag,
            "q_inverted": self.q_inverted,
            "transforms": [g.as_dict() for g in self.transforms],
        }
        if self.invariant is not None:
            out["invariant"] = self.invariant.as_dict()
        if self.lie is not None:
            out["lie_invariants"] = self.lie.as_dict()
        if self.presentation is not None:
            out["presentation"] = str(self.presentation).splitlines()
        return out


# ---------------------------------------------------------------- n = 2

def presentation2(q, a, b, c, K: Field = QQ) -> BqPresentation:
    return BqPresentation.build(2, K, [q], [[a, b]], [c])


def classify2(q, a=0, b=0, c=0, K: Field = QQ) -> CanonicalForm:
    """The five algebras on two generators x2 x1 - q x1 x2 = a x1 + b x2 + c."""
    q, a, b, c = K(q), K(a), K(b), K(c)
    if q == 0:
        raise ValueError("q must be nonzero")
    P = presentation2(q, a, b, c, K)
    trace = []
    if q == 1:
        if a == 0 and b == 0:
            if c == 0:
                return CanonicalForm("TwoGen.Poly2", presentation=P)
            g = MonomialAffineTransform.torus(K, (1 / c, K.one))
            return CanonicalForm("TwoGen.Weyl", presentation=apply(P, g), transforms=(g,))
        # a 2-dimensional non-abelian Lie algebra; the model is [x2, x1] = x1
        return CanonicalForm("TwoGen.Un2", presentation=presentation2(1, 1, 0, 0, K))
    d = 1 - q
    g = MonomialAffineTransform.shift_by(K, (-b / d, -a / d))
    if not g.is_identity():
        P = apply(P, g)
        trace.append(g)
    c2 = P.b[0]
    if c2 == 0:
        return CanonicalForm("TwoGen.QuantumPlane", params={"q": q}, presentation=P,
                             transforms=tuple(trace))
    g = MonomialAffineTransform.torus(K, (1 / c2, K.one))
    trace.append(g)
    return CanonicalForm("TwoGen.QuantumWeyl", params={"q": q}, presentation=apply(P, g),
                         transforms=tuple(trace))


# ---------------------------------------------------------------- n = 3 helpers

def _nonunit(A: Bq3):
    return tuple(x != 1 for x in (A.q1, A.q2, A.q3))


def _permute_to(A: Bq3, pattern):
    """Lexicographically first permutation giving the wanted q != 1 pattern."""
    for perm in all_permutations(3):
        g = MonomialAffineTransform.permutation(A.K, perm)
        B = apply(A, g)
        if _nonunit(B) == pattern:
            return B, g
    raise AssertionError("no permutation reaches the q-pattern")  # pragma: no cover


class _Trace:
    """Applies transforms and records the non-trivial ones."""

    def __init__(self, A: Bq3):
        self.A = A
        self.steps = []

    def push(self, g):
        if not g.is_identity():
            self.A = apply(self.A, g)
            self.steps.append(g)

    def record(self, pair):
        B, g = pair
        if not g.is_identity():
            self.A = B
            self.steps.append(g)

    def torus(self, s1=None, s2=None, s3=None):
        K = self.A.K
        s = tuple(K.one if x is None else x for x in (s1, s2, s3))
        self.push(MonomialAffineTransform.torus(K, s))


def three_q_case(A: Bq3) -> int:
    q1, q2, q3 = A.q1, A.q2, A.q3
    if q1 == q3:
        return 1 if q1 * q2 == 1 else 2
    if q1 * q2 == 1:
        return 3
    if q2 * q3 == 1:
        return 4
    return 5


def is_quantum(A: Bq3) -> bool:
    return A.q1 != 1 and A.q1 == A.q3 and A.q1 * A.q2 == 1


def _q_params(A: Bq3) -> dict:
    return {"q1": A.q1, "q2": A.q2, "q3": A.q3}


# ---------------------------------------------------------------- families

def lie_classify(A: Bq3) -> CanonicalForm:
    """Lie-type algebras (all q = 1), identified by Lie algebra invariants."""
    if not (A.q1 == A.q2 == A.q3 == 1):
        raise ValueError("lie_classify needs q1 = q2 = q3 = 1")
    if not is_consistent3(A):
        raise InconsistentPresentation("Jacobi identity fails")
    inv = lie_invariants(A)
    tag = lie_tag(inv)
    model = A if tag == "Unlisted" else lie_model(tag, A.K)
    return CanonicalForm(
        "LieType." + tag,
        presentation=model,
        closure_flag=(tag == "Usl2"),
        lie=inv,
    )


def _classify_one_q(A: Bq3) -> CanonicalForm:
    tr = _Trace(A)
    tr.record(_permute_to(A, (True, False, False)))
    tr.record(kill_ab(tr.A))
    B = tr.A
    K = B.K
    al, mu = B.alpha, B.mu
    if al + mu != 0:
        tr.torus(s3=1 / al if al != 0 else 1 / mu)
        B = tr.A
        return CanonicalForm("OneQ.MuAlphaNonzero",
                             params={"q1": B.q1, "alpha": B.alpha, "mu": B.mu},
                             presentation=B, transforms=tuple(tr.steps))
    if B.c != 0 and B.b1 != 0:
        # shifting x3 moves b1 by a multiple of c
        tr.push(MonomialAffineTransform.shift_by(K, (0, 0, B.b1 / B.c)))
        B = tr.A
    c, b1 = B.c, B.b1
    t, s3 = None, None
    if al != 0:
        s3 = 1 / al
        if c != 0:
            t = 1 / (c * al)
        elif b1 != 0:
            t = 1 / b1
    else:
        if c != 0:
            s3 = c
        elif b1 != 0:
            t = 1 / b1
    tr.torus(s1=t, s3=s3)
    B = tr.A
    return CanonicalForm("OneQ.MuAlphaZero",
                         params={"q1": B.q1, "alpha": B.alpha, "c": B.c, "b1": B.b1},
                         presentation=B, transforms=tuple(tr.steps))


def _scale_pair(coef, const):
    """Scalars (u, w) with w*const in {0,1} and (w/u)*coef in {0,1}."""
    w = 1 / const if const != 0 else None
    base = w if w is not None else 1
    u = base * coef if coef != 0 else None
    return u, w


def _classify_two_q(A: Bq3) -> CanonicalForm:
    tr = _Trace(A)
    tr.record(_permute_to(A, (True, True, False)))
    tr.record(kill_ab(tr.A))
    tr.record(kill_alpha(tr.A, rescale=False))
    B = tr.A
    if B.q1 * B.q2 != 1:
        return CanonicalForm("TwoQ.Q1Q2NonUnit", params=_q_params(B), presentation=B,
                             transforms=tuple(tr.steps))
    # lam' = s2 lam / s1, b3' = s2 b3
    s1, s2 = _scale_pair(B.lam, B.b3)
    tr.torus(s1=s1, s2=s2)
    B = tr.A
    return CanonicalForm("TwoQ.Q1Q2Unit",
                         params={"q1": B.q1, "lam": B.lam, "b3": B.b3},
                         presentation=B, transforms=tuple(tr.steps))


def _normalize_shifts(A: Bq3):
    """kill_ab then kill_alpha; returns the new presentation and the steps."""
    tr = _Trace(A)
    tr.record(kill_ab(tr.A))
    tr.record(kill_alpha(tr.A))
    return tr.A, tr.steps


def _quantum_zero_count(B: Bq3) -> int:
    return sum(1 for x in (B.c, B.beta, B.lam) if x == 0)


def _quantum_fits(B: Bq3, case: int) -> bool:
    if any(getattr(B, name) != 0 for name in QUANTUM_ZEROS[case]):
        return False
    if case < 4 and any(getattr(B, name) == 0 for name in ("c", "beta", "lam")[: 3 - len(QUANTUM_ZEROS[case])]):
        return False
    triple = tuple(getattr(B, name) for name in QUANTUM_TRIPLES[case])
    return tuple(0 if x == 0 else 1 for x in triple) in QUANTUM_SUPPORTS[case]


def quantum_classify(A: Bq3) -> CanonicalForm:
    """Quantum algebras: q1 = q3 = 1/q2 != 1.

    Rotates generators cyclically (an odd permutation only when no rotation
    reaches a listed support, which inverts q) and then moves the case
    triple to its orbit representative by the torus.
    """
    if not is_quantum(A):
        raise ValueError("not a quantum bi-quadratic algebra")
    K = A.K
    B, steps = _normalize_shifts(A)
    case = _quantum_zero_count(B) + 1
    chosen = None
    for perm in EVEN_PERMS + ODD_PERMS:
        g = MonomialAffineTransform.permutation(K, perm)
        C = apply(B, g) if perm != (1, 2, 3) else B
        C2, extra = _normalize_shifts(C)
        if _quantum_fits(C2, case):
            chosen = (perm, g, C2, extra)
            break
    assert chosen is not None, "no permutation reaches a listed quantum pattern"
    perm, g, C, extra = chosen
    if perm != (1, 2, 3):
        steps.append(g)
    steps.extend(extra)
    triple = tuple(getattr(C, name) for name in QUANTUM_TRIPLES[case])
    rep, t = representative(case, triple, K)
    h = MonomialAffineTransform.torus(K, tuple(1 / x for x in t))
    if not h.is_identity():
        C = apply(C, h)
        steps.append(h)
    got = tuple(getattr(C, name) for name in QUANTUM_TRIPLES[case])
    assert got == rep, (got, rep)
    inv = orbit_invariant(case, got, K)
    params = {"q": C.q1}
    params.update({name: getattr(C, name) for name in ("c", "beta", "lam", "b1", "b2", "b3")})
    return CanonicalForm(
        "ThreeQ.Quantum",
        case=case,
        params=params,
        presentation=C,
        transforms=tuple(steps),
        invariant=inv,
        q_inverted=perm in ODD_PERMS,
    )


def _classify_three_q(A: Bq3) -> CanonicalForm:
    case = three_q_case(A)
    if case == 1:
        return quantum_classify(A)
    B, steps = _normalize_shifts(A)
    tr = _Trace(B)
    tr.steps = list(steps)
    if case == 2:
        # beta' = s1 beta / s2, b2' = s1 b2
        s2, s1 = _scale_pair(B.beta, B.b2)
        tr.torus(s1=s1, s2=s2)
        names = ("beta", "b2")
    elif case == 3:
        # lam' = s2 lam / s1, b3' = s2 b3
        s1, s2 = _scale_pair(B.lam, B.b3)
        tr.torus(s1=s1, s2=s2)
        names = ("lam", "b3")
    elif case == 4:
        # c' = s1 c / s3, b1' = s1 b1
        s3, s1 = _scale_pair(B.c, B.b1)
        tr.torus(s1=s1, s3=s3)
        names = ("c", "b1")
    else:
        names = ()
    C = tr.A
    params = _q_params(C)
    params.update({name: getattr(C, name) for name in names})
    return CanonicalForm(f"ThreeQ.C{case}", case=case, params=params, presentation=C,
                         transforms=tuple(tr.steps))


def classify3(A: Bq3, verify: bool = True):
    """Canonical form of a consistent Bq3 and the transform trace reaching it."""
    if not is_consistent3(A):
        raise InconsistentPresentation("classify3 needs a PBW-consistent presentation")
    k = sum(_nonunit(A))
    if k == 0:
        cf = lie_classify(A)
    elif k == 1:
        cf = _classify_one_q(A)
    elif k == 2:
        cf = _classify_two_q(A)
    else:
        cf = _classify_three_q(A)
    if verify and cf.top != "LieType":
        total = compose_all(cf.transforms, A.K)
        assert apply(A, total) == cf.presentation, "transform trace does not reach the canonical form"
    return cf, list(cf.transforms)


def classify(P):
    """Dispatch on generator count: 2 -> :func:`classify2`, 3 -> :func:`classify3`."""
    if isinstance(P, Bq3):
        return classify3(P)[0]
    if P.n == 2:
        (a, b), = P.a
        return classify2(P.q[0], a, b, P.b[0], P.K)
    if P.n == 3:
        return classify3(Bq3.from_presentation(P))[0]
    raise ValueError("classification covers 2 and 3 generators only")


# ---------------------------------------------------------------- conformance

def _only(B: Bq3, allowed) -> list:
    return [f"{name} should be 0" for name in PARAMS
            if not name.startswith("q") and name not in allowed and getattr(B, name) != 0]


def _in01(B: Bq3, names) -> list:
    return [f"{name} not in {{0,1}}" for name in names if getattr(B, name) not in (0, 1)]


def conformance_problems(cf: CanonicalForm) -> list:
    """Ways in which a canonical form departs from its family's printed shape."""
    B = cf.presentation
    if cf.top == "TwoGen":
        return []
    if not is_consistent3(B):
        return ["canonical presentation is not PBW-consistent"]
    fam = cf.family
    probs = []
    q1, q2, q3 = B.q1, B.q2, B.q3
    if fam.startswith("LieType."):
        tag = fam.split(".")[1]
        if tag != "Unlisted":
            if B != lie_model(tag, B.K):
                probs.append("presentation differs from the model")
            inv = cf.lie
            if (inv.center_dim, inv.nilpotent, inv.solvable) != LIE_INVARIANT_TABLE[tag]:
                probs.append("Lie invariants disagree with the table")
        return probs
    if fam.startswith("OneQ."):
        if not (q1 != 1 and q2 == 1 and q3 == 1):
            probs.append("q pattern")
        if fam == "OneQ.MuAlphaNonzero":
            probs += _only(B, ("alpha", "mu"))
            if not ((B.alpha == 1 and B.mu != -1) or (B.alpha == 0 and B.mu == 1)):
                probs.append("(alpha, mu) not in the listed set")
        else:
            probs += _only(B, ("alpha", "mu", "c", "b1"))
            if B.mu != -B.alpha:
                probs.append("mu != -alpha")
            trip = (B.alpha, B.c, B.b1)
            if not (all(x in (0, 1) for x in trip) or (B.alpha == 1 and B.c == 1)):
                probs.append("(alpha, c, b1) not in the listed set")
        return probs
    if fam.startswith("TwoQ."):
        if not (q1 != 1 and q2 != 1 and q3 == 1):
            probs.append("q pattern")
        if fam == "TwoQ.Q1Q2NonUnit":
            if q1 * q2 == 1:
                probs.append("q1 q2 = 1")
            probs += _only(B, ())
        else:
            if q1 * q2 != 1:
                probs.append("q1 q2 != 1")
            probs += _only(B, ("lam", "b3")) + _in01(B, ("lam", "b3"))
        return probs
    if any(x == 1 for x in (q1, q2, q3)):
        probs.append("q pattern")
    case = three_q_case(B)
    if fam == "ThreeQ.Quantum":
        if case != 1:
            probs.append("not quantum")
        probs += _only(B, ("c", "beta", "lam", "b1", "b2", "b3"))
        k = cf.case
        if not _quantum_fits(B, k):
            probs.append("zero pattern does not match the case")
        triple = tuple(getattr(B, n) for n in QUANTUM_TRIPLES[k])
        inv = orbit_invariant(k, triple, B.K)
        if inv != cf.invariant:
            probs.append("invariant mismatch")
        if triple != expected_representative(inv, B.K):
            probs.append("triple is not the orbit representative")
        return probs
    want = int(fam[-1])
    if case != want:
        probs.append(f"q relations give case {case}")
    allowed = {2: ("beta", "b2"), 3: ("lam", "b3"), 4: ("c", "b1"), 5: ()}[want]
    probs += _only(B, allowed) + _in01(B, allowed)
    return probs


# entries of the quantum data left free by the canonical form in each case
QUANTUM_FREE = {1: ("b1", "b2", "b3"), 2: ("b1", "b2"), 3: ("b1",), 4: ()}


def pinned_params(cf: CanonicalForm) -> dict:
    """The residual parameters a canonical form determines uniquely.

    Quantum forms leave some constant terms anywhere in K; everything else
    is fixed once the family and case are.
    """
    if cf.family != "ThreeQ.Quantum":
        return dict(cf.params)
    return {k: v for k, v in cf.params.items() if k not in QUANTUM_FREE[cf.case]}


# ---------------------------------------------------------------- closure regime

def closure_type(cf: CanonicalForm):
    """Item and (c, beta, lam, b1, b2, b3) shape when every class is trivial.

    Returns None when some class is nontrivial, i.e. when the answer would
    change after adjoining square and cube roots.
    """
    if cf.family != "ThreeQ.Quantum":
        return None
    if any(c.representative != 1 for c in cf.invariant.classes):
        return None
    p = cf.params
    bits = lambda names: tuple(int(p[n] != 0) for n in names)  # noqa: E731
    if cf.case == 1:
        return (1, ())
    if cf.case == 2:
        return (2, bits(("b3",)))
    if cf.case == 3:
        return (3, bits(("b2", "b3")))
    return (4, bits(("b1", "b2", "b3")))


# the printed list under closure: item -> shapes of the parameters that are fixed
CLOSURE_TABLE = [
    (1, ()),
    (2, (0,)), (2, (1,)),
    (3, (1, 1)), (3, (1, 0)), (3, (0, 0)),
    (4, (1, 1, 1)), (4, (1, 1, 0)), (4, (1, 0, 0)), (4, (0, 0, 0)),
]
