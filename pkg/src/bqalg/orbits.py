"""Four actions of the torus (K^x)^3 on K^3 and their orbit invariants.

Each action multiplies coordinate i by a Laurent monomial m_i(t1, t2, t3)
with exponents in {-1, 0, 1}.  Orbits are described by the support of the
vector plus, on some strata, a class in K^x / K^x^n.
"""

from __future__ import annotations

from dataclasses import dataclass

from scipy.cluster.hierarchy import DisjointSet

from .field import Field, PowerClass

# EXPONENTS[case][i] = exponents of (t1, t2, t3) in the multiplier of coordinate i
EXPONENTS = {
    1: ((-1, -1, 1), (-1, 1, -1), (1, -1, -1)),
    2: ((-1, -1, 1), (-1, 1, -1), (0, -1, -1)),
    3: ((-1, -1, 1), (-1, 0, -1), (0, -1, -1)),
    4: ((-1, -1, 0), (-1, 0, -1), (0, -1, -1)),
}
CASES = (1, 2, 3, 4)


def act(case: int, t, xi):
    """``t . xi`` for torus element t (three nonzero scalars)."""
    out = []
    for e, x in zip(EXPONENTS[case], xi):
        m = x
        for tj, ej in zip(t, e):
            if ej:
                m = m * tj ** ej
        out.append(m)
    return tuple(out)


def support(xi):
    return tuple(0 if x == 0 else 1 for x in xi)


@dataclass(frozen=True)
class OrbitInvariant:
    case: int
    supp: tuple
    classes: tuple  # PowerClass values, possibly empty

    def as_dict(self):
        return {
            "case": self.case,
            "supp": "".join(str(s) for s in self.supp),
            "classes": [{"n": c.n, "representative": str(c.representative)} for c in self.classes],
        }


def _check_case(case):
    if case not in CASES:
        raise ValueError(f"case must be one of 1-4, got {case}")


def orbit_invariant(case: int, xi, K: Field) -> OrbitInvariant:
    """A complete invariant of the orbit of ``xi``: equal iff same orbit."""
    _check_case(case)
    x1, x2, x3 = (K(v) for v in xi)
    supp = support((x1, x2, x3))
    pc = K.power_class
    classes = ()
    if supp == (1, 1, 1):
        if case == 1:
            classes = (pc(x1 * x2, 2), pc(x1 * x3, 2))
        elif case == 2:
            classes = (pc(x2 / (x1 * x3 ** 2), 4),)
        elif case == 3:
            classes = (pc(x3 / (x1 * x2 ** 2), 3),)
        else:
            classes = (pc(x3 / (x1 * x2), 2),)
    elif sum(supp) == 2:
        if case == 1:
            a, b = [x for x in (x1, x2, x3) if x != 0]
            classes = (pc(a * b, 2),)
        elif case == 2 and supp == (1, 1, 0):
            classes = (pc(x1 * x2, 2),)
    return OrbitInvariant(case, supp, classes)


def _single_root(K, x, n):
    r = K.nth_root(x, n)
    assert r is not None, f"{x} has no {n}-th root although the class says it should"
    return r


def representative(case: int, xi, K: Field):
    """``(rep, t)`` with ``act(case, t, xi) == rep`` and rep the chosen orbit representative."""
    _check_case(case)
    one = K.one
    xi = tuple(K(v) for v in xi)
    x1, x2, x3 = xi
    inv = orbit_invariant(case, xi, K)
    supp = inv.supp
    t = None
    if supp == (1, 1, 1):
        if case == 1:
            rho, eta = (c.representative for c in inv.classes)
            t1 = _single_root(K, x1 * x2 / rho, 2)
            t2 = _single_root(K, x1 * x3 / eta, 2)
            t = (t1, t2, t1 * t2 / x1)
        elif case == 2:
            rho = inv.classes[0].representative
            t2 = _single_root(K, rho * x1 * x3 ** 2 / x2, 4)
            t1 = x1 * x3 / t2 ** 2
            t = (t1, t2, t1 * t2 / x1)
        elif case == 3:
            rho = inv.classes[0].representative
            t1 = _single_root(K, rho * x1 * x2 ** 2 / x3, 3)
            t2 = x1 * x2 / t1 ** 2
            t = (t1, t2, t1 * t2 / x1)
        else:
            rho = inv.classes[0].representative
            t1 = _single_root(K, rho * x1 * x2 / x3, 2)
            t = (t1, x1 / t1, x2 / t1)
    elif sum(supp) == 2:
        t = _one_zero(case, xi, inv, K)
    elif sum(supp) == 1:
        i = supp.index(1)
        j = next(k for k, e in enumerate(EXPONENTS[case][i]) if e)
        e = EXPONENTS[case][i][j]
        t = [one, one, one]
        t[j] = xi[i] ** (-e)
        t = tuple(t)
    else:
        t = (one, one, one)
    rep = act(case, t, xi)
    return rep, t


def _one_zero(case, xi, inv, K):
    one = K.one
    x1, x2, x3 = xi
    supp = inv.supp
    if case == 1:
        rho = inv.classes[0].representative
        if supp == (1, 1, 0):
            t1 = _single_root(K, x1 * x2 / rho, 2)
            return (t1, one, t1 / x1)
        if supp == (1, 0, 1):
            t2 = _single_root(K, x1 * x3 / rho, 2)
            return (one, t2, t2 / x1)
        t3 = _single_root(K, x2 * x3 / rho, 2)
        return (one, t3 / x2, t3)
    if case == 2:
        if supp == (1, 1, 0):
            rho = inv.classes[0].representative
            t1 = _single_root(K, x1 * x2 / rho, 2)
            return (t1, one, t1 / x1)
        if supp == (1, 0, 1):
            t1 = x1 * x3
            return (t1, one, t1 / x1)
        return (x2 / x3, one, x3)
    if case == 3:
        if supp == (1, 1, 0):
            return (one, x1 * x2, x2)
        if supp == (1, 0, 1):
            return (x1 * x3, one, x3)
        return (x2, x3, one)
    if supp == (1, 1, 0):
        return (one, x1, x2)
    if supp == (1, 0, 1):
        return (x1, one, x3)
    return (x2, x3, one)


def expected_representative(inv: OrbitInvariant, K: Field):
    """The representative listed for an invariant, rebuilt from the invariant alone."""
    one, zero = K.one, K.zero
    s = inv.supp
    if not inv.classes:
        return tuple(one if e else zero for e in s)
    r = [c.representative for c in inv.classes]
    if s == (1, 1, 1):
        if inv.case == 1:
            return (one, r[0], r[1])
        if inv.case == 2:
            return (one, r[0], one)
        return (one, one, r[0])
    # one zero with a class: case 1 strata and case 2 with x3 = 0
    if s == (1, 1, 0):
        return (one, r[0], zero)
    if s == (1, 0, 1):
        return (one, zero, r[0])
    return (zero, one, r[0])


def torus_generators(K: Field):
    """Generators of (K^x)^3 for a prime field: a primitive root in each slot."""
    from sympy.ntheory import primitive_root

    g = K(primitive_root(K.characteristic))
    one = K.one
    return [(g, one, one), (one, g, one), (one, one, g)]


@dataclass(frozen=True)
class OrbitCensus:
    case: int
    p: int
    orbits: int
    invariant_values: int
    fibers_match: bool
    representatives_ok: bool


def orbit_census(case: int, K: Field, dense_only: bool = False) -> OrbitCensus:
    """Union-find orbits of K^3 versus fibers of :func:`orbit_invariant`."""
    if not K.finite:
        raise ValueError("orbit census needs a finite field")
    elems = K.nonzero_elements() if dense_only else K.elements()
    points = [(a, b, c) for a in elems for b in elems for c in elems]
    ds = DisjointSet(points)
    for g in torus_generators(K):
        for xi in points:
            ds.merge(xi, act(case, g, xi))
    orbits = ds.subsets()
    fiber_of = {}
    match = True
    for orb in orbits:
        invs = {orbit_invariant(case, xi, K) for xi in orb}
        if len(invs) != 1:
            match = False
            continue
        key = invs.pop()
        if key in fiber_of:
            match = False
        fiber_of[key] = orb
    reps_ok = True
    for xi in points:
        inv = orbit_invariant(case, xi, K)
        rep, t = representative(case, xi, K)
        if rep != expected_representative(inv, K) or act(case, t, xi) != rep:
            reps_ok = False
            break
    values = len({orbit_invariant(case, xi, K) for xi in points})
    return OrbitCensus(case, K.characteristic, len(orbits), values, match, reps_ok)
