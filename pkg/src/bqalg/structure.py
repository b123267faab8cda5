"""Diskew polynomial and generalized Weyl structure of some canonical forms.

A diskew polynomial ring over D = K[t] is generated over D by x, y with::

    x d = sigma(d) x,   y d = tau(d) y,   x y - rho y x = b

Putting h = y x turns it into a generalized Weyl algebra over D[h] with
``sigma(h) = rho h + b`` and ``tau(h) = rho^-1 (h - tau(b))``.  Everything
here lives inside the original 3-generator algebra, so identities are
checked by reducing both sides to PBW normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import CanonicalForm
from .consistency3 import Bq3
from .field import Field
from .freealg import NcPoly
from .rewrite import reduce


class NotCovered(ValueError):
    """The family has no diskew polynomial presentation in this module."""


@dataclass(frozen=True)
class Affine:
    """The endomorphism t -> scale*t + offset of K[t]."""

    scale: object
    offset: object

    def then(self, other: "Affine") -> "Affine":
        """``other`` after ``self`` (other(self(t)))."""
        return Affine(other.scale * self.scale, other.scale * self.offset + other.offset)

    def on(self, f: "Linear") -> "Linear":
        # only the t part moves; h is treated separately
        return Linear(t=f.t * self.scale, const=f.const + f.t * self.offset, h=f.h)

    def is_identity(self) -> bool:
        return self.scale == 1 and self.offset == 0


@dataclass(frozen=True)
class Linear:
    """h_coef*h + t_coef*t + const."""

    t: object = 0
    const: object = 0
    h: object = 0

    def __add__(self, other):
        return Linear(self.t + other.t, self.const + other.const, self.h + other.h)

    def __sub__(self, other):
        return Linear(self.t - other.t, self.const - other.const, self.h - other.h)

    def times(self, c) -> "Linear":
        return Linear(self.t * c, self.const * c, self.h * c)

    def render(self, tname: str) -> str:
        parts = []
        for coef, name in ((self.h, "h"), (self.t, tname), (self.const, "")):
            if coef == 0:
                continue
            if name and coef == 1:
                parts.append(name)
            elif name and coef == -1:
                parts.append(f"-{name}")
            elif name:
                parts.append(f"{coef}*{name}")
            else:
                parts.append(str(coef))
        return " + ".join(parts).replace("+ -", "- ") or "0"


@dataclass(frozen=True)
class DprData:
    """D[x, y; sigma, tau, b, rho] with D = K[t], t, x, y being generators of ``presentation``."""

    K: Field
    base: int
    x: int
    y: int
    sigma: Affine
    tau: Affine
    rho: object
    b: Linear
    presentation: Bq3 | None = None

    def names(self):
        return f"x{self.base}", f"x{self.x}", f"x{self.y}"

    def as_dict(self) -> dict:
        t, x, y = self.names()
        return {
            "base_ring": f"K[{t}]",
            "x": x,
            "y": y,
            "sigma": f"{t} -> {Linear(self.sigma.scale, self.sigma.offset).render(t)}",
            "tau": f"{t} -> {Linear(self.tau.scale, self.tau.offset).render(t)}",
            "rho": str(self.rho),
            "b": self.b.render(t),
        }


@dataclass(frozen=True)
class GwaData:
    """D[h; nu][x, y; sigma, a = h] with nu = tau sigma on t and fixing h."""

    dpr: DprData
    sigma_h: Linear
    tau_h: Linear
    nu: Affine

    def as_dict(self) -> dict:
        t, x, y = self.dpr.names()
        return {
            "base_ring": f"K[{t}][h; nu]",
            "h": f"{y}*{x}",
            "sigma_h": self.sigma_h.render(t),
            "tau_h": self.tau_h.render(t),
            "nu": f"{t} -> {Linear(self.nu.scale, self.nu.offset).render(t)}",
            "a": "h",
        }


def _dpr_of(family: str, B: Bq3) -> DprData:
    K = B.K
    if family == "OneQ.MuAlphaNonzero":
        return DprData(K, 3, 2, 1, Affine(K.one, -B.mu), Affine(K.one, -B.alpha),
                       B.q1, Linear(K.zero, K.zero), B)
    if family == "OneQ.MuAlphaZero":
        sigma = Affine(K.one, B.alpha)
        return DprData(K, 3, 2, 1, sigma, Affine(K.one, -B.alpha), B.q1, Linear(B.c, B.b1), B)
    if family == "TwoQ.Q1Q2Unit":
        return DprData(K, 1, 3, 2, Affine(1 / B.q1, K.zero), Affine(B.q1, K.zero),
                       K.one, Linear(B.lam, B.b3), B)
    raise NotCovered(f"{family} has no diskew polynomial presentation here")


def to_dpr(cf: CanonicalForm) -> DprData:
    """Diskew polynomial data of a canonical form; raises :class:`NotCovered` otherwise."""
    if not isinstance(cf.presentation, Bq3):
        raise NotCovered(f"{cf.family} has no diskew polynomial presentation here")
    return _dpr_of(cf.family, cf.presentation)


def gwa_lift(D: DprData) -> GwaData:
    rho_inv = 1 / D.rho
    sigma_h = Linear(h=D.rho) + D.b
    tau_h = (Linear(h=D.K.one) - D.tau.on(D.b)).times(rho_inv)
    return GwaData(D, sigma_h, tau_h, D.sigma.then(D.tau))


def central_element(D: DprData):
    """``alpha`` with alpha - sigma(alpha) = b, so that C = h + alpha is central.

    Needs rho = 1 and tau sigma = id on t.  Returns None when either fails or
    no alpha of degree at most one exists.
    """
    if D.rho != 1 or not D.sigma.then(D.tau).is_identity():
        return None
    K = D.K
    u, v = D.sigma.scale, D.sigma.offset
    bt, b0 = D.b.t, D.b.const
    # alpha = a1*t: alpha - sigma(alpha) = a1(1-u) t - a1 v
    if u != 1:
        a1 = bt / (1 - u)
    elif bt != 0:
        return None
    elif v != 0:
        a1 = -b0 / v
    else:
        a1 = K.zero
    if -a1 * v != b0:
        return None
    return Linear(t=a1, const=K.zero)


def _element(D: DprData, f: Linear) -> NcPoly:
    n, K = 3, D.K
    t = NcPoly.gen(D.base, n, K)
    h = NcPoly.gen(D.y, n, K) * NcPoly.gen(D.x, n, K)
    return h * f.h + t * f.t + NcPoly.const(f.const, n, K)


def verify_gwa(G: GwaData, central: Linear | None = None) -> dict:
    """Reduce each defining identity to normal form; True means it holds exactly."""
    D = G.dpr
    B = D.presentation
    if B is None:
        raise ValueError("verification needs the presentation the data came from")
    P = B.to_presentation()
    K = D.K
    n = 3
    x, y, t = (NcPoly.gen(i, n, K) for i in (D.x, D.y, D.base))
    h = y * x
    tl = Linear(t=K.one)
    el = lambda f: _element(D, f)  # noqa: E731
    identities = {
        "x*t = sigma(t)*x": x * t - el(D.sigma.on(tl)) * x,
        "y*t = tau(t)*y": y * t - el(D.tau.on(tl)) * y,
        "x*y - rho*y*x = b": x * y - h * D.rho - el(D.b),
        "x*y = sigma(h)": x * y - el(G.sigma_h),
        "x*h = sigma(h)*x": x * h - el(G.sigma_h) * x,
        "y*h = tau(h)*y": y * h - el(G.tau_h) * y,
        "h*t = nu(t)*h": h * t - el(G.nu.on(tl)) * h,
        "tau(sigma(h)) = h": el(_tau_of(G, G.sigma_h)) - h,
    }
    if central is not None:
        C = h + el(central)
        for name, g in (("x", x), ("y", y), (f"x{D.base}", t)):
            identities[f"C*{name} = {name}*C"] = C * g - g * C
    return {name: not reduce(f, P) for name, f in identities.items()}


def _tau_of(G: GwaData, f: Linear) -> Linear:
    """tau applied to h_coef*h + (t part), using tau(h) from the lift."""
    moved = G.dpr.tau.on(Linear(t=f.t, const=f.const))
    return moved + G.tau_h.times(f.h)


def structure_report(cf: CanonicalForm) -> dict:
    D = to_dpr(cf)
    G = gwa_lift(D)
    alpha = central_element(D)
    checks = verify_gwa(G, alpha)
    t = f"x{D.base}"
    return {
        "family": cf.family,
        "dpr": D.as_dict(),
        "gwa": G.as_dict(),
        "central_element": None if alpha is None else {
            "alpha": alpha.render(t),
            "C": (Linear(h=D.K.one) + alpha).render(t),
        },
        "checks": checks,
        "verified": all(checks.values()),
    }
