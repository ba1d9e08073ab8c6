"""Involute construction and its closed-form Frenet data.

For a regular base curve with arc length s (measured from the domain start)
and a constant c, the involute is

    inv(t) = base(t) + (c - s(t)) * T(t),        c - s > 0 on the subdomain.

Its tangent is the base principal normal, and with f = tau/kappa of the base:

    T~ = N
    N~ = (-T + f B) / sqrt(1 + f^2)
    B~ = ( f T + B) / sqrt(1 + f^2)
    ds/ds* = 1 / (kappa (c - s))                    (s* = involute arc length)
    kappa~ = sqrt(1 + f^2) / (c - s)
    tau~   = f' / (kappa (c - s) (1 + f^2))         (f' = df/ds)

so f~ = tau~/kappa~ equals gamma, the base's geodesic curvature of the
principal-normal image: the involute is a general helix exactly when the
base is a slant helix, and it is planar exactly when the base is a general
helix.  The involute's own gamma has two equivalent closed forms, evaluated
here as independent arithmetic paths:

    gamma~ = ((1+f^2)(f'' k - f' k') - 3 k f f'^2) (1+f^2)^(3/2)
             / (k^2 (1+f^2)^3 + f'^2)^(3/2)
    gamma~ = k^2 (1+f^2)^4 gamma' / (k^2 (1+f^2)^3 + f'^2)^(3/2)

The involute's derivative stack is chained analytically from the base jets
(position re-differencing lives only in the oracle).
"""
from __future__ import annotations

from dataclasses import dataclass
from types import SimpleNamespace

import numpy as np

from . import fd
from .curves import FrenetSample, frenet_data, make_curve
from .errors import BadConstantError, PlanarInvoluteError
from .jets import Jet

__all__ = ["InvoluteSpec", "InvoluteScalars", "build_involute", "involute_frame",
           "involute_scalars", "gamma_tilde_from_gamma", "involute_data"]

_FP_FLOOR = 1e-9   # |df/ds| below this: involute treated as (locally) planar


@dataclass
class InvoluteScalars:
    """Closed-form scalars of the involute at one base point."""

    kappa_tilde: float
    tau_tilde: float
    f_tilde: float
    gamma_tilde: float


class InvoluteSpec:
    """Involute of ``base`` with unwinding constant ``c`` (in arc-length units).

    ``c`` is measured in the base arc length with s = 0 at the base domain
    start.  The working subdomain is clipped so that c - s >= delta; an empty
    result (or an explicit subdomain violating it) is a BAD_CONSTANT error.
    """

    def __init__(self, base, c, subdomain=None, delta=1e-3, epsilon=1):
        if epsilon != 1:
            raise BadConstantError("the unwinding sign is fixed to +1: c - s must be positive")
        self.base = base
        self.c = float(c)
        self.delta = float(delta)
        self.epsilon = 1
        self.arclen = base.arclength()
        explicit = subdomain is not None
        lo, hi = subdomain if explicit else base.domain
        s_lo, s_hi = self.arclen.s_at(np.array([lo, hi]))
        if self.c - s_lo < self.delta:
            raise BadConstantError(
                f"c = {self.c:g} leaves no subdomain with c - s >= {self.delta:g}")
        if self.c - s_hi < self.delta:
            if explicit:
                raise BadConstantError(
                    f"c = {self.c:g} <= s_max = {s_hi:g} on the requested subdomain")
            hi = self.arclen.t_at(self.c - self.delta)
        self.work = (float(lo), float(hi))
        self._curve = None
        # base must have kappa > 0 on the working subdomain
        frenet_data(base, np.linspace(lo, hi, 33))

    @property
    def curve(self):
        if self._curve is None:
            self._curve = build_involute(self)
        return self._curve

    def s_of(self, t):
        return self.arclen.s_at(t)

    def t_of(self, s):
        return self.arclen.t_at(s)

    def grid(self, n):
        return np.linspace(*self.work, int(n))


def build_involute(spec):
    """The involute as a CurveSpec, derivative stack chained from base jets."""
    base = spec.base
    c = spec.c

    def stack(t, _n=5):
        t = np.asarray(t, dtype=float)
        J = base.jet(t, 5)
        d1 = J.deriv()
        v = d1.norm()                      # order 4
        s0 = spec.arclen.s_at(t)
        s_jet = v.antideriv(s0)            # order 5
        T = d1.scale(1.0 / v)              # order 4
        inv = J + T.scale(c - s_jet)       # order 4
        return [inv.derivative(k) for k in range(5)]

    def pos(t):
        t = np.asarray(t, dtype=float)
        d1 = base.deriv(t, 1)
        v = np.linalg.norm(d1, axis=-1)
        lam = spec.c - spec.arclen.s_at(t)
        return base.point(t) + (lam / v)[..., None] * d1

    derivs = {k: (lambda t, _k=k: stack(t)[_k]) for k in range(1, 5)}
    label = f"involute({base.label}, c={c:g})"
    return make_curve(label, spec.work, pos, derivs,
                      curvature_floor=base.curvature_floor,
                      regularity_floor=base.regularity_floor)


def involute_data(spec, t):
    """Vectorized closed-form involute data at base parameters ``t``.

    Everything an indicatrix needs: frames, kappa~, tau~, f~, gamma~ (both
    forms), their arc-length derivatives, and the parametrization factor
    ds*/dt.  All derivatives are with respect to the involute arc length s*
    unless suffixed otherwise.
    """
    t = np.asarray(t, dtype=float)
    b = frenet_data(spec.base, t)
    s = spec.arclen.s_at(t)
    lam = spec.c - s
    if np.min(lam) < spec.delta * (1 - 1e-12):
        raise BadConstantError("c - s fell below the clipping distance")

    w2 = 1.0 + b.f**2
    sw = np.sqrt(w2)
    kt = sw / lam
    tt = b.fp / (b.kappa * lam * w2)
    denom = (b.kappa**2 * w2**3 + b.fp**2) ** 1.5
    gamma_main = ((w2 * (b.fpp * b.kappa - b.fp * b.kappap)
                   - 3.0 * b.kappa * b.f * b.fp**2) * w2**1.5) / denom
    gamma_alt = b.kappa**2 * w2**4 * b.gammap / denom

    Ti = b.N
    Ni = (-b.T + b.f[..., None] * b.B) / sw[..., None]
    Bi = np.cross(Ti, Ni)

    dsdt = b.kappa * lam * b.v            # ds*/dt
    kt_prime_s = (b.f * b.fp / sw) / lam + sw / lam**2     # dkappa~/ds (base s)
    return SimpleNamespace(
        t=t, base=b, s=s, lam=lam,
        kappa=kt, tau=tt, f=b.gamma,
        fp=b.gammap / (b.kappa * lam),     # df~/ds*
        kappap=kt_prime_s / (b.kappa * lam),  # dkappa~/ds*
        gamma=gamma_main, gamma_alt=gamma_alt,
        T=Ti, N=Ni, B=Bi,
        dsdt=dsdt,
    )


def involute_frame(spec, s):
    """Frenet sample of the involute at base arc length ``s``.

    Returns ``(sample, ds_dsstar)``; the sample's ``t`` is the base parameter
    and its ``s`` is the involute's own arc length from the subdomain start.
    """
    t = float(spec.t_of(s))
    d = involute_data(spec, t)
    s_star = float(spec.curve.arclength().s_at(t))
    sample = FrenetSample(t=t, s=s_star, T=d.T, N=d.N, B=d.B,
                          kappa=float(d.kappa), tau=float(d.tau),
                          f=float(d.f), gamma_g=float(d.gamma))
    ds_dsstar = 1.0 / (float(d.base.kappa) * float(d.lam))
    return sample, ds_dsstar


def involute_scalars(spec, s):
    """kappa~, tau~, f~ and gamma~ of the involute at base arc length ``s``."""
    t = float(spec.t_of(s))
    d = involute_data(spec, t)
    f_tilde = float(d.tau) / float(d.kappa)
    # f~ must reproduce the base gamma (same quantity through two routes)
    assert abs(f_tilde - float(d.base.gamma)) <= 1e-8 * max(1.0, abs(f_tilde))
    return InvoluteScalars(kappa_tilde=float(d.kappa), tau_tilde=float(d.tau),
                           f_tilde=f_tilde, gamma_tilde=float(d.gamma))


def gamma_tilde_from_gamma(spec, s):
    """gamma~ of the involute via the base-gamma route.

    Undefined (PLANAR_INVOLUTE) where df/ds of the base vanishes: the
    involute is planar there and the quantity degenerates to 0/0 geometry.
    """
    t = float(spec.t_of(s))
    d = involute_data(spec, t)
    if abs(float(d.base.fp)) < _FP_FLOOR:
        raise PlanarInvoluteError(
            "base f' ~ 0: involute is (locally) planar, gamma~ undefined")
    return float(d.gamma_alt)


def fp_star_fn(spec):
    """df~/ds* as a standalone function of the base parameter (analytic)."""
    def fn(t):
        return involute_data(spec, t).fp
    return fn


def fpp_star(spec, t):
    """d2 f~ / ds*^2 via one differencing layer on the analytic df~/ds*."""
    fn = fp_star_fn(spec)
    d = involute_data(spec, np.asarray(t, dtype=float))
    return fd.diff(fn, np.asarray(t, dtype=float)) / d.dsdt


def gammap_star(spec, t):
    """d gamma~ / ds* via one differencing layer on the closed form."""
    def fn(tt):
        return involute_data(spec, tt).gamma
    d = involute_data(spec, np.asarray(t, dtype=float))
    return fd.diff(fn, np.asarray(t, dtype=float)) / d.dsdt
