"""Spherical indicatrices of the involute: tangent, principal-normal, binormal.

Each indicatrix is the unit-sphere curve traced by one frame vector of a
host curve (here: the involute).  With k, f, f', f'', k', and gamma denoting
the host's curvature, torsion ratio, their arc-length derivatives and the
geodesic curvature of its normal image, the closed forms are:

tangent image (natural parameter: d s_t*/d s = k):
    kappa_t = sqrt(1+f^2)
    tau_t   = f' / (k (1+f^2))
    T_t = N,  N_t = (-T + f B)/sqrt(1+f^2),  B_t = (f T + B)/sqrt(1+f^2)
    => tau_t / kappa_t = gamma: the image is a circle iff the host is a
       general helix, a spherical helix iff the host is a slant helix.

principal-normal image (d s_n*/d s = k sqrt(1+f^2)), rho^2 = f'^2 + k^2 (1+f^2)^3:
    kappa_n = rho / (k (1+f^2)^(3/2)) = sqrt(1 + gamma^2)
    The historically stated variant rho / (k^2 (1+f^2)^3) fails the
    unit-sphere bound kappa >= 1 (take f' = 0: the image is a great circle
    with kappa_n = 1, the stated value is 1/(k (1+f^2)^(3/2))).  Both are
    evaluated; the stated one is kept only as an expected-fail diagnostic,
    together with its torsion bracket (sigma) and geodesic-curvature line,
    which are validated against the finite-difference oracle only.

binormal image (d s_b*/d s = tau; requires tau != 0):
    kappa_b = sqrt(1+f^2)/f   (sign rides on f; |kappa_b| is geometric)
    tau_b   = -f' / (k f (1+f^2))
    T_b = -N, N_b = (-T + f B)/sqrt(1+f^2), B_b = (-f T - B)/sqrt(1+f^2)
    => tau_b / kappa_b = -gamma.

The frame identities T_t = -T_b, N_t = T_n = N_b, B_t = -B_b hold exactly
for these algebraic frames; against oriented point-cloud frames they hold up
to the orientation signs carried by tau.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from types import SimpleNamespace

import numpy as np

from . import fd
from .curves import FrenetSample, frenet_data, make_curve
from .errors import PlanarInvoluteError
from .involute import InvoluteSpec, involute_data
from .jets import cross as jcross
from .jets import dot as jdot
from .oracle import frenet_fd_point

__all__ = [
    "IndicatrixKind",
    "IndicatrixScalars",
    "indicatrix_curve",
    "tangent_indicatrix_data",
    "normal_indicatrix_data",
    "binormal_indicatrix_data",
    "frenet_vector_corollary",
    "similar_curves_check",
    "host_from_involute",
    "host_from_curve",
]

_F_FLOOR = 1e-9       # |f| below this: torsion ~ 0, binormal image degenerate
_SIGMA_STEP = 5e-3    # outer step when differencing quantities that already difference


class IndicatrixKind(str, Enum):
    TANGENT = "tangent"
    PRINCIPAL_NORMAL = "principal_normal"
    BINORMAL = "binormal"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        name = str(name).lower()
        if name in ("normal", "principal_normal", "principal-normal"):
            return cls.PRINCIPAL_NORMAL
        return cls(name)


@dataclass
class IndicatrixScalars:
    """Scalars of one indicatrix sample (dimensionless: unit-sphere curve).

    ``kappa`` is the geometric (positive) curvature; for the binormal image
    the signed value is kept in ``kappa_signed``.  For the principal-normal
    image the diagnostics carry the stated-but-inconsistent curvature
    (``kappa_stated``) and local finite-difference oracle values.
    """

    kappa: float
    tau: float
    gamma_g: float
    rho: float
    sigma: float | None = None
    kappa_signed: float | None = None
    kappa_stated: float | None = None
    kappa_oracle: float | None = None
    tau_oracle: float | None = None


# -- hosts -------------------------------------------------------------------


class Host:
    """A curve exposing the scalar chain the indicatrix formulas consume."""

    def __init__(self, label, domain, values_fn, fpp_fn, gammap_fn, frame_stack_fn):
        self.label = label
        self.domain = domain
        self.values = values_fn
        self.fpp = fpp_fn
        self.gammap = gammap_fn
        self.frame_stack = frame_stack_fn
        self._curves = {}

    def curve(self, kind):
        kind = IndicatrixKind.parse(kind)
        if kind not in self._curves:
            self._curves[kind] = _build_indicatrix_curve(self, kind)
        return self._curves[kind]


def host_from_involute(spec):
    """Host view of an involute: closed forms chained from the base curve."""
    from .involute import fpp_star, gammap_star

    def values(t):
        return involute_data(spec, t)

    def frame_stack(t):
        t = np.asarray(t, dtype=float)
        J = spec.base.jet(t, 5)
        ch = _frame_chain(J)
        # involute frame in terms of the base frame
        Ti = ch.N
        sw = (1.0 + ch.f * ch.f).sqrt()
        Ni = (-ch.T + ch.B.scale(ch.f)).scale(1.0 / sw)
        Bi = jcross(Ti, Ni)
        return {"T": Ti, "N": Ni, "B": Bi}

    return Host(label=f"involute({spec.base.label})", domain=spec.work,
                values_fn=values,
                fpp_fn=lambda t: fpp_star(spec, t),
                gammap_fn=lambda t: gammap_star(spec, t),
                frame_stack_fn=frame_stack)


def host_from_curve(curve):
    """Host view of a plain curve (every chain entry is analytic)."""

    def values(t):
        d = frenet_data(curve, t)
        return SimpleNamespace(kappa=d.kappa, f=d.f, fp=d.fp, kappap=d.kappap,
                               gamma=d.gamma, gammap=d.gammap,
                               T=d.T, N=d.N, B=d.B, dsdt=d.v)

    def frame_stack(t):
        J = curve.jet(np.asarray(t, dtype=float), 5)
        ch = _frame_chain(J)
        return {"T": ch.T, "N": ch.N, "B": ch.B}

    return Host(label=curve.label, domain=curve.domain,
                values_fn=values,
                fpp_fn=lambda t: frenet_data(curve, t).fpp,
                gammap_fn=lambda t: frenet_data(curve, t).gammap,
                frame_stack_fn=frame_stack)


def _frame_chain(J):
    d1 = J.deriv()
    d2 = d1.deriv()
    v = d1.norm()
    u = jcross(d1, d2)
    m = u.norm()
    kappa = m / (v * v * v)
    tau = jdot(u, d2.deriv()) / (m * m)
    f = tau / kappa
    T = d1.scale(1.0 / v)
    B = u.scale(1.0 / m)
    N = jcross(B, T)
    return SimpleNamespace(v=v, kappa=kappa, tau=tau, f=f, T=T, N=N, B=B)


def _host_of(spec_or_host):
    if isinstance(spec_or_host, Host):
        return spec_or_host
    if isinstance(spec_or_host, InvoluteSpec):
        if not hasattr(spec_or_host, "_indicatrix_host"):
            spec_or_host._indicatrix_host = host_from_involute(spec_or_host)
        return spec_or_host._indicatrix_host
    return host_from_curve(spec_or_host)


# -- indicatrix curves --------------------------------------------------------


def _build_indicatrix_curve(host, kind):
    attr = {"tangent": "T", "principal_normal": "N", "binormal": "B"}[kind.value]

    if kind is IndicatrixKind.BINORMAL:
        probe = np.linspace(*host.domain, 65)
        e = host.values(probe)
        if np.min(np.abs(e.kappa * e.f)) < _F_FLOOR:
            raise PlanarInvoluteError(
                "torsion vanishes on the subdomain: binormal image degenerates to a point")

    def pos(t):
        return getattr(host.values(t), attr)

    def stack(t):
        vj = host.frame_stack(t)[attr]
        return [vj.derivative(k) for k in range(vj.order + 1)]

    n_analytic = 2 if kind is not IndicatrixKind.TANGENT else 3
    derivs = {k: (lambda t, _k=k: stack(t)[_k]) for k in range(1, n_analytic + 1)}
    return make_curve(f"{kind.value}_indicatrix({host.label})", host.domain, pos, derivs)


def indicatrix_curve(spec, kind):
    """The unit-sphere image of one frame vector of the involute, as a curve."""
    return _host_of(spec).curve(kind)


# -- closed-form data ---------------------------------------------------------


def tangent_arrays(host, t):
    t = np.asarray(t, dtype=float)
    e = host.values(t)
    w2 = 1.0 + e.f**2
    sw = np.sqrt(w2)
    kappa = sw
    tau = e.fp / (e.kappa * w2)
    T = e.N
    N = (-e.T + e.f[..., None] * e.B) / sw[..., None]
    B = np.cross(T, N)
    fpp = host.fpp(t)
    den = (e.kappa**2 * w2**3 + e.fp**2) ** 1.5
    gamma = ((w2 * (fpp * e.kappa - e.fp * e.kappap) - 3.0 * e.kappa * e.f * e.fp**2)
             * w2**1.5) / den
    gamma_alt = e.kappa**2 * w2**4 * host.gammap(t) / den
    rho = np.sqrt(e.fp**2 + e.kappa**2 * w2**3)
    return SimpleNamespace(t=t, kappa=kappa, tau=tau, gamma=gamma, gamma_alt=gamma_alt,
                           rho=rho, T=T, N=N, B=B, dsdt=e.kappa * e.dsdt, host=e)


def _sigma_terms(host, t):
    """The stated torsion bracket of the principal-normal image, termwise.

    Inner primes are taken along the host arc length; the bracket is known
    to be dimensionally inconsistent and is shipped for diagnostics only.
    """
    t = np.asarray(t, dtype=float)
    e = host.values(t)
    w2 = 1.0 + e.f**2
    rho = np.sqrt(e.fp**2 + e.kappa**2 * w2**3)

    def X(tt):
        ee = host.values(tt)
        ww = 1.0 + ee.f**2
        rr = np.sqrt(ee.fp**2 + ee.kappa**2 * ww**3)
        return ee.kappa**2 * ww**2.5 / rr

    def Y(tt):
        ee = host.values(tt)
        ww = 1.0 + ee.f**2
        rr = np.sqrt(ee.fp**2 + ee.kappa**2 * ww**3)
        return ee.kappa * ee.fp * ww**1.5 / rr

    DX = fd.diff(X, t) / e.dsdt
    DY = fd.diff(Y, t) / e.dsdt
    term1 = -e.f * e.fp**2 * e.kappa**2 * w2**3 / rho**2
    term2 = (-e.fp * w2**1.5 / rho) * DX
    term3 = DY * (e.kappa * w2**2.5 / rho)
    return term1 + term2 + term3


def normal_arrays(host, t, with_oracle=False):
    t = np.asarray(t, dtype=float)
    e = host.values(t)
    w2 = 1.0 + e.f**2
    sw = np.sqrt(w2)
    rho = np.sqrt(e.fp**2 + e.kappa**2 * w2**3)
    kappa_corr = rho / (e.kappa * w2**1.5)          # = sqrt(1 + gamma_host^2)
    kappa_stated = rho / (e.kappa**2 * w2**3)
    stated_norm = e.kappa * w2**1.5                 # |N_n|, |B_n| of the stated frame

    T = (-e.T + e.f[..., None] * e.B) / sw[..., None]
    Nn = ((e.f * e.fp / sw)[..., None] * e.T
          - (e.kappa * w2**1.5)[..., None] * e.N
          + (e.fp / sw)[..., None] * e.B) / rho[..., None]
    Bn = np.cross(T, Nn)

    sigma = _sigma_terms(host, t)
    dsn_dt = e.kappa * sw * e.dsdt

    def sigma_fn(tt):
        return _sigma_terms(host, tt)

    sigp = fd.diff(sigma_fn, t, step=_SIGMA_STEP) / dsn_dt
    num = e.kappa**2 * (w2 * (sigp * e.kappa + 2.0 * sigma * e.kappap)
                        + 6.0 * sigma * e.kappa * e.f * e.fp) * w2**4.5
    gamma_stated = num / (rho**2 + sigma**2 * e.kappa**4 * w2**6) ** 1.5

    out = SimpleNamespace(t=t, kappa=kappa_corr, kappa_stated=kappa_stated,
                          stated_norm=stated_norm, tau=sigma, sigma=sigma,
                          gamma=gamma_stated, rho=rho, T=T, N=Nn, B=Bn,
                          dsdt=dsn_dt, host=e)
    if with_oracle:
        def posn(tt):
            return host.values(tt).N
        pairs = [frenet_fd_point(posn, float(ti))[:2] for ti in np.atleast_1d(t)]
        ko = np.array([p[0] for p in pairs])
        to = np.array([p[1] for p in pairs])
        if t.ndim == 0:
            ko, to = ko[0], to[0]
        out.kappa_oracle = ko
        out.tau_oracle = to
    return out


def binormal_arrays(host, t):
    t = np.asarray(t, dtype=float)
    e = host.values(t)
    if np.min(np.abs(e.f)) < _F_FLOOR:
        raise PlanarInvoluteError("f ~ 0: binormal image curvature is singular")
    w2 = 1.0 + e.f**2
    sw = np.sqrt(w2)
    kappa_signed = sw / e.f
    tau = -e.fp / (e.kappa * e.f * w2)
    T = -e.N
    N = (-e.T + e.f[..., None] * e.B) / sw[..., None]
    B = np.cross(T, N)

    tau_host = e.kappa * e.f

    def ratio_fn(tt):
        ee = host.values(tt)
        return ee.fp / (ee.kappa * ee.f)

    Dratio = fd.diff(ratio_fn, t) / e.dsdt
    num = (w2**2.5 * (-e.f * e.fp**2 * tau_host - tau_host**2 * e.f**2 * Dratio)
           + 3.0 * tau_host * e.f**3 * e.fp**2 * w2**1.5)
    gamma = num / (tau_host**2 * w2**3 + e.f**2 * e.fp**2) ** 1.5
    gamma_alt = -host.gammap(t) / (e.kappa * sw * (1.0 + e.gamma**2) ** 1.5)
    rho = np.sqrt(e.fp**2 + e.kappa**2 * w2**3)
    return SimpleNamespace(t=t, kappa=np.abs(kappa_signed), kappa_signed=kappa_signed,
                           tau=tau, gamma=gamma, gamma_alt=gamma_alt, rho=rho,
                           T=T, N=N, B=B, dsdt=tau_host * e.dsdt, host=e)


# -- pointwise operations (base arc length in, sample + scalars out) ----------


def _point_sample(host, curve, t, a):
    s_ind = float(curve.arclength().s_at(t))
    return FrenetSample(t=float(t), s=s_ind, T=np.asarray(a.T, float).reshape(3),
                        N=np.asarray(a.N, float).reshape(3),
                        B=np.asarray(a.B, float).reshape(3),
                        kappa=float(a.kappa), tau=float(a.tau),
                        f=float(a.tau) / float(a.kappa), gamma_g=float(a.gamma))


def tangent_indicatrix_data(spec, s):
    host = _host_of(spec)
    t = float(spec.t_of(s)) if isinstance(spec, InvoluteSpec) else float(s)
    a = tangent_arrays(host, t)
    sample = _point_sample(host, host.curve(IndicatrixKind.TANGENT), t, a)
    scal = IndicatrixScalars(kappa=float(a.kappa), tau=float(a.tau),
                             gamma_g=float(a.gamma), rho=float(a.rho))
    return sample, scal


def normal_indicatrix_data(spec, s):
    host = _host_of(spec)
    t = float(spec.t_of(s)) if isinstance(spec, InvoluteSpec) else float(s)
    a = normal_arrays(host, t, with_oracle=True)
    sample = _point_sample(host, host.curve(IndicatrixKind.PRINCIPAL_NORMAL), t, a)
    scal = IndicatrixScalars(kappa=float(a.kappa), tau=float(a.tau),
                             gamma_g=float(a.gamma), rho=float(a.rho),
                             sigma=float(a.sigma),
                             kappa_stated=float(a.kappa_stated),
                             kappa_oracle=float(a.kappa_oracle),
                             tau_oracle=float(a.tau_oracle))
    return sample, scal


def binormal_indicatrix_data(spec, s):
    host = _host_of(spec)
    t = float(spec.t_of(s)) if isinstance(spec, InvoluteSpec) else float(s)
    a = binormal_arrays(host, t)
    sample = _point_sample(host, host.curve(IndicatrixKind.BINORMAL), t, a)
    # f of the sample uses the signed curvature so tau/kappa = -gamma holds
    sample.f = float(a.tau) / float(a.kappa_signed)
    scal = IndicatrixScalars(kappa=float(a.kappa), tau=float(a.tau),
                             gamma_g=float(a.gamma), rho=float(a.rho),
                             kappa_signed=float(a.kappa_signed))
    return sample, scal


@dataclass
class CorollaryResiduals:
    """Norms of the four frame identities between the three indicatrices."""

    t_t_plus_t_b: float
    n_t_minus_t_n: float
    n_t_minus_n_b: float
    b_t_plus_b_b: float

    def max(self):
        return max(self.t_t_plus_t_b, self.n_t_minus_t_n,
                   self.n_t_minus_n_b, self.b_t_plus_b_b)


def frenet_vector_corollary(spec, s):
    """Closed-form residuals of T_t = -T_b, N_t = T_n = N_b, B_t = -B_b."""
    host = _host_of(spec)
    t = float(spec.t_of(s)) if isinstance(spec, InvoluteSpec) else float(s)
    ta = tangent_arrays(host, t)
    na = normal_arrays(host, t)
    ba = binormal_arrays(host, t)
    return CorollaryResiduals(
        t_t_plus_t_b=float(np.linalg.norm(ta.T + ba.T)),
        n_t_minus_t_n=float(np.linalg.norm(ta.N - na.T)),
        n_t_minus_n_b=float(np.linalg.norm(ta.N - ba.N)),
        b_t_plus_b_b=float(np.linalg.norm(ta.B + ba.B)),
    )


@dataclass
class SimilarCurvesReport:
    """Tangent and binormal images as similar curves under s_b* <-> s_t*."""

    max_normal_deviation: float
    ratio_rel_err: float
    n: int
    below_resolution: bool


def similar_curves_check(spec, grid):
    """Verify the shared principal normal and the arc-length transformation.

    The transformation ratio d s_b*/d s_t* must equal kappa_t/kappa_b (= |f|
    of the host); it is cross-checked against quadrature along both images.
    Grids under 64 points are flagged below-resolution.
    """
    host = _host_of(spec)
    grid = np.asarray(grid, dtype=float)
    ta = tangent_arrays(host, grid)
    ba = binormal_arrays(host, grid)
    dev = float(np.max(np.linalg.norm(ta.N - ba.N, axis=-1)))

    s_t = host.curve(IndicatrixKind.TANGENT).arclength().s_at(grid)
    s_b = host.curve(IndicatrixKind.BINORMAL).arclength().s_at(grid)
    ratio_quad = fd.series_deriv(s_b, grid) / fd.series_deriv(s_t, grid)
    ratio_closed = np.abs(ta.kappa / ba.kappa_signed)
    inner = slice(4, -4)  # end stencils are low-order
    rel = float(np.max(np.abs(ratio_quad[inner] - ratio_closed[inner])
                       / ratio_closed[inner]))
    return SimilarCurvesReport(max_normal_deviation=dev, ratio_rel_err=rel,
                               n=len(grid), below_resolution=len(grid) < 64)
