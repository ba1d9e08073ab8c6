"""Regular parametric space curves and their Frenet apparatus.

A :class:`CurveSpec` bundles a position evaluator with derivative evaluators
up to order 5 (analytic where supplied, synthesized by high-order central
differences otherwise).  All Frenet quantities are computed for arbitrary
regular parametrizations:

    kappa = |g' x g''| / |g'|^3
    tau   = det(g', g'', g''') / |g' x g''|^2
    f     = tau / kappa
    gamma = f' / (kappa (1 + f^2)^(3/2))     (f' taken w.r.t. arc length)

``gamma`` is the geodesic curvature of the spherical image of the principal
normal; it is constant exactly on slant helices.  Derivatives of kappa, tau,
f and gamma with respect to arc length come out of the same jet chain, so no
symbolic differentiation is needed anywhere.

Everything here is pure: evaluators are never mutated and may be called from
multiple threads at once.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import SimpleNamespace

import numpy as np

from . import fd
from .errors import NonRegularError, VanishingCurvatureError
from .jets import Jet, VJet, cross, dot

__all__ = [
    "CurveSpec",
    "FrenetSample",
    "FrameField",
    "ArcLengthMap",
    "make_curve",
    "frenet_apparatus",
    "gamma_geodesic",
    "arclength_map",
    "frame_field",
    "frenet_data",
    "transformed",
    "scaled",
    "reparametrize",
]

DEFAULT_CURVATURE_FLOOR = 1e-9
DEFAULT_REGULARITY_FLOOR = 1e-9
MAX_ORDER = 5

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


class CurveSpec:
    """A parametric curve on a closed interval with a 5-deep derivative stack."""

    def __init__(self, label, domain, position, derivs, stack_fn=None,
                 curvature_floor=DEFAULT_CURVATURE_FLOOR,
                 regularity_floor=DEFAULT_REGULARITY_FLOOR):
        lo, hi = float(domain[0]), float(domain[1])
        if not lo < hi:
            raise ValueError(f"empty domain [{lo}, {hi}]")
        self.label = label
        self.domain = (lo, hi)
        self.position = position
        self.derivs = tuple(derivs)
        self._stack_fn = stack_fn
        self.curvature_floor = curvature_floor
        self.regularity_floor = regularity_floor
        self._alm = None
        if len(self.derivs) != MAX_ORDER:
            raise ValueError("derivative stack must cover orders 1..5")

    # -- evaluation ---------------------------------------------------------

    def point(self, t):
        return np.asarray(self.position(np.asarray(t, dtype=float)), dtype=float)

    def deriv(self, t, order):
        if not 1 <= order <= MAX_ORDER:
            raise ValueError("derivative order must be in 1..5")
        return np.asarray(self.derivs[order - 1](np.asarray(t, dtype=float)), dtype=float)

    def jet(self, t, order=MAX_ORDER):
        """Position jet at ``t`` (scalar or array) up to ``order``."""
        t = np.asarray(t, dtype=float)
        if self._stack_fn is not None:
            stack = self._stack_fn(t)[: order + 1]
            return VJet.from_derivatives(stack)
        stack = [self.point(t)] + [self.deriv(t, k) for k in range(1, order + 1)]
        return VJet.from_derivatives(stack)

    # -- arc length ---------------------------------------------------------

    def speed(self, t):
        return np.linalg.norm(self.deriv(t, 1), axis=-1)

    def arclength(self, n_nodes=129):
        """Cached arc-length map with s = 0 at the domain start."""
        if self._alm is None or len(self._alm.t_nodes) != n_nodes:
            self._alm = arclength_map(self, n_nodes)
        return self._alm

    # -- consistency checks -------------------------------------------------

    def check_regular(self, n=257):
        t = np.linspace(*self.domain, n)
        v = self.speed(t)
        if np.min(v) <= self.regularity_floor:
            bad = t[int(np.argmin(v))]
            raise NonRegularError(f"|gamma'| = {np.min(v):.3e} at t = {bad:.6g}")

    def check_derivatives(self, rtol=1e-5, n_probe=7):
        """Verify each stacked derivative against a difference of the one below."""
        lo, hi = self.domain
        pad = 0.05 * (hi - lo)
        t = np.linspace(lo + pad, hi - pad, n_probe)
        prev = self.point
        for k in range(1, MAX_ORDER + 1):
            got = self.deriv(t, k)
            ref = fd.diff(prev, t, order_hint=k)
            scale = np.maximum(1.0, np.abs(ref))
            err = np.max(np.abs(got - ref) / scale)
            if err > rtol:
                raise ValueError(
                    f"{self.label}: order-{k} derivative disagrees with "
                    f"difference estimate (rel err {err:.3e})")
            prev = self.derivs[k - 1]

    def with_domain(self, lo, hi):
        return CurveSpec(self.label, (lo, hi), self.position, self.derivs,
                         stack_fn=self._stack_fn,
                         curvature_floor=self.curvature_floor,
                         regularity_floor=self.regularity_floor)


def make_curve(label, domain, position, derivs=None, stack_fn=None, **kw):
    """Assemble a CurveSpec, synthesizing missing derivative orders.

    ``derivs`` maps order -> evaluator for whichever orders are analytic;
    the rest are filled with 7-point central differences of the next lower
    evaluator, step eps**(1/(k+2)) scaled by |t|.
    """
    supplied = dict(derivs or {})
    chain = [position]
    for k in range(1, MAX_ORDER + 1):
        if k in supplied:
            chain.append(supplied[k])
        else:
            below = chain[k - 1]
            chain.append(_synth_deriv(below, k))
    return CurveSpec(label, domain, position, chain[1:], stack_fn=stack_fn, **kw)


def _synth_deriv(below, order):
    def d(t, _below=below, _order=order):
        return fd.diff(_below, t, step=fd.synth_step(t, _order))
    return d


# -- Frenet data ------------------------------------------------------------


@dataclass
class FrenetSample:
    """Pointwise Frenet data.  Vectors are unit, right-handed (B = T x N)."""

    t: float
    s: float
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: float
    tau: float
    f: float
    gamma_g: float


@dataclass
class FrameField:
    """An ordered grid of Frenet samples with monotone arc length."""

    samples: list
    grid: np.ndarray

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        if np.any(np.diff(self.grid) <= 0):
            raise ValueError("grid must be strictly increasing")
        s = self.s
        if len(s) > 1 and np.any(np.diff(s) <= 0):
            raise ValueError("arc length must be strictly increasing")

    def _col(self, name):
        return np.array([getattr(smp, name) for smp in self.samples])

    @property
    def t(self):
        return self._col("t")

    @property
    def s(self):
        return self._col("s")

    @property
    def kappa(self):
        return self._col("kappa")

    @property
    def tau(self):
        return self._col("tau")

    @property
    def f(self):
        return self._col("f")

    @property
    def gamma(self):
        return self._col("gamma_g")

    @property
    def T(self):
        return self._col("T")

    @property
    def N(self):
        return self._col("N")

    @property
    def B(self):
        return self._col("B")

    def __len__(self):
        return len(self.samples)


def frenet_data(curve, t, check=True):
    """All Frenet scalars/vectors and their arc-length derivatives at ``t``.

    Vectorized over ``t``.  Returns a namespace of arrays: v, kappa, tau, f,
    fp, fpp, kappap, gamma, gammap (p-suffixed quantities are d/ds) and the
    frame T, N, B.  Raises on non-regular points and on curvature below the
    floor (principal normal undefined there).
    """
    t = np.asarray(t, dtype=float)
    J = curve.jet(t, MAX_ORDER)
    d1 = J.deriv()
    d2 = d1.deriv()
    d3 = d2.deriv()
    # floor checks on plain values, before any jet division can produce noise
    v0 = np.linalg.norm(d1.value(), axis=-1)
    if check and np.min(v0) <= curve.regularity_floor:
        raise NonRegularError(f"{curve.label}: |gamma'| below regularity floor")
    u = cross(d1, d2)
    m0 = np.linalg.norm(u.value(), axis=-1)
    k0 = m0 / v0**3
    if check and np.min(k0) <= curve.curvature_floor:
        raise VanishingCurvatureError(
            f"{curve.label}: curvature {np.min(k0):.3e} at or below floor")
    v = d1.norm()
    m = u.norm()
    kappa = m / (v * v * v)
    det = dot(u, d3)
    tau = det / (m * m)
    f = tau / kappa
    T = d1.scale(1.0 / v)
    B = u.scale(1.0 / m)
    N = cross(B, T)

    fp = f.deriv() / v              # df/ds, jet of order 1
    fpp = (fp.deriv() / v).value()  # d2f/ds2
    kappap = (kappa.deriv() / v).value()
    w2 = 1.0 + f * f
    gamma_jet = fp / (kappa * (w2 * w2.sqrt()))
    gammap = (gamma_jet.deriv() / v).value()

    Tv, Nv = T.value(), N.value()
    return SimpleNamespace(
        t=t,
        v=v.value(),
        kappa=kappa.value(),
        tau=tau.value(),
        f=f.value(),
        fp=fp.value(),
        fpp=fpp,
        kappap=kappap,
        gamma=gamma_jet.value(),
        gammap=gammap,
        T=Tv,
        N=Nv,
        B=np.cross(Tv, Nv),
    )


def frenet_apparatus(curve, t):
    """Frenet sample at a single parameter value."""
    data = frenet_data(curve, float(t))
    s = float(curve.arclength().s_at(t))
    return FrenetSample(t=float(t), s=s, T=data.T, N=data.N, B=data.B,
                        kappa=float(data.kappa), tau=float(data.tau),
                        f=float(data.f), gamma_g=float(data.gamma))


def gamma_geodesic(curve, t):
    """Geodesic curvature of the principal-normal image at ``t``."""
    return float(frenet_data(curve, float(t)).gamma)


def frame_field(curve, n=None, grid=None):
    """Sample the Frenet apparatus on a grid (uniform over the domain by default)."""
    if grid is None:
        grid = np.linspace(*curve.domain, 513 if n is None else int(n))
    grid = np.asarray(grid, dtype=float)
    data = frenet_data(curve, grid)
    s = curve.arclength().s_at(grid)
    samples = [
        FrenetSample(t=float(grid[i]), s=float(s[i]), T=data.T[i], N=data.N[i],
                     B=data.B[i], kappa=float(data.kappa[i]), tau=float(data.tau[i]),
                     f=float(data.f[i]), gamma_g=float(data.gamma[i]))
        for i in range(len(grid))
    ]
    return FrameField(samples=samples, grid=grid)


# -- arc length -------------------------------------------------------------


@dataclass
class ArcLengthMap:
    """Monotone map t <-> s built from adaptive quadrature of the speed."""

    t_nodes: np.ndarray
    s_nodes: np.ndarray
    err_estimate: float
    speed: object = field(repr=False)

    @property
    def total(self):
        return float(self.s_nodes[-1])

    def s_at(self, t):
        """Arc length from the domain start (vectorized)."""
        t = np.asarray(t, dtype=float)
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        idx = np.clip(np.searchsorted(self.t_nodes, t, side="right") - 1,
                      0, len(self.t_nodes) - 2)
        a = self.t_nodes[idx]
        half = 0.5 * (t - a)
        mid = 0.5 * (t + a)
        pts = mid[None, :] + half[None, :] * _GL_NODES[:, None]
        vals = self.speed(pts.ravel()).reshape(pts.shape)
        partial = half * np.einsum("i,ij->j", _GL_WEIGHTS, vals)
        s = self.s_nodes[idx] + partial
        return float(s[0]) if scalar else s

    def t_at(self, s):
        """Inverse map (vectorized via per-point bracketing + Newton)."""
        from scipy.optimize import brentq

        s = np.asarray(s, dtype=float)
        scalar = s.ndim == 0
        out = []
        for si in np.atleast_1d(s):
            si = min(max(si, self.s_nodes[0]), self.s_nodes[-1])
            i = int(np.clip(np.searchsorted(self.s_nodes, si) - 1, 0,
                            len(self.s_nodes) - 2))
            a, b = self.t_nodes[i], self.t_nodes[i + 1]
            if si <= self.s_nodes[i] + 1e-15:
                out.append(a)
                continue
            out.append(brentq(lambda tt: self.s_at(tt) - si, a, b, xtol=1e-14))
        return float(out[0]) if scalar else np.array(out)

    def roundtrip_error(self, n=33):
        t = np.linspace(self.t_nodes[0], self.t_nodes[-1], n)
        back = self.t_at(self.s_at(t))
        return float(np.max(np.abs(back - t)))


def _panel_gauss(speed, a, b):
    """Vectorized 16-point Gauss integral of the speed over panels [a_i, b_i]."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    pts = mid[None, :] + half[None, :] * _GL_NODES[:, None]
    vals = speed(pts.ravel()).reshape(pts.shape)
    return half * np.einsum("i,ij->j", _GL_WEIGHTS, vals), pts


def arclength_map(curve, n_nodes=129, tol=1e-9, max_refines=3):
    """Tabulate s(t) by adaptive panel quadrature and check regularity.

    Each panel is integrated with an embedded pair (one Gauss rule on the
    panel vs. the same rule on its halves); the summed discrepancy is the
    error estimate, and the whole table is refined until it drops below
    ``tol``.  Speed evaluations are vectorized across all panels.
    """
    if n_nodes < 16:
        raise ValueError("n_nodes >= 16")
    speed = curve.speed
    n = int(n_nodes)
    checked = False
    for _ in range(max_refines + 1):
        t_nodes = np.linspace(*curve.domain, n)
        a, b = t_nodes[:-1], t_nodes[1:]
        mid = 0.5 * (a + b)
        coarse, pts = _panel_gauss(speed, a, b)
        if not checked:
            probe = np.concatenate([t_nodes, pts.ravel()])
            vals = speed(probe)
            if np.min(vals) <= curve.regularity_floor:
                bad = probe[int(np.argmin(vals))]
                raise NonRegularError(
                    f"{curve.label}: |gamma'| = {np.min(vals):.3e} at t = {bad:.6g}")
            checked = True
        fine = (_panel_gauss(speed, a, mid)[0] + _panel_gauss(speed, mid, b)[0])
        err = float(np.sum(np.abs(fine - coarse)))
        if err <= tol or n >= n_nodes * 2**max_refines:
            s = np.concatenate([[0.0], np.cumsum(fine)])
            return ArcLengthMap(t_nodes=t_nodes, s_nodes=s, err_estimate=err,
                                speed=speed)
        n = 2 * n - 1
    raise AssertionError("unreachable")


# -- curve transforms (plumbing for invariance tests and fixtures) ----------


def transformed(curve, rotation=None, translation=None, label=None):
    """The curve under a fixed rotation + translation."""
    R = np.eye(3) if rotation is None else np.asarray(rotation, dtype=float)
    b = np.zeros(3) if translation is None else np.asarray(translation, dtype=float)

    def pos(t):
        return curve.point(t) @ R.T + b

    derivs = {k: (lambda t, _k=k: curve.deriv(t, _k) @ R.T) for k in range(1, MAX_ORDER + 1)}
    return make_curve(label or f"{curve.label}|moved", curve.domain, pos, derivs,
                      curvature_floor=curve.curvature_floor,
                      regularity_floor=curve.regularity_floor)


def scaled(curve, a, label=None):
    """The curve scaled by a positive factor about the origin."""
    if a <= 0:
        raise ValueError("scale factor must be positive")

    def pos(t):
        return a * curve.point(t)

    derivs = {k: (lambda t, _k=k: a * curve.deriv(t, _k)) for k in range(1, MAX_ORDER + 1)}
    return make_curve(label or f"{curve.label}|x{a:g}", curve.domain, pos, derivs,
                      curvature_floor=curve.curvature_floor,
                      regularity_floor=curve.regularity_floor)


def reparametrize(curve, phi, phi_derivs, domain, label=None):
    """The same geometric curve traversed as t = phi(u).

    ``phi_derivs`` maps order -> evaluator of phi's derivatives (1..5); the
    composed derivative stack is produced by jet composition, so accuracy is
    limited only by the analytic stacks.
    """
    def phi_jet(u):
        u = np.asarray(u, dtype=float)
        return Jet.from_derivatives(
            [phi(u)] + [phi_derivs[k](u) for k in range(1, MAX_ORDER + 1)])

    def stack(u):
        p = phi_jet(u)
        outer = curve.jet(p.value(), MAX_ORDER)
        composed = _vjet_compose(outer, p)
        return [composed.derivative(k) for k in range(MAX_ORDER + 1)]

    def pos(u):
        return curve.point(phi(u))

    derivs = {k: (lambda u, _k=k: stack(u)[_k]) for k in range(1, MAX_ORDER + 1)}
    return make_curve(label or f"{curve.label}|reparam", domain, pos, derivs,
                      stack_fn=stack,
                      curvature_floor=curve.curvature_floor,
                      regularity_floor=curve.regularity_floor)


def _vjet_compose(outer, inner):
    """Compose a vector jet (expanded at inner.value()) with a scalar jet."""
    m = min(outer.order, inner.order)
    zero = np.zeros_like(np.asarray(inner.c[0], dtype=float))
    shifted = Jet([zero] + list(inner.c[1: m + 1]))
    acc = VJet([outer.c[m]] + [np.zeros_like(outer.c[m]) for _ in range(m)])
    for k in range(m - 1, -1, -1):
        acc = acc.scale(shifted)
        acc = VJet([acc.c[0] + outer.c[k]] + acc.c[1:])
    return acc
