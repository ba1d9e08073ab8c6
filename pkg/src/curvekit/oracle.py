"""Point-cloud Frenet oracle.

Ground truth for every closed form in the library: curvature, torsion and
frames computed purely from divided differences of sampled positions.  No
formula from the analytic side is consulted.

The stencil is 9 points wide (order 8) but *strided*: on fine grids the
effective step is held near an accuracy-optimal width instead of shrinking
with the grid, so refining a grid never amplifies the h^-3 roundoff of the
third derivative.  Endpoints, where the stencil cannot be centered, are not
emitted; comparisons are expected to trim further.
"""
from __future__ import annotations

import numpy as np

from .curves import FrameField, FrenetSample
from .errors import GridTooCoarseError
from .fd import fornberg_weights

__all__ = ["numeric_frenet_oracle", "frenet_fd_point", "oracle_margin"]

_HALF = 4          # stencil half-width in (strided) points
_STRIDE_FRAC = 0.003   # target effective step as a fraction of the grid span
_NOISE_FLOOR = 1e-13


def _pick_stride(n):
    return int(max(1, min((n - 1) // (2 * _HALF), round(_STRIDE_FRAC * (n - 1)))))


def oracle_margin(n, extra_widths=3):
    """Index margin excluded at each end: stencil + ``extra_widths`` stencil widths."""
    stride = _pick_stride(n)
    return _HALF * stride * (1 + extra_widths)


def numeric_frenet_oracle(points, grid):
    """Frenet field of a sampled curve, from divided differences only.

    ``points``: (n, 3) positions; ``grid``: strictly increasing parameters.
    Emits samples for the interior indices where a centered strided stencil
    fits.  Raises GRID_TOO_COARSE when fewer than 7 points are supplied or
    neighbouring parameters sit below the floating-point noise floor.
    """
    points = np.asarray(points, dtype=float)
    grid = np.asarray(grid, dtype=float)
    n = len(grid)
    if n < 7 or points.shape != (n, 3):
        raise GridTooCoarseError(f"need at least 7 points, got {n}")
    dt = np.diff(grid)
    if np.any(dt <= 0):
        raise ValueError("grid must be strictly increasing")
    if np.min(dt) < _NOISE_FLOOR * max(1.0, float(np.max(np.abs(grid)))):
        raise GridTooCoarseError("grid spacing below floating-point noise floor")

    stride = _pick_stride(n)
    lo, hi = _HALF * stride, n - 1 - _HALF * stride
    if hi < lo:
        raise GridTooCoarseError("stencil does not fit inside the grid")
    idx = np.arange(lo, hi + 1)

    offsets = np.arange(-_HALF, _HALF + 1) * stride
    uniform = np.allclose(dt, dt[0], rtol=1e-12, atol=0.0)
    if uniform:
        w = fornberg_weights(0.0, offsets * dt[0], 3)
        d1 = _apply_uniform(points, idx, offsets, w[1])
        d2 = _apply_uniform(points, idx, offsets, w[2])
        d3 = _apply_uniform(points, idx, offsets, w[3])
    else:
        d1 = np.empty((len(idx), 3))
        d2 = np.empty((len(idx), 3))
        d3 = np.empty((len(idx), 3))
        for j, i in enumerate(idx):
            sl = slice(i - _HALF * stride, i + _HALF * stride + 1, stride)
            w = fornberg_weights(grid[i], grid[sl], 3)
            d1[j] = w[1] @ points[sl]
            d2[j] = w[2] @ points[sl]
            d3[j] = w[3] @ points[sl]

    return _assemble(grid[idx], d1, d2, d3)


def _apply_uniform(points, idx, offsets, weights):
    out = np.zeros((len(idx), points.shape[1]))
    for off, w in zip(offsets, weights):
        if w == 0.0:
            continue
        out += w * points[idx + off]
    return out


def _assemble(t, d1, d2, d3):
    v = np.linalg.norm(d1, axis=1)
    u = np.cross(d1, d2)
    m = np.linalg.norm(u, axis=1)
    kappa = m / v**3
    tau = np.einsum("ij,ij->i", u, d3) / m**2
    T = d1 / v[:, None]
    B = u / m[:, None]
    N = np.cross(B, T)
    f = tau / kappa

    # arc length along the cloud (local, from the first emitted node)
    s = np.concatenate([[0.0], np.cumsum(0.5 * (v[1:] + v[:-1]) * np.diff(t))])

    # geodesic curvature of the normal image: needs df/ds from the series
    fp = np.gradient(f, t) / v
    gamma = fp / (kappa * (1.0 + f * f) ** 1.5)

    samples = [
        FrenetSample(t=float(t[i]), s=float(s[i]), T=T[i], N=N[i], B=B[i],
                     kappa=float(kappa[i]), tau=float(tau[i]), f=float(f[i]),
                     gamma_g=float(gamma[i]))
        for i in range(len(t))
    ]
    return FrameField(samples=samples, grid=t)


def frenet_fd_point(position_fn, t, h=None):
    """kappa, tau, T, N, B at one parameter from a local 9-point stencil.

    Pointwise version of the oracle for curves given as evaluators rather
    than clouds.  ``h`` defaults to a step balancing the third-derivative
    roundoff against truncation for smooth O(1)-frequency curves.
    """
    t = float(t)
    if h is None:
        h = 6e-3 * max(1.0, abs(t))
    offsets = np.arange(-_HALF, _HALF + 1) * h
    w = fornberg_weights(0.0, offsets, 3)
    pts = np.asarray(position_fn(t + offsets), dtype=float)
    if pts.shape != (len(offsets), 3):
        pts = pts.reshape(len(offsets), 3)
    d1, d2, d3 = w[1] @ pts, w[2] @ pts, w[3] @ pts
    v = float(np.linalg.norm(d1))
    u = np.cross(d1, d2)
    m = float(np.linalg.norm(u))
    kappa = m / v**3
    tau = float(u @ d3) / m**2
    T = d1 / v
    B = u / m
    N = np.cross(B, T)
    return kappa, tau, T, N, B
