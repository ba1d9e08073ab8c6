"""Finite-difference machinery: Fornberg weights and stencil derivatives.

Two distinct users:

* the point-cloud oracle, which differentiates sampled positions on a grid
  (``fornberg_weights`` on strided windows);
* scalar chains that need one more derivative order than the analytic stack
  provides (``diff`` applies a 7-point order-6 first-derivative stencil to a
  callable).
"""
from __future__ import annotations

import numpy as np

__all__ = ["fornberg_weights", "central_weights", "diff", "synth_step", "series_deriv"]

_EPS = np.finfo(float).eps

# 7-point central first-derivative stencil, order 6
_D1_7 = np.array([-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60])
_OFF_7 = np.arange(-3, 4)


def fornberg_weights(x0, nodes, max_order):
    """Weights for derivatives 0..max_order at ``x0`` from arbitrary ``nodes``.

    Classic recursion (Fornberg 1988).  Returns an array of shape
    ``(max_order + 1, len(nodes))``.
    """
    nodes = np.asarray(nodes, dtype=float)
    n = nodes.size
    if max_order >= n:
        raise ValueError("need more nodes than the requested derivative order")
    C = np.zeros((n, max_order + 1))
    C[0, 0] = 1.0
    c1 = 1.0
    c4 = nodes[0] - x0
    for i in range(1, n):
        mn = min(i, max_order)
        c2 = 1.0
        c5 = c4
        c4 = nodes[i] - x0
        for j in range(i):
            c3 = nodes[i] - nodes[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    C[i, k] = c1 * (k * C[i - 1, k - 1] - c5 * C[i - 1, k]) / c2
                C[i, 0] = -c1 * c5 * C[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                C[j, k] = (c4 * C[j, k] - k * C[j, k - 1]) / c3
            C[j, 0] = c4 * C[j, 0] / c3
        c1 = c2
    return C.T


def central_weights(half_width, step, max_order):
    """Weights on the uniform stencil (-half_width..half_width) * step."""
    offsets = np.arange(-half_width, half_width + 1) * step
    return fornberg_weights(0.0, offsets, max_order)


def synth_step(t, order):
    """Step size for synthesizing a derivative of the given order.

    eps**(1/(order+2)) scaled by the local parameter magnitude; keeps the
    roundoff/truncation balance sane up to order 5.
    """
    return _EPS ** (1.0 / (order + 2)) * np.maximum(1.0, np.abs(t))


def series_deriv(values, grid):
    """d(values)/d(grid) for a uniformly sampled series.

    7-point order-6 central stencil on the interior; second-order one-sided
    estimates on the three points at each end (callers normally trim those).
    """
    y = np.asarray(values, dtype=float)
    t = np.asarray(grid, dtype=float)
    h = t[1] - t[0]
    out = np.gradient(y, t)
    if len(y) >= 7:
        out[3:-3] = (-y[:-6] + 9 * y[1:-5] - 45 * y[2:-4]
                     + 45 * y[4:-2] - 9 * y[5:-1] + y[6:]) / (60.0 * h)
    return out


def diff(fn, t, step=None, order_hint=1):
    """First derivative of ``fn`` at ``t`` via the 7-point order-6 stencil.

    ``fn`` must accept scalars and numpy arrays alike and be evaluable on a
    small neighbourhood of ``t``.  ``step`` overrides the default rule; pass a
    larger step when ``fn`` itself contains a differencing layer.
    """
    t = np.asarray(t, dtype=float)
    h = synth_step(t, order_hint) if step is None else np.broadcast_to(np.asarray(step, float), t.shape)
    acc = None
    for w, k in zip(_D1_7, _OFF_7):
        if w == 0.0:
            continue
        term = fn(t + k * h) * w
        acc = term if acc is None else acc + term
    hh = h if acc.ndim == t.ndim else h[..., None]
    return acc / hh
