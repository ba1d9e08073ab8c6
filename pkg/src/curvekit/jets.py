"""Truncated Taylor-series (jet) arithmetic.

A ``Jet`` holds coefficients ``c[0..m]`` of an expansion
``g(t0 + h) = sum_k c[k] h**k``; the k-th derivative of ``g`` at ``t0`` is
``k! * c[k]``.  Coefficients may be plain floats or numpy arrays, so a whole
grid of expansion points is pushed through every formula at once.

Jets are how the curvature/torsion chain gets exact parameter derivatives
(kappa', tau', f'', ...) without symbolic algebra: build the position jet
from the curve's derivative stack, then run the algebraic Frenet formulas
in jet arithmetic.
"""
from __future__ import annotations

import math

import numpy as np

__all__ = ["Jet", "VJet", "dot", "cross"]

_FACTORIALS = [math.factorial(k) for k in range(12)]


class Jet:
    """Scalar jet: coefficients of a truncated Taylor expansion."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = list(coeffs)
        if not self.c:
            raise ValueError("jet needs at least the constant coefficient")

    @property
    def order(self):
        return len(self.c) - 1

    @classmethod
    def constant(cls, value, order):
        return cls([value] + [_zero_like(value)] * order)

    @classmethod
    def variable(cls, value, order):
        """The identity function t -> t expanded at ``value``."""
        c = [value, _one_like(value)] + [_zero_like(value)] * (order - 1)
        return cls(c[: order + 1])

    @classmethod
    def from_derivatives(cls, derivs):
        """Build from ``[g, g', g'', ...]`` evaluated at the expansion point."""
        return cls([d / _FACTORIALS[k] for k, d in enumerate(derivs)])

    def value(self):
        return self.c[0]

    def derivative(self, k):
        """k-th derivative at the expansion point."""
        return self.c[k] * _FACTORIALS[k]

    def deriv(self):
        """Jet of the first derivative (order drops by one)."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 jet")
        return Jet([(k + 1) * self.c[k + 1] for k in range(self.order)])

    def antideriv(self, const=0.0):
        """Jet of the antiderivative with given constant term."""
        return Jet([const] + [self.c[k] / (k + 1) for k in range(self.order + 1)])

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        a, b = _coerce(self, other)
        return Jet([x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return Jet([-x for x in self.c])

    def __sub__(self, other):
        a, b = _coerce(self, other)
        return Jet([x - y for x, y in zip(a.c, b.c)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        a, b = _coerce(self, other)
        m = min(a.order, b.order)
        out = []
        for k in range(m + 1):
            acc = a.c[0] * b.c[k]
            for j in range(1, k + 1):
                acc = acc + a.c[j] * b.c[k - j]
            out.append(acc)
        return Jet(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = _coerce(self, other)
        m = min(a.order, b.order)
        out = [a.c[0] / b.c[0]]
        for k in range(1, m + 1):
            acc = a.c[k]
            for j in range(1, k + 1):
                acc = acc - b.c[j] * out[k - j]
            out.append(acc / b.c[0])
        return Jet(out)

    def __rtruediv__(self, other):
        return Jet.constant(other, self.order).__truediv__(self)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers; use sqrt() for halves")
        out = Jet.constant(_one_like(self.c[0]), self.order)
        for _ in range(n):
            out = out * self
        return out

    def sqrt(self):
        m = self.order
        b0 = np.sqrt(self.c[0])
        out = [b0]
        for k in range(1, m + 1):
            acc = self.c[k]
            for j in range(1, k):
                acc = acc - out[j] * out[k - j]
            out.append(acc / (2.0 * b0))
        return Jet(out)

    def compose(self, inner):
        """Jet of ``self(g(t))`` where ``self`` is expanded at ``inner.value()``.

        ``inner`` must be a jet whose constant term equals the expansion
        point of ``self``; the composition is evaluated by Horner's scheme in
        the shifted jet ``inner - inner.value()``.
        """
        m = min(self.order, inner.order)
        shifted = Jet([_zero_like(inner.c[0])] + inner.c[1 : m + 1])
        acc = Jet.constant(self.c[m], m)
        for k in range(m - 1, -1, -1):
            acc = acc * shifted + self.c[k]
        return acc


class VJet:
    """Jet with values in R^3: coefficients are arrays of shape (..., 3)."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = [np.asarray(x, dtype=float) for x in coeffs]

    @property
    def order(self):
        return len(self.c) - 1

    @classmethod
    def from_derivatives(cls, derivs):
        return cls([np.asarray(d, dtype=float) / _FACTORIALS[k] for k, d in enumerate(derivs)])

    def value(self):
        return self.c[0]

    def derivative(self, k):
        return self.c[k] * _FACTORIALS[k]

    def deriv(self):
        return VJet([(k + 1) * self.c[k + 1] for k in range(self.order)])

    def __add__(self, other):
        m = min(self.order, other.order)
        return VJet([self.c[k] + other.c[k] for k in range(m + 1)])

    def __sub__(self, other):
        m = min(self.order, other.order)
        return VJet([self.c[k] - other.c[k] for k in range(m + 1)])

    def __neg__(self):
        return VJet([-x for x in self.c])

    def scale(self, jet):
        """Multiply by a scalar Jet (or number)."""
        if not isinstance(jet, Jet):
            return VJet([x * jet for x in self.c])
        m = min(self.order, jet.order)
        out = []
        for k in range(m + 1):
            acc = self.c[0] * _tail(jet.c[k])
            for j in range(1, k + 1):
                acc = acc + self.c[j] * _tail(jet.c[k - j])
            out.append(acc)
        return VJet(out)

    def norm(self):
        return dot(self, self).sqrt()


def dot(a, b):
    """Scalar jet of <a, b> for two vector jets."""
    m = min(a.order, b.order)
    out = []
    for k in range(m + 1):
        acc = np.sum(a.c[0] * b.c[k], axis=-1)
        for j in range(1, k + 1):
            acc = acc + np.sum(a.c[j] * b.c[k - j], axis=-1)
        out.append(acc)
    return Jet(out)


def cross(a, b):
    """Vector jet of a x b."""
    m = min(a.order, b.order)
    out = []
    for k in range(m + 1):
        acc = np.cross(a.c[0], b.c[k])
        for j in range(1, k + 1):
            acc = acc + np.cross(a.c[j], b.c[k - j])
        out.append(acc)
    return VJet(out)


def _zero_like(x):
    return np.zeros_like(x) if isinstance(x, np.ndarray) else 0.0


def _one_like(x):
    return np.ones_like(x) if isinstance(x, np.ndarray) else 1.0


def _tail(x):
    # scalar Jet coefficient broadcast against (..., 3) vector coefficients
    return x[..., None] if isinstance(x, np.ndarray) else x


def _coerce(a, other):
    if isinstance(other, Jet):
        return a, other
    return a, Jet.constant(other, a.order)
