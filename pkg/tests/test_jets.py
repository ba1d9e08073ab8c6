import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from curvekit.jets import Jet, VJet, cross, dot

finite = st.floats(min_value=-10, max_value=10, allow_nan=False)


def poly_jet(coeffs):
    return Jet(list(coeffs))


def test_from_derivatives_and_back():
    j = Jet.from_derivatives([2.0, 3.0, 8.0, 30.0])
    assert j.c == [2.0, 3.0, 4.0, 5.0]
    assert j.derivative(2) == 8.0
    assert j.derivative(3) == 30.0


def test_mul_matches_polynomial_product():
    a = poly_jet([1.0, 2.0, 3.0])
    b = poly_jet([4.0, 5.0, 6.0])
    prod = a * b
    # (1 + 2x + 3x^2)(4 + 5x + 6x^2) = 4 + 13x + 28x^2 + ...
    assert prod.c == [4.0, 13.0, 28.0]


@given(st.lists(finite, min_size=3, max_size=5),
       st.lists(finite, min_size=3, max_size=5))
def test_div_inverts_mul(ac, bc):
    if abs(bc[0]) < 1e-3:
        bc[0] = 1.0
    a, b = poly_jet(ac), poly_jet(bc)
    back = (a * b) / b
    m = back.order
    assert np.allclose(back.c, ac[: m + 1], rtol=1e-9, atol=1e-9)


@given(st.lists(st.floats(min_value=0.5, max_value=10, allow_nan=False),
                min_size=3, max_size=5))
def test_sqrt_squares_back(coeffs):
    a = poly_jet(coeffs)
    r = a.sqrt()
    back = r * r
    assert np.allclose(back.c, coeffs[: back.order + 1], rtol=1e-9, atol=1e-9)


def test_deriv_antideriv_roundtrip():
    a = poly_jet([1.0, 2.0, 3.0, 4.0])
    assert a.deriv().c == [2.0, 6.0, 12.0]
    assert a.deriv().antideriv(1.0).c == [1.0, 2.0, 3.0, 4.0]


def test_trig_jet_derivatives():
    # jet of sin at t0 from its derivative stack
    t0 = 0.7
    stack = [math.sin(t0), math.cos(t0), -math.sin(t0), -math.cos(t0), math.sin(t0)]
    j = Jet.from_derivatives(stack)
    sq = j * j
    # (sin^2)' = sin(2t)
    assert sq.derivative(1) == pytest.approx(math.sin(2 * t0), abs=1e-12)
    assert sq.derivative(2) == pytest.approx(2 * math.cos(2 * t0), abs=1e-12)


def test_compose_against_closed_form():
    # f(u) = u^2 at u0 = g(t0), g(t) = 2t + t^2 at t0 = 1  ->  f(g(t)) = (2t+t^2)^2
    g = Jet([3.0, 4.0, 1.0, 0.0])          # g(1)=3, g'=4, g''=2
    f = Jet([9.0, 6.0, 1.0, 0.0])          # u^2 about u=3
    comp = f.compose(g)
    # closed form h(t) = (2t+t^2)^2 = 4t^2+4t^3+t^4: h(1)=9, h'=24, h''=44, h'''=48
    assert comp.derivative(0) == pytest.approx(9.0)
    assert comp.derivative(1) == pytest.approx(24.0)
    assert comp.derivative(2) == pytest.approx(44.0)
    assert comp.derivative(3) == pytest.approx(48.0)


def test_vector_dot_cross():
    a = VJet.from_derivatives([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
    b = VJet.from_derivatives([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0]])
    d = dot(a, b)
    assert d.c[0] == 0.0 and d.c[1] == pytest.approx(2.0)
    c = cross(a, b)
    assert np.allclose(c.value(), [0.0, 0.0, 1.0])


def test_grid_valued_coefficients_broadcast():
    t = np.linspace(0, 1, 7)
    j = Jet([np.sin(t), np.cos(t)])
    k = j * j
    assert np.allclose(k.value(), np.sin(t) ** 2)
    assert np.allclose(k.derivative(1), np.sin(2 * t))


def test_pow_and_scalar_ops():
    a = poly_jet([2.0, 1.0, 0.5])
    assert np.allclose((a**3).value(), 8.0)
    assert np.allclose((1.0 / a).value(), 0.5)
    assert np.allclose((a - 1.0).c[0], 1.0)
    with pytest.raises(ValueError):
        a ** 0.5
