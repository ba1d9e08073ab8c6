import numpy as np
import pytest

from curvekit.fd import central_weights, diff, fornberg_weights, series_deriv


def test_fornberg_reproduces_classic_stencils():
    w = fornberg_weights(0.0, np.array([-1.0, 0.0, 1.0]), 2)
    assert np.allclose(w[0], [0.0, 1.0, 0.0])
    assert np.allclose(w[1], [-0.5, 0.0, 0.5])
    assert np.allclose(w[2], [1.0, -2.0, 1.0])


def test_fornberg_five_point_fourth_order_first_derivative():
    w = fornberg_weights(0.0, np.arange(-2.0, 3.0), 1)
    assert np.allclose(w[1], [1 / 12, -8 / 12, 0.0, 8 / 12, -1 / 12])


def test_fornberg_nonuniform_exact_on_polynomials():
    nodes = np.array([-1.3, -0.2, 0.4, 1.1, 2.7])
    w = fornberg_weights(0.5, nodes, 3)
    # exact for cubics: check p(x) = x^3 - 2x
    p = nodes**3 - 2 * nodes
    assert w[1] @ p == pytest.approx(3 * 0.25 - 2, abs=1e-12)
    assert w[2] @ p == pytest.approx(6 * 0.5, abs=1e-11)
    assert w[3] @ p == pytest.approx(6.0, abs=1e-10)


def test_central_weights_order():
    w = central_weights(3, 0.1, 1)
    assert w.shape == (2, 7)
    x = np.arange(-3, 4) * 0.1
    assert w[1] @ np.sin(x) == pytest.approx(1.0, abs=1e-8)


def test_diff_accuracy_on_smooth_function():
    t = np.linspace(0.2, 2.0, 11)
    got = diff(np.sin, t)
    assert np.max(np.abs(got - np.cos(t))) < 1e-10


def test_diff_vector_valued():
    fn = lambda t: np.stack([np.sin(t), np.cos(t), t**2], axis=-1)
    got = diff(fn, np.array([0.3, 1.1]))
    want = np.stack([np.cos([0.3, 1.1]), -np.sin([0.3, 1.1]), [0.6, 2.2]], axis=-1)
    assert np.max(np.abs(got - want)) < 1e-9


def test_series_deriv_high_order_interior():
    t = np.linspace(0, 3, 301)
    d = series_deriv(np.sin(5 * t), t)
    interior = slice(3, -3)
    assert np.max(np.abs(d[interior] - 5 * np.cos(5 * t[interior]))) < 1e-7
