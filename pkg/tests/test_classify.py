import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from curvekit.classify import ClassificationReport, ScalarSeries, classify_curve, fit_sphere, is_constant
from curvekit.curves import scaled, transformed
from curvekit.errors import EmptySeriesError, VanishingCurvatureError
from curvekit.families import (
    circle,
    circular_helix,
    fourier_curve,
    kula_slant_helix,
    monterde_helix,
    straight_line,
)
from curvekit.involute import InvoluteSpec


def grid(n):
    return np.linspace(0.0, 1.0, n)


def test_constant_series_is_constant():
    ok, stats = is_constant(ScalarSeries(grid(20), np.full(20, 0.5)))
    assert ok and stats["cv"] == 0.0


def test_sine_series_is_not_constant():
    ok, _ = is_constant(ScalarSeries(grid(50), np.sin(grid(50))), tol=1e-3)
    assert not ok


def test_zero_series_uses_absolute_fallback():
    values = 1e-12 * np.sin(grid(30))
    ok, stats = is_constant(ScalarSeries(grid(30), values), tol=1e-6)
    assert ok and abs(stats["mean"]) < 1e-6


def test_empty_and_short_series_rejected():
    with pytest.raises(EmptySeriesError):
        is_constant(ScalarSeries(np.array([]), np.array([])))
    with pytest.raises(ValueError):
        is_constant(ScalarSeries(grid(5), np.zeros(5)))


def test_series_validation():
    with pytest.raises(ValueError):
        ScalarSeries(np.array([0.0, 0.0, 1.0]), np.zeros(3))
    with pytest.raises(ValueError):
        ScalarSeries(grid(3), np.array([1.0, np.nan, 2.0]))
    with pytest.raises(ValueError):
        ScalarSeries(grid(3), np.zeros(4))


@given(st.floats(min_value=0.1, max_value=100.0),
       st.floats(min_value=-5.0, max_value=5.0))
@settings(max_examples=25, deadline=None)
def test_constancy_is_scale_invariant(scale, mean):
    # CV-based verdicts do not change under positive scaling of the series
    rng = np.random.default_rng(3)
    noise = 1e-9 * rng.standard_normal(40)
    base = mean + noise
    s1 = ScalarSeries(grid(40), base)
    s2 = ScalarSeries(grid(40), scale * base)
    assert is_constant(s1)[0] == is_constant(s2)[0]


def test_kula_gamma_series_constant_at_1e6():
    k = kula_slant_helix(0.25, domain=(0.15, 1.25))
    report = classify_curve(k, n=2000)
    assert report.is_slant_helix
    assert report.statistics["gamma"]["cv"] < 1e-6
    assert report.statistics["gamma"]["mean"] == pytest.approx(-0.25, abs=1e-10)


def test_circular_helix_verdicts():
    r = classify_curve(circular_helix(3, 4))
    assert r.is_generalized_helix and r.is_slant_helix
    assert not r.is_planar and not r.is_spherical_circle


def test_circle_is_planar_spherical_circle():
    r = classify_curve(circle())
    assert r.is_planar and r.is_spherical_circle and r.is_generalized_helix


def test_monterde_is_spherical_generalized_helix():
    r = classify_curve(monterde_helix(1.0, domain=(-1.05, 1.05)))
    assert r.is_generalized_helix
    assert not r.is_spherical_circle           # curvature varies on the sphere
    assert r.statistics["sphere_fit"]["radius"] == pytest.approx(1.0, abs=1e-9)


def test_involute_of_slant_helix_is_generalized_helix(kula_spec):
    r = classify_curve(kula_spec.curve, n=1200)
    assert r.is_generalized_helix
    assert not r.is_planar


def test_fourier_control_fails_everything():
    r = classify_curve(fourier_curve(7).with_domain(3.15, 4.25))
    assert not any(r.verdicts.values())


def test_rigid_motion_invariance_of_verdicts():
    k = kula_slant_helix(0.25, domain=(0.15, 1.25))
    th = 1.1
    R = np.array([[1.0, 0.0, 0.0],
                  [0.0, np.cos(th), -np.sin(th)],
                  [0.0, np.sin(th), np.cos(th)]])
    moved = transformed(k, rotation=R, translation=np.array([-3.0, 0.4, 2.2]))
    assert classify_curve(moved, n=800).verdicts == classify_curve(k, n=800).verdicts


def test_scaling_invariance_of_verdicts():
    k = kula_slant_helix(0.25, domain=(0.15, 1.25))
    assert classify_curve(scaled(k, 7.5), n=800).verdicts == \
        classify_curve(k, n=800).verdicts


def test_classify_requires_positive_curvature():
    with pytest.raises(VanishingCurvatureError):
        classify_curve(straight_line())


def test_sphere_fit_on_synthetic_data():
    rng = np.random.default_rng(11)
    u = rng.uniform(0, np.pi, 400)
    v = rng.uniform(0, 2 * np.pi, 400)
    pts = np.stack([np.sin(u) * np.cos(v), np.sin(u) * np.sin(v), np.cos(u)], axis=1)
    pts = 2.5 * pts + np.array([1.0, -2.0, 0.5])
    center, radius, dev = fit_sphere(pts)
    assert np.allclose(center, [1.0, -2.0, 0.5], atol=1e-10)
    assert radius == pytest.approx(2.5, abs=1e-10)
    assert dev < 1e-9


def test_report_serialization_key_order():
    r = classify_curve(circle(), n=128)
    js = r.to_json()
    assert js.index('"verdicts"') < js.index('"statistics"') < js.index('"tolerances"')
    assert isinstance(r, ClassificationReport)
    assert r.tolerances["grid_n"] == 128
