import numpy as np
import pytest

from curvekit.classify import classify_curve
from curvekit.curves import frenet_data
from curvekit.errors import (
    BadConstantError,
    DegenerateWError,
    SingularParameterError,
    ZeroParamError,
)
from curvekit.families import (
    PRESETS,
    FamilyParams,
    circle,
    circular_helix,
    derived_general_helix,
    fourier_curve,
    kula_slant_helix,
    make_family,
    monterde_helix,
    preset_curve,
)
from curvekit.involute import InvoluteSpec


def test_monterde_on_unit_sphere_for_several_parameters():
    for c_m in (0.5, 1.0, -2.0):
        a = monterde_helix(c_m)
        t = np.linspace(*a.domain, 400)
        assert np.max(np.abs(np.linalg.norm(a.point(t), axis=1) - 1.0)) < 1e-12


def test_monterde_starts_at_unit_x():
    assert np.allclose(monterde_helix(1.0).point(0.0), [1.0, 0.0, 0.0], atol=1e-15)


def test_monterde_classifies_as_generalized_helix():
    r = classify_curve(monterde_helix(1.0, domain=(-1.05, 1.05)))
    assert r.is_generalized_helix


def test_kula_unit_speed_and_scalars():
    k = kula_slant_helix(0.25)
    t = np.linspace(0.0, 1.3, 300)
    d = frenet_data(k, t)
    assert np.max(np.abs(d.v - 1.0)) < 1e-12
    assert np.max(np.abs(d.kappa - np.cos(t) / 0.25)) < 1e-10
    assert np.max(np.abs(d.tau + np.sin(t) / 0.25)) < 1e-10


def test_kula_third_component_vanishes_at_quarter_turn():
    k = kula_slant_helix(0.25, domain=(0.0, np.pi / 2))
    assert k.point(np.pi / 2)[2] == pytest.approx(0.0, abs=1e-15)
    assert k.point(0.0)[2] == pytest.approx(-1.0 / (0.25 * np.sqrt(17)), abs=1e-15)


def test_kula_gamma_fixture():
    d = frenet_data(kula_slant_helix(0.25), np.linspace(0.15, 1.25, 2000))
    assert np.mean(d.gamma) == pytest.approx(-0.25, abs=1e-12)
    assert np.std(d.gamma) < 1e-12


def test_kula_classifies_as_slant_helix():
    r = classify_curve(kula_slant_helix(0.25, domain=(0.15, 1.25)), n=1500)
    assert r.is_slant_helix and not r.is_generalized_helix


def test_zero_parameters_rejected():
    with pytest.raises(ZeroParamError):
        monterde_helix(0.0)
    with pytest.raises(ZeroParamError):
        kula_slant_helix(0.0)
    with pytest.raises(ZeroParamError):
        circle(0.0)
    with pytest.raises(ZeroParamError):
        FamilyParams().w


def test_degenerate_w_rejected():
    with pytest.raises(DegenerateWError):
        kula_slant_helix(1e12)


def test_derived_family_guards():
    with pytest.raises(BadConstantError):
        derived_general_helix(0.25, 1.0, domain=(0.15, 1.25))
    with pytest.raises(SingularParameterError):
        derived_general_helix(0.25, 4.0, domain=(1.2, 1.8))   # cos t vanishes inside


def test_derived_family_stated_scalars_match_closed_forms(kula_spec, kula_grid):
    from curvekit.involute import involute_data

    dh = derived_general_helix(0.25, 2.0)
    d = involute_data(kula_spec, kula_grid)
    assert np.max(np.abs(dh.kappa_stated(kula_grid) - d.kappa) / d.kappa) < 1e-12
    assert np.max(np.abs(dh.tau_stated(kula_grid) - d.tau) / np.abs(d.tau)) < 1e-12
    want = 1.0 / (d.base.kappa * d.lam)
    assert np.max(np.abs(dh.ds_dsstar_stated(kula_grid) - want) / want) < 1e-12


def test_derived_family_f_is_sign_constant():
    dh = derived_general_helix(0.25, 2.0)
    d = frenet_data(dh.curve, np.linspace(0.2, 1.2, 200))
    assert np.max(np.abs(d.f + 0.25)) < 1e-9      # f = -mu on cos t > 0


def test_derived_family_classifies_as_generalized_helix():
    dh = derived_general_helix(0.25, 2.0)
    assert classify_curve(dh.curve, n=800).is_generalized_helix


@pytest.mark.parametrize("mu", [0.25, -0.25, 0.5, -0.5, 1.0])
def test_family_closure_involute_is_generalized_helix(mu):
    base = kula_slant_helix(mu)
    spec = InvoluteSpec(base, 2.0, subdomain=(0.15, 1.25))
    assert classify_curve(base.with_domain(0.15, 1.25), n=600).is_slant_helix
    assert classify_curve(spec.curve, n=600).is_generalized_helix


def test_fourier_curve_is_seeded_deterministic():
    a, b = fourier_curve(7), fourier_curve(7)
    t = np.linspace(0.5, 5.5, 50)
    assert np.array_equal(a.point(t), b.point(t))
    c = fourier_curve(8)
    assert not np.allclose(a.point(t), c.point(t))


def test_presets_and_dispatch():
    for name in PRESETS:
        curve, preset = preset_curve(name)
        lo, hi = preset.subdomain
        plo, phi = curve.domain
        assert plo <= lo < hi <= phi
    with pytest.raises(KeyError):
        make_family("nonagon")
    with pytest.raises(KeyError):
        preset_curve("nonagon")


def test_family_params_w():
    p = FamilyParams(mu=0.25)
    assert p.w == pytest.approx(np.sqrt(17), rel=1e-15)
    q = FamilyParams(c_m=1.0)
    assert q.w == pytest.approx(np.sqrt(2), rel=1e-15)
