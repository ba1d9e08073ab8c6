import numpy as np
import pytest

from curvekit import indicatrix as ix
from curvekit.classify import classify_curve
from curvekit.errors import PlanarInvoluteError
from curvekit.families import circle, circular_helix, fourier_curve, kula_slant_helix
from curvekit.involute import InvoluteSpec, involute_data
from curvekit.oracle import numeric_frenet_oracle

SMALL_CIRCLE_RADIUS = 0.9701425001453319   # plane+circle fit of the image cloud
TANGENT_IMAGE_AT_0P7 = (-0.24510704815672177, 0.9386687411073908, 0.24253562503633297)


@pytest.fixture(scope="module")
def kula_host(kula_spec):
    return ix.host_from_involute(kula_spec)


def test_kind_parsing():
    assert ix.IndicatrixKind.parse("normal") is ix.IndicatrixKind.PRINCIPAL_NORMAL
    assert ix.IndicatrixKind.parse("tangent") is ix.IndicatrixKind.TANGENT
    assert ix.IndicatrixKind.parse(ix.IndicatrixKind.BINORMAL) is ix.IndicatrixKind.BINORMAL
    with pytest.raises(ValueError):
        ix.IndicatrixKind.parse("sideways")


@pytest.mark.parametrize("kind", ["tangent", "normal", "binormal"])
def test_images_live_on_unit_sphere(kula_spec, kula_grid, kind):
    pts = ix.indicatrix_curve(kula_spec, kind).point(kula_grid)
    assert np.max(np.abs(np.linalg.norm(pts, axis=1) - 1.0)) < 1e-12


def test_binormal_image_refused_for_planar_involute():
    spec = InvoluteSpec(circular_helix(3, 4), 12.0, subdomain=(1.0, 9.0))
    with pytest.raises(PlanarInvoluteError):
        ix.indicatrix_curve(spec, "binormal")


def test_tangent_image_of_slant_helix_involute_is_small_circle(kula_spec, kula_grid, kula_host):
    ta = ix.tangent_arrays(kula_host, kula_grid)
    assert np.max(np.abs(ta.kappa - np.sqrt(17) / 4)) < 1e-12
    assert np.max(np.abs(ta.tau)) < 1e-12
    # independent plane + circle fit of the sampled image
    pts = kula_host.curve(ix.IndicatrixKind.TANGENT).point(kula_grid)
    centroid = pts.mean(axis=0)
    q = pts - centroid
    _, _, vt = np.linalg.svd(q, full_matrices=False)
    x2, y2 = q @ vt[0], q @ vt[1]
    A = np.column_stack([2 * x2, 2 * y2, np.ones(len(x2))])
    sol, *_ = np.linalg.lstsq(A, x2**2 + y2**2, rcond=None)
    radius = float(np.sqrt(sol[2] + sol[0] ** 2 + sol[1] ** 2))
    assert radius == pytest.approx(SMALL_CIRCLE_RADIUS, abs=1e-9)
    assert np.max(np.abs(q @ vt[2])) < 1e-9        # genuinely planar


def test_great_circle_image_for_generalized_helix_base():
    spec = InvoluteSpec(circular_helix(3, 4), 12.0, subdomain=(1.0, 9.0))
    host = ix.host_from_involute(spec)
    ta = ix.tangent_arrays(host, np.linspace(1.5, 8.5, 100))
    assert np.max(np.abs(ta.kappa - 1.0)) < 1e-12
    assert np.max(np.abs(ta.tau)) < 1e-12


def test_tangent_image_golden_point(kula_spec):
    pt = ix.indicatrix_curve(kula_spec, "tangent").point(0.7)
    assert np.allclose(pt, TANGENT_IMAGE_AT_0P7, atol=1e-12)


def test_tangent_image_data_op(kula_spec):
    sample, scal = ix.tangent_indicatrix_data(kula_spec, 0.7)
    assert scal.kappa == pytest.approx(np.sqrt(17) / 4, abs=1e-12)
    assert scal.tau == pytest.approx(0.0, abs=1e-12)
    assert scal.rho > 0
    assert np.allclose(np.cross(sample.T, sample.N), sample.B, atol=1e-13)
    assert sample.s >= 0


def test_tangent_ratio_identity_on_varying_fixture():
    f = fourier_curve(7)
    spec = InvoluteSpec(f, 8.0, subdomain=(3.15, 4.25))
    host = ix.host_from_involute(spec)
    grid = np.linspace(3.2, 4.2, 120)
    ta = ix.tangent_arrays(host, grid)
    d = involute_data(spec, grid)
    assert np.max(np.abs(ta.tau / ta.kappa - d.gamma)) < 1e-10


def test_normal_image_scalars_and_errata(kula_spec, kula_grid, kula_host):
    na = ix.normal_arrays(kula_host, kula_grid[::60], with_oracle=True)
    # corrected curvature equals sqrt(1 + gamma~^2) = 1 here, oracle agrees
    assert np.max(np.abs(na.kappa - 1.0)) < 1e-12
    assert np.max(np.abs(na.kappa_oracle - 1.0)) < 1e-6
    # the stated closed form misses by orders of magnitude more than 1e-5
    assert np.min(np.abs(na.kappa_stated - na.kappa_oracle)) > 1e-3
    # stated frame normalization is off by exactly kappa~ (1+f~^2)^(3/2)
    d = involute_data(kula_spec, kula_grid[::60])
    assert np.allclose(na.stated_norm, d.kappa * (1 + d.f**2) ** 1.5, atol=1e-12)
    # torsion bracket vanishes in the f~' = 0 regime, like the oracle
    assert np.max(np.abs(na.sigma)) < 1e-8
    assert np.max(np.abs(na.tau_oracle)) < 1e-8


def test_normal_image_discriminates_on_plain_helix_host():
    # The classical discriminator: the normal image of a circular helix is a
    # great circle.  The corrected curvature and the oracle give exactly 1;
    # the stated form gives 1/(kappa (1+f^2)^(3/2)) = 1.8 for a=3, b=4.
    host = ix.host_from_curve(circular_helix(3.0, 4.0))
    na = ix.normal_arrays(host, np.linspace(2.0, 8.0, 7), with_oracle=True)
    assert np.max(np.abs(na.kappa - 1.0)) < 1e-12
    assert np.max(np.abs(na.kappa_oracle - 1.0)) < 1e-6
    assert np.allclose(na.kappa_stated, 1.8, atol=1e-12)


def test_normal_image_unit_frame(kula_host, kula_grid):
    na = ix.normal_arrays(kula_host, kula_grid[::100])
    for V in (na.T, na.N, na.B):
        assert np.max(np.abs(np.linalg.norm(V, axis=1) - 1.0)) < 1e-12
    assert np.max(np.linalg.norm(np.cross(na.T, na.N) - na.B, axis=1)) < 1e-12


def test_normal_image_rho_positive(kula_host, kula_grid):
    na = ix.normal_arrays(kula_host, kula_grid[::100])
    assert np.all(na.rho > 0)


def test_normal_image_data_op(kula_spec):
    sample, scal = ix.normal_indicatrix_data(kula_spec, 0.7)
    assert scal.kappa == pytest.approx(1.0, abs=1e-12)
    assert scal.kappa_oracle == pytest.approx(1.0, abs=1e-6)
    assert abs(scal.kappa_stated - 1.0) > 1e-2
    assert scal.sigma == pytest.approx(0.0, abs=1e-8)
    assert scal.tau_oracle == pytest.approx(0.0, abs=1e-8)


def test_binormal_image_scalars(kula_spec, kula_grid, kula_host):
    ba = ix.binormal_arrays(kula_host, kula_grid[::50])
    d = involute_data(kula_spec, kula_grid[::50])
    # torsion vanishes: the image is a circle exactly because the base is a slant helix
    assert np.max(np.abs(ba.tau)) < 1e-12
    assert np.allclose(ba.kappa_signed, np.sqrt(17) / 4 / (-0.25), atol=1e-10)
    assert np.all(ba.kappa > 0)
    # signed ratio identity tau_b / kappa_b = -gamma~
    assert np.max(np.abs(ba.tau / ba.kappa_signed + d.gamma)) < 1e-12


def test_binormal_gamma_two_paths_on_varying_fixture():
    spec = InvoluteSpec(fourier_curve(7), 8.0, subdomain=(3.15, 4.25))
    host = ix.host_from_involute(spec)
    grid = np.linspace(3.2, 4.2, 80)
    ba = ix.binormal_arrays(host, grid)
    assert np.max(np.abs(ba.gamma)) > 0.1          # genuinely nonzero here
    assert np.max(np.abs(ba.gamma - ba.gamma_alt) /
                  np.maximum(1.0, np.abs(ba.gamma))) < 1e-7


def test_gamma_tilde_three_way_identity_chain():
    # the involute's gamma via its direct form, via tau_t/kappa_t, and via
    # -tau_b/kappa_b must agree pairwise on a fixture where it varies
    spec = InvoluteSpec(fourier_curve(7), 8.0, subdomain=(3.15, 4.25))
    host = ix.host_from_involute(spec)
    grid = np.linspace(3.2, 4.2, 150)
    g1 = involute_data(spec, grid).gamma
    ta = ix.tangent_arrays(host, grid)
    ba = ix.binormal_arrays(host, grid)
    g2 = ta.tau / ta.kappa
    g3 = -ba.tau / ba.kappa_signed
    assert np.max(np.abs(g1)) > 0.5
    den = np.maximum(1.0, np.abs(g1))
    assert np.max(np.abs(g1 - g2) / den) < 1e-8
    assert np.max(np.abs(g1 - g3) / den) < 1e-8
    assert np.max(np.abs(g2 - g3) / den) < 1e-8


def test_binormal_image_data_op(kula_spec):
    sample, scal = ix.binormal_indicatrix_data(kula_spec, 0.7)
    assert scal.kappa_signed < 0
    assert scal.kappa == -scal.kappa_signed
    assert sample.f == pytest.approx(scal.tau / scal.kappa_signed)


def test_frenet_vector_corollary_closed_forms(kula_spec, kula_grid):
    worst = 0.0
    for s in kula_grid[::120]:
        res = ix.frenet_vector_corollary(kula_spec, s)
        worst = max(worst, res.max())
    assert worst < 1e-12


def test_frenet_vector_corollary_refuses_planar():
    spec = InvoluteSpec(circle(), 8.0)
    with pytest.raises(PlanarInvoluteError):
        ix.frenet_vector_corollary(spec, 1.0)


def test_similar_curves_check(kula_spec):
    rep = ix.similar_curves_check(kula_spec, np.linspace(0.2, 1.2, 200))
    assert rep.max_normal_deviation == 0.0
    assert rep.ratio_rel_err < 1e-6
    assert not rep.below_resolution
    coarse = ix.similar_curves_check(kula_spec, np.linspace(0.2, 1.2, 20))
    assert coarse.below_resolution


def test_theorem_closure_image_classifies_as_circle(kula_spec):
    report = classify_curve(ix.indicatrix_curve(kula_spec, "tangent"), n=900)
    assert report.is_spherical_circle


def test_image_frames_match_oracle_up_to_orientation(kula_spec, kula_grid, kula_host):
    for kind, arrays_fn in (("tangent", ix.tangent_arrays),
                            ("binormal", ix.binormal_arrays)):
        pts = kula_host.curve(ix.IndicatrixKind.parse(kind)).point(kula_grid)
        ff = numeric_frenet_oracle(pts, kula_grid)
        ref = arrays_fn(kula_host, ff.t)
        inner = slice(40, -40)
        for got, want in ((ff.T, ref.T), (ff.N, ref.N), (ff.B, ref.B)):
            sgn = np.sign(np.einsum("ij,ij->i", got, want))[:, None]
            assert np.max(np.linalg.norm((got * sgn - want)[inner], axis=1)) < 1e-5
