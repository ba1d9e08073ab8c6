"""Curve classification from sampled scalar series.

Verdicts are driven entirely by recorded statistics so reports are
reproducible and auditable:

* planar            <=> the torsion series is constant zero
* generalized helix <=> the f = tau/kappa series is constant
* slant helix       <=> the gamma series (geodesic curvature of the
                        principal-normal image) is constant
* spherical circle  <=> the points fit one sphere (algebraic least squares)
                        and kappa is constant while tau is constant zero

"Constant" means coefficient of variation std/|mean| below tolerance, with
an absolute fallback |std| < tol when the mean itself sits below tolerance
(so tau == 0 detection works).  A circular helix has gamma == 0 and is
reported as a (degenerate) slant helix, consistent with the constancy test.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .curves import frenet_data
from .errors import EmptySeriesError

__all__ = ["ScalarSeries", "ClassificationReport", "is_constant", "classify_curve",
           "fit_sphere"]

DEFAULT_CONSTANCY_TOL = 1e-6
SPHERE_FIT_TOL = 1e-6


@dataclass
class ScalarSeries:
    """A labelled scalar sample series over a strictly increasing grid."""

    grid: np.ndarray
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.grid.shape != self.values.shape:
            raise ValueError(f"{self.label}: grid and values length mismatch")
        if self.grid.size and np.any(np.diff(self.grid) <= 0):
            raise ValueError(f"{self.label}: grid must be strictly increasing")
        if self.values.size and not np.all(np.isfinite(self.values)):
            raise ValueError(f"{self.label}: non-finite values")

    def __len__(self):
        return len(self.values)


def is_constant(series, tol=DEFAULT_CONSTANCY_TOL):
    """(verdict, stats) for the constancy of a series.

    Requires at least 10 samples.  CV = std/|mean| < tol, falling back to
    |std| < tol when |mean| < tol.
    """
    if len(series) == 0:
        raise EmptySeriesError(f"series {series.label!r} is empty")
    if len(series) < 10:
        raise ValueError("need at least 10 samples for a constancy verdict")
    mean = float(np.mean(series.values))
    std = float(np.std(series.values))
    if abs(mean) < tol:
        verdict = std < tol
        cv = float("inf") if mean == 0.0 and std > 0.0 else (std / abs(mean) if mean else 0.0)
    else:
        cv = std / abs(mean)
        verdict = cv < tol
    stats = {"mean": mean, "std": std, "cv": cv, "n": len(series), "tol": tol}
    return verdict, stats


def _is_constant_zero(series, tol):
    verdict, stats = is_constant(series, tol)
    return verdict and abs(stats["mean"]) < tol, stats


def fit_sphere(points):
    """Algebraic least-squares sphere fit (linearized, no iteration).

    Returns (center, radius, max_radial_deviation).
    """
    pts = np.asarray(points, dtype=float)
    A = np.column_stack([2.0 * pts, np.ones(len(pts))])
    b = np.einsum("ij,ij->i", pts, pts)
    sol, *_ = np.linalg.lstsq(A, b, rcond=None)
    center = sol[:3]
    radius = float(np.sqrt(sol[3] + center @ center))
    r = np.linalg.norm(pts - center, axis=1)
    return center, radius, float(np.max(np.abs(r - radius)))


@dataclass
class ClassificationReport:
    """Boolean verdicts plus the statistics that produced them."""

    is_planar: bool
    is_generalized_helix: bool
    is_slant_helix: bool
    is_spherical_circle: bool
    statistics: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)

    @property
    def verdicts(self):
        return {
            "is_planar": self.is_planar,
            "is_generalized_helix": self.is_generalized_helix,
            "is_slant_helix": self.is_slant_helix,
            "is_spherical_circle": self.is_spherical_circle,
        }

    def to_dict(self):
        return {
            "verdicts": self.verdicts,
            "statistics": self.statistics,
            "tolerances": self.tolerances,
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent)


def classify_curve(curve, n=1024, tol=DEFAULT_CONSTANCY_TOL, sphere_tol=SPHERE_FIT_TOL):
    """Classify a curve from an n-point uniform sampling of its domain."""
    grid = np.linspace(*curve.domain, int(n))
    d = frenet_data(curve, grid)

    tau = ScalarSeries(grid, d.tau, "tau")
    fser = ScalarSeries(grid, d.f, "f")
    gser = ScalarSeries(grid, d.gamma, "gamma")
    kser = ScalarSeries(grid, d.kappa, "kappa")

    planar, tau_stats = _is_constant_zero(tau, tol)
    gen_helix, f_stats = is_constant(fser, tol)
    slant, g_stats = is_constant(gser, tol)
    kappa_const, k_stats = is_constant(kser, tol)

    pts = curve.point(grid)
    center, radius, rdev = fit_sphere(pts)
    on_sphere = rdev < sphere_tol * max(1.0, radius)
    spherical_circle = bool(on_sphere and kappa_const and planar)

    stats = {
        "kappa": k_stats,
        "tau": tau_stats,
        "f": f_stats,
        "gamma": g_stats,
        "sphere_fit": {
            "center": [float(x) for x in center],
            "radius": radius,
            "max_radial_deviation": rdev,
        },
    }
    return ClassificationReport(
        is_planar=bool(planar),
        is_generalized_helix=bool(gen_helix),
        is_slant_helix=bool(slant),
        is_spherical_circle=spherical_circle,
        statistics=stats,
        tolerances={"constancy": tol, "sphere_fit": sphere_tol, "grid_n": int(n)},
    )
