"""Geometry error taxonomy.

Every failure mode carries a stable ``code`` so the CLI can report it on
stderr and map it to exit status 3.
"""
from __future__ import annotations

__all__ = [
    "GeometryError",
    "NonRegularError",
    "VanishingCurvatureError",
    "GridTooCoarseError",
    "BadConstantError",
    "PlanarInvoluteError",
    "ZeroParamError",
    "DegenerateWError",
    "SingularParameterError",
    "EmptySeriesError",
]


class GeometryError(Exception):
    code = "GEOMETRY_ERROR"

    def __str__(self):
        base = super().__str__()
        return f"{self.code}: {base}" if base else self.code


class NonRegularError(GeometryError):
    code = "NON_REGULAR"


class VanishingCurvatureError(GeometryError):
    code = "VANISHING_CURVATURE"


class GridTooCoarseError(GeometryError):
    code = "GRID_TOO_COARSE"


class BadConstantError(GeometryError):
    code = "BAD_CONSTANT"


class PlanarInvoluteError(GeometryError):
    code = "PLANAR_INVOLUTE"


class ZeroParamError(GeometryError):
    code = "ZERO_PARAM"


class DegenerateWError(GeometryError):
    code = "DEGENERATE_W"


class SingularParameterError(GeometryError):
    code = "SINGULAR_PARAMETER"


class EmptySeriesError(GeometryError):
    code = "EMPTY_SERIES"
