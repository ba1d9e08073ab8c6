"""curvekit: Frenet apparatus, involutes and spherical indicatrices of space curves."""

from .curves import (
    ArcLengthMap,
    CurveSpec,
    FrameField,
    FrenetSample,
    arclength_map,
    frame_field,
    frenet_apparatus,
    gamma_geodesic,
    make_curve,
)
from .errors import (
    BadConstantError,
    DegenerateWError,
    EmptySeriesError,
    GeometryError,
    GridTooCoarseError,
    NonRegularError,
    PlanarInvoluteError,
    SingularParameterError,
    VanishingCurvatureError,
    ZeroParamError,
)
from .classify import ClassificationReport, ScalarSeries, classify_curve, is_constant
from .families import (
    PRESETS,
    FamilyParams,
    circle,
    circular_helix,
    derived_general_helix,
    fourier_curve,
    kula_slant_helix,
    monterde_helix,
)
from .indicatrix import (
    IndicatrixKind,
    IndicatrixScalars,
    binormal_indicatrix_data,
    frenet_vector_corollary,
    indicatrix_curve,
    normal_indicatrix_data,
    similar_curves_check,
    tangent_indicatrix_data,
)
from .involute import (
    InvoluteScalars,
    InvoluteSpec,
    build_involute,
    gamma_tilde_from_gamma,
    involute_frame,
    involute_scalars,
)
from .oracle import frenet_fd_point, numeric_frenet_oracle
from .verify import VerificationReport, run_identity_suite, run_suite, run_theorem_suite

__version__ = "0.1.0"
