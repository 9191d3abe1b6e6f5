"""Monotone Riemannian metrics on density matrices.

Evaluates the Petz-classified family of statistically monotone metrics on
strictly positive density matrices, with the skew-information ("wy") metric
as the centerpiece: its constant scalar curvature, geodesic distance and
path through the square-root sphere embedding, relative g-entropy Hessians,
and the dual-pair characterization of pull-back metrics.
"""

from .classical import (
    ScoreVector,
    bhattacharyya_distance,
    classical_geodesic,
    exponential_transport,
    fisher_rao_metric,
    fisher_rao_scal_constant,
    mixture_transport,
    probability_vector,
    score_from_tangent,
    score_inner,
    simplex_sphere_map,
    sphere_map_differential,
)
from .curvature import (
    CurvatureReport,
    scal_aux_terms,
    scalar_curvature,
    wy_aux_closed_forms,
    wy_scal1_constant,
)
from .divergence import (
    HessianResult,
    OperatorConvexG,
    alpha_parameter,
    bures_distance,
    g_catalog,
    g_entry,
    hessian_check,
    monotone_from_convex,
    relative_g_entropy,
    relative_modular_apply,
)
from .errors import DomainError, InvariantViolation, StepTooLargeError
from .geometry import (
    C1Function,
    DualPairReport,
    GeodesicPath,
    double_sqrt_function,
    dual_pair_check,
    general_pullback_differential,
    identity_function,
    log_function,
    path_length,
    power_function,
    pullback_condition_check,
    pullback_differential,
    pullback_metric,
    self_duality_scan,
    sqrt_pullback,
    symmetry_margin,
    wy_distance,
    wy_distance_audit,
    wy_geodesic,
)
from .linalg import (
    KrausChannel,
    SpectralDecomposition,
    TangentSplit,
    apply_channel,
    apply_kernel_superop,
    assert_density,
    assert_hermitian,
    assert_tangent,
    commutator,
    hs_inner,
    hs_norm,
    matrix_function,
    random_density,
    random_kraus_channel,
    random_tangent,
    random_unitary,
    spectral_decompose,
    tangent_split,
)
from .monotone import (
    ContractionResult,
    MonotoneFunctionEntry,
    MonotonicityReport,
    catalog,
    catalog_entry,
    contraction_check,
    metric_eval,
    sampled_operator_monotonicity,
    skew_identity_residual,
    skew_information,
)
from .suites import SuiteConfig, SuiteReport, default_config, run_suite

__version__ = "0.1.0"
