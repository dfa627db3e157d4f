"""Executable versions of the maximization results for ellipsoids and toric domains."""
from .concave import check_concave_profile, random_concave_profile, tangent_ellipsoid, verify_concave_max
from .convex import GRIDS, ConvexSweepReport, GridSpec, sweep_convex_toric, verify_convex_toric_max
from .ellipsoids import (
    GridSearchResult,
    MaximizerReport,
    Verdict,
    default_directions,
    ellipsoid_grid_max,
    global_ellipsoid_max,
    global_max_power,
    kappa,
    verify_global_ellipsoid_max,
    verify_local_ellipsoid_max,
)
from .two_corner import (
    Condition,
    Thresholds,
    TwoCornerFamily,
    balanced_t,
    check_ratio_identity,
    check_two_corner_supports,
    conditions_holding,
    thresholds,
    two_corner_area,
    two_corner_profile,
    two_corner_ratio_identity,
    two_corner_supports,
    uncovered_parameters,
)
