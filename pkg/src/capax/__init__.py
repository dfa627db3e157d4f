"""Exact higher symplectic capacities of ellipsoids, polydisks and 4-dimensional toric domains."""
from .ellipsoid import (
    Ellipsoid,
    SpectrumEntry,
    capacities,
    capacity,
    common_period,
    is_rational,
    iter_spectrum,
    k_m,
    k_set,
    spectrum,
)
from .exact import INF, DomainError, ceil_div_two, format_rational, parse_rational, rational_lcm
from .ratio import Ordering, RatioValue, crossover_check, ratio_ellipsoid, ratio_polydisk_closed_form, ratio_toric
from .toric import (
    Kind,
    ToricProfile,
    capacity_concave,
    capacity_convex,
    ellipsoid_profile,
    load_profile,
    polydisk_profile,
    support_max,
    support_min_on_graph,
    volume,
)

__version__ = "0.1.0"
