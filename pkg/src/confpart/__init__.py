"""Conformal partition numbers, Gaussian polynomials and self-dual equations."""
from .algebra import (
    RECIPROCAL,
    SKEW,
    SelfDualPoly,
    assemble,
    assemble_product,
    conformal_transform_check,
    multiply,
    mu_by_count,
    mu_closed,
    mu_product_closed,
    q_closed,
)
from .closed_forms import eval_piecewise, universal_d
from .errors import (
    BracketError,
    ConfpartError,
    InternalInconsistencyError,
    RangeViolationError,
    RankMismatchError,
    ResourceCeilingError,
    ToleranceError,
    UnknownGroupError,
)
from .genfunc import convolve_conformal, gaussian_poly, product_gaussian
from .groups import builtin_catalog, classify, degree_duality_check, distinct_root_count, lookup_group
from .partitions import (
    conformal_count_dp,
    conformal_count_oracle,
    conformal_row_dp,
    restricted_count,
    unrestricted_count,
)
from .roots import bounds_basic, bounds_enhanced, positive_root, root_duality_check
from .toeplitz import conformal_via_toeplitz, phi_eval, phi_multinomial, solve_closed, solve_forward

__version__ = "0.1.0"
