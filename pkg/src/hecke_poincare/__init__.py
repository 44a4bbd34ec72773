"""Exact Poincare series of quantum spaces and their matrix quantum semigroups."""

from .errors import (
    HeckePoincareError,
    IndexOutOfRange,
    InsufficientPrecision,
    InvalidShape,
    MismatchedParameter,
    NegativeDimension,
    NonIntegralDimension,
    WeightMismatch,
    ZeroConstantTerm,
)
from .partition import (
    Partition,
    SkewShape,
    conjugate,
    contains,
    enumerate_partitions,
    in_hook_region,
    partitions_up_to,
)
from .positivity import (
    MinorSpec,
    PositivityReport,
    PPReport,
    check_p_sequence,
    check_pp_sequence,
    toeplitz_minor,
)
from .quantum import (
    Classification,
    DimensionTable,
    QuantumSpaceSpec,
    classify,
    comodule_dims,
    e_series_via_dims,
    e_series_via_star,
    hecke_sum,
    lambda_series,
    s_series,
    specialization,
)
from .series import (
    FactoredSeries,
    TruncatedSeries,
    dual_series,
    exp_integral,
    expand,
    factored_multiply,
    invert,
    lambda_product,
    log_derivative,
    multiply,
)
from .symfun import (
    Specialization,
    Tableau,
    hook_content_dim,
    kostka,
    lr_coefficient,
    schur_polynomial_oracle,
    schur_value,
    semistandard_tableaux,
    skew_schur_value,
    super_schur_value,
)

__version__ = "0.1.0"
