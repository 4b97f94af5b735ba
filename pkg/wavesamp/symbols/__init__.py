from .engine import (
    DEFAULT_K,
    DEFAULT_N,
    EPS_DIV,
    TAU_ZERO,
    checked_ratio,
    delta_symbol,
    extract_filter,
    gramian,
    interpolation_spectrum,
    pe_function,
    periodization,
    periodize,
    qs_symbol,
    refinement_symbol,
    relative_threshold,
    squared_bounds,
    standard_wavelet_symbol,
    symbol_layout,
    two_scale_symbol,
    two_scale_symbol_Ps,
    two_scale_symbol_Ps_via_Pphi,
    verify_two_scale_filter,
)
from .error import DenominatorNearZero, DivisionNearZero, GridMismatch, ProbeMismatch, SymbolError
from .filter import LaurentFilter
from .grid import EIGHT_PI, FOUR_PI, TWO_PI, PeriodicSymbol, combine, z_symbol
from .identities import (
    endpoint_residual,
    endpoint_values,
    filter_relation_residual,
    gramian_splitting_residual,
    halfband_residual,
    poisson_residual,
    two_scale_residual,
    wavelet_halfband_residual,
)

__all__ = (
    "DEFAULT_K",
    "DEFAULT_N",
    "EIGHT_PI",
    "EPS_DIV",
    "FOUR_PI",
    "TAU_ZERO",
    "TWO_PI",
    "DenominatorNearZero",
    "DivisionNearZero",
    "GridMismatch",
    "LaurentFilter",
    "PeriodicSymbol",
    "ProbeMismatch",
    "SymbolError",
    "checked_ratio",
    "combine",
    "delta_symbol",
    "endpoint_residual",
    "endpoint_values",
    "extract_filter",
    "filter_relation_residual",
    "gramian",
    "gramian_splitting_residual",
    "halfband_residual",
    "interpolation_spectrum",
    "pe_function",
    "periodization",
    "periodize",
    "poisson_residual",
    "qs_symbol",
    "refinement_symbol",
    "relative_threshold",
    "squared_bounds",
    "standard_wavelet_symbol",
    "symbol_layout",
    "two_scale_residual",
    "two_scale_symbol",
    "two_scale_symbol_Ps",
    "two_scale_symbol_Ps_via_Pphi",
    "verify_two_scale_filter",
    "wavelet_halfband_residual",
    "z_symbol",
)
