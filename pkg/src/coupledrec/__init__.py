"""Exact decoupling of two coupled higher-order linear recurrences."""
from .algebra import Mat2, Poly, Scalar, ddet, det, mix, parse_scalar, format_scalar, trace
from .companion import SquareMatrix, build_companion, char_poly_oracle, step
from .decouple import (
    CoefficientVector,
    CoupledSystem,
    char_poly,
    coefficients_closed,
    coefficients_recursive,
    trim_trailing_zeros,
)
from .sequence import (
    SequencePair,
    bootstrap_initials,
    generate_coupled,
    generate_decoupled,
    verify_recurrence,
)
from .tiling import coefficient_triangle, enumerate_tilings, tiling_counts, tiling_system

__version__ = "0.1.0"
