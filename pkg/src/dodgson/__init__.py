"""Exact determinants by Dodgson condensation, and MacMahon's binomial determinant."""

from .arith import (
    DivisionByZero,
    DomainError,
    Rational,
    binomial,
    factorial,
    parse_rational,
    render_rational,
    superfactorial,
)
from .condense import (
    Algorithm,
    CondensationState,
    DetResult,
    FallbackEvent,
    SizeError,
    Strategy,
    ZeroInteriorPivot,
    bareiss_det,
    condensation_layers,
    condense_step,
    det,
    dodgson_det,
    initial_state,
    laplace_det,
)
from .macmahon import (
    MacMahonParams,
    VerificationReport,
    bhp_value,
    binomial_matrix,
    macmahon_closed_form,
    recurrence_rhs,
    verify_bhp,
    verify_identity,
    verify_recurrence,
)
from .matrix import FormatError, Matrix, MatrixWindow, parse_matrix, render_matrix, window

__version__ = "0.1.0"
