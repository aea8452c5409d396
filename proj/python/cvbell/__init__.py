"""Continuous-variable GHZ states and their Mermin-Klyshko Bell violations."""

from ._core import (
    BellValue,
    CapacityExceeded,
    GaussianState,
    InvalidArgument,
    NumericFailure,
    OptimizationResult,
    bell_asymptotic,
    bell_value_equal_settings,
    bell_value_general,
    bell_zero_squeezing,
    build_ghz_state,
    class_coefficients,
    expansion_json,
    fock_parity,
    maximize_asymptotic,
    maximize_over_displacement,
    mk_expand,
    optimize_phases,
    pi_by_class,
    pi_closed_form,
    pi_from_state,
    quadratic_form_of,
    symplectic_eigenvalues,
    vacuum_state,
    wigner_at,
)

__all__ = [name for name in dir() if not name.startswith("_")]
