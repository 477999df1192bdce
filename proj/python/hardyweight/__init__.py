"""Improved discrete Hardy weight on the half-line.

Thin Python layer over the C++ core: exact series coefficients, the closed
form and series of the improved weight, the ground-state-transform operators,
and the verification battery.
"""

from ._core import (
    WeightFunction,
    apply_dirichlet_laplacian,
    apply_weighted_laplacian,
    classical_gap_from_increments,
    classical_hardy_weight,
    classical_weight,
    energy,
    ground_state,
    ground_state_residual,
    ground_state_weight,
    gst_defect,
    half_binomial,
    hardy_gap,
    improved_weight,
    improved_weight_closed,
    improved_weight_closed_extended,
    improved_weight_series,
    improved_weight_series_exact,
    inflated_improved_weight,
    min_generalized_eigenvalue,
    random_positive_weight,
    random_test_sequence,
    run_verification,
    series_coefficient,
    unitarity_defect,
    weight_from_positive_solution,
    weighted_form,
    weighted_inner,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
