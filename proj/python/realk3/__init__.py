"""Exact q-series engine for real and complex rational curve counts on K3 surfaces."""

from ._realk3 import (
    InvalidTopology,
    NotInvertible,
    RingMismatch,
    Series,
    check_lehner,
    congruence_suite,
    convergence_report,
    factor_product,
    hr_estimate,
    klein_qj,
    parity_sequence,
    partition_p,
    partition_q,
    predicted_log_count,
    refined_count_bound,
    run_cli,
    sigma3,
    table,
    theta,
    tritangent_bound,
    verify_monotonicity,
    welschinger,
    yau_zaslow,
)

__all__ = [name for name in dir() if not name.startswith("_")]
