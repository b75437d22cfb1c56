"""Fixed-point machinery for generalized parametric metric spaces."""

from _gpmfix import (  # noqa: F401
    GridFunction,
    IncomparableStartError,
    ScalarMetric,
    check_combine_axioms,
    check_contraction,
    check_metric_axioms,
    greens_ivp,
    greens_periodic,
    iterate,
    power_metric,
    solve_ivp,
    solve_pbvp,
    sqrt_metric,
)
