"""Taylor-series solutions of polynomial ODEs, with reference integrators and
scenario reports."""

from ._core import (
    AccuracyError,
    BlowUpError,
    ConfigInvalid,
    DivergenceError,
    DomainError,
    IntegrationError,
    InvalidArgument,
    ModelInstance,
    NotEstimableError,
    NumericError,
    RadiusReport,
    SirEndpoints,
    Trajectory,
    estimate_radius,
    eval_series,
    lotka_volterra,
    lv_conserved,
    make_model,
    multistage_taylor,
    reference_integrate,
    reproduce_figure,
    riccati,
    riccati_exact,
    riccati_multistage_radius,
    riccati_radius,
    run_scenario,
    series_coefficients,
    sir,
    sir_endpoints,
    validate_config,
)

__all__ = [name for name in dir() if not name.startswith("_")]
