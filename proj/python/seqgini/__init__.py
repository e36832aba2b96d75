"""Purely sequential fixed-width confidence intervals for the Gini index."""

from ._core import (
    CapExceededError,
    ConfigError,
    DistributionSpec,
    DomainError,
    ExperimentConfig,
    Family,
    InsufficientDataError,
    InvalidObservationError,
    MomentExistenceError,
    RunningStats,
    SeqGiniError,
    SequentialResult,
    SimulationReport,
    SourceExhaustedError,
    StatisticsSnapshot,
    StoppingConfig,
    TracePoint,
    TruePopulationParams,
    UndefinedGiniError,
    batch_statistics,
    brute_force_statistics,
    default_spec,
    format_report,
    normal_cdf,
    norm_quantile,
    optimal_c,
    pilot_size,
    report_to_json,
    run_experiment,
    run_sequential,
    run_sequential_sampled,
    sample_values,
    should_stop,
    stop_threshold,
    true_gini,
    true_params,
    z_quantile,
)

__all__ = [
    "CapExceededError",
    "ConfigError",
    "DistributionSpec",
    "DomainError",
    "ExperimentConfig",
    "Family",
    "InsufficientDataError",
    "InvalidObservationError",
    "MomentExistenceError",
    "RunningStats",
    "SeqGiniError",
    "SequentialResult",
    "SimulationReport",
    "SourceExhaustedError",
    "StatisticsSnapshot",
    "StoppingConfig",
    "TracePoint",
    "TruePopulationParams",
    "UndefinedGiniError",
    "batch_statistics",
    "brute_force_statistics",
    "default_spec",
    "format_report",
    "normal_cdf",
    "norm_quantile",
    "optimal_c",
    "pilot_size",
    "report_to_json",
    "run_experiment",
    "run_sequential",
    "run_sequential_sampled",
    "sample_values",
    "should_stop",
    "stop_threshold",
    "true_gini",
    "true_params",
    "z_quantile",
]

__version__ = "0.1.0"
