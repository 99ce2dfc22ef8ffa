"""Entanglement scaling toolkit: exact-diagonalization sweeps of the adiabatic
Exact Cover algorithm, closed-form adiabatic Grover analysis, and Shor
pre-QFT entanglement cases."""

from ._core import (
    ConvergenceError,
    EnsembleStats,
    ExactCoverInstance,
    GroverPoint,
    InvalidStateError,
    ResourceLimitError,
    ShorCase,
    StateVector,
    SweepProfile,
    SweepRecord,
    aggregate,
    count_satisfying,
    entropy,
    enumerate_bipartitions,
    factors_from_order,
    fit,
    fit_critical_region,
    generate_instance,
    grover_asymptotic_entropy,
    grover_entropy_curve,
    grover_ground_energy,
    grover_numeric_state,
    grover_point,
    instance_from_json,
    lowest_two,
    order,
    page_entropy,
    partition_extremes,
    reduced_spectrum,
    sample_bipartitions,
    schmidt_rank,
    shor_case,
    shor_pre_qft_state,
    shor_target_report,
    sweep,
)

__all__ = [
    "ConvergenceError",
    "EnsembleStats",
    "ExactCoverInstance",
    "GroverPoint",
    "InvalidStateError",
    "ResourceLimitError",
    "ShorCase",
    "StateVector",
    "SweepProfile",
    "SweepRecord",
    "aggregate",
    "count_satisfying",
    "entropy",
    "enumerate_bipartitions",
    "factors_from_order",
    "fit",
    "fit_critical_region",
    "generate_instance",
    "grover_asymptotic_entropy",
    "grover_entropy_curve",
    "grover_ground_energy",
    "grover_numeric_state",
    "grover_point",
    "instance_from_json",
    "lowest_two",
    "order",
    "page_entropy",
    "partition_extremes",
    "reduced_spectrum",
    "sample_bipartitions",
    "schmidt_rank",
    "shor_case",
    "shor_pre_qft_state",
    "shor_target_report",
    "sweep",
]
