"""Metaheuristic finite element model updating.

Fish School Search (plain and biased), inertia-weight PSO and a real-coded
GA, benchmarked on the model updating of a GARTEUR-style beam-frame
aeroplane. The heavy lifting lives in the C++ extension module.
"""

from femup._core import (  # noqa: F401
    AlgoSummary,
    BenchmarkSummary,
    GarteurConfig,
    ParameterVector,
    RunRecord,
    SearchSpace,
    UpdatingProblem,
    clamp_to_bounds,
    default_garteur_problem,
    default_measured_hz,
    default_search_space,
    dump_mesh,
    emit_outputs,
    evaluate_objective,
    inertia_weight,
    linear_schedule,
    model_frequencies,
    run_benchmark,
    run_surrogate,
    run_trial,
    total_error_percent,
    trace_csv,
)

__all__ = [
    "AlgoSummary",
    "BenchmarkSummary",
    "GarteurConfig",
    "ParameterVector",
    "RunRecord",
    "SearchSpace",
    "UpdatingProblem",
    "clamp_to_bounds",
    "default_garteur_problem",
    "default_measured_hz",
    "default_search_space",
    "dump_mesh",
    "emit_outputs",
    "evaluate_objective",
    "inertia_weight",
    "linear_schedule",
    "model_frequencies",
    "run_benchmark",
    "run_surrogate",
    "run_trial",
    "total_error_percent",
    "trace_csv",
]
