"""Bias-robust weighted course ratings from peer competence networks."""

from .degree import WeightVector, degree_weights, weighted_rating
from .dispersion import (
    DispersionAggregate,
    DispersionRow,
    InstructorRecord,
    aggregate,
    dispersion_row,
    mode_of,
    read_dispersion_csv,
)
from .eigenfactor import (
    InfluenceVector,
    StochasticMatrix,
    TransitionModel,
    build_stochastic,
    eigenfactor_weights,
    materialize_transition,
    stationary_distribution,
)
from .errors import (
    ClassrankError,
    DegenerateNetwork,
    DimensionMismatch,
    EmptyInput,
    IndexOutOfRange,
    MalformedInput,
    NoConvergence,
    NonBinaryEntry,
    NonZeroDiagonal,
    ScaleViolation,
)
from .report import WeightedRatingReport, rate_survey
from .scenarios import (
    ReductionSummary,
    Scenario,
    ScenarioResult,
    error_reduction_summary,
    inject_bias,
    load_scenarios,
    run_scenario,
)
from .survey import (
    CompetenceMatrix,
    NormalizedMatrix,
    RatingVector,
    SurveyInstance,
    load_survey_csv,
    load_survey_json,
    normalize,
    validate_survey,
)

__version__ = "0.1.0"

__all__ = [
    "ClassrankError",
    "CompetenceMatrix",
    "DegenerateNetwork",
    "DimensionMismatch",
    "DispersionAggregate",
    "DispersionRow",
    "EmptyInput",
    "IndexOutOfRange",
    "InfluenceVector",
    "InstructorRecord",
    "MalformedInput",
    "NoConvergence",
    "NonBinaryEntry",
    "NonZeroDiagonal",
    "NormalizedMatrix",
    "RatingVector",
    "ReductionSummary",
    "ScaleViolation",
    "Scenario",
    "ScenarioResult",
    "StochasticMatrix",
    "SurveyInstance",
    "TransitionModel",
    "WeightVector",
    "WeightedRatingReport",
    "aggregate",
    "build_stochastic",
    "degree_weights",
    "dispersion_row",
    "eigenfactor_weights",
    "error_reduction_summary",
    "inject_bias",
    "load_scenarios",
    "load_survey_csv",
    "load_survey_json",
    "materialize_transition",
    "mode_of",
    "normalize",
    "rate_survey",
    "read_dispersion_csv",
    "run_scenario",
    "stationary_distribution",
    "validate_survey",
    "weighted_rating",
]
