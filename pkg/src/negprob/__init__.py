"""Negation of discrete probability distributions, the uncertainty
measures it interacts with, and a seeded engine that confirms or refutes
structural claims about that interaction.
"""

from .claims import (
    CLAIMS,
    CONFIRMED,
    REFUTED,
    VACUOUS,
    Claim,
    ClaimReport,
    Counterexample,
    UnknownClaim,
    check_all,
    check_claim,
    claim_by_id,
    reports_to_json,
)
from .measures import (
    MeasureSet,
    entropy,
    extropy,
    gini_entropy,
    measure_all,
    uniform_varextropy,
    varentropy,
    varextropy,
)
from .negation import NegationTrace, TraceStep, negate, negate_k, trace_negation
from .simplex import (
    SUM_TOLERANCE,
    DimensionMismatch,
    Distribution,
    NotADistribution,
    SimplexSamplerConfig,
    TooFewOutcomes,
    majorizes,
    make_distribution,
    sample_uniform_simplex,
    uniform,
)

__version__ = "0.1.0"

__all__ = [
    "CLAIMS",
    "CONFIRMED",
    "REFUTED",
    "VACUOUS",
    "Claim",
    "ClaimReport",
    "Counterexample",
    "DimensionMismatch",
    "Distribution",
    "MeasureSet",
    "NegationTrace",
    "NotADistribution",
    "SUM_TOLERANCE",
    "SimplexSamplerConfig",
    "TooFewOutcomes",
    "TraceStep",
    "UnknownClaim",
    "check_all",
    "check_claim",
    "claim_by_id",
    "entropy",
    "extropy",
    "gini_entropy",
    "majorizes",
    "make_distribution",
    "measure_all",
    "negate",
    "negate_k",
    "reports_to_json",
    "sample_uniform_simplex",
    "trace_negation",
    "uniform",
    "uniform_varextropy",
    "varentropy",
    "varextropy",
]
