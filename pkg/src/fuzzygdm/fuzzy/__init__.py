from .engine import (
    CENTROID,
    MEAN_OF_MAXIMUM,
    DomainError,
    FuzzyRule,
    InferenceEngine,
    LinguisticVariable,
    NoRuleFiredError,
    UnknownVariableError,
)
from .loader import engine_from_document, load_bundled_engine, load_engine
from .membership import MembershipFunction, triangular_mu, trapezoidal_mu

__all__ = [
    "CENTROID",
    "MEAN_OF_MAXIMUM",
    "DomainError",
    "FuzzyRule",
    "InferenceEngine",
    "LinguisticVariable",
    "MembershipFunction",
    "NoRuleFiredError",
    "UnknownVariableError",
    "engine_from_document",
    "load_bundled_engine",
    "load_engine",
    "triangular_mu",
    "trapezoidal_mu",
]
