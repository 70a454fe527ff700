"""Mamdani inference: fuzzification, min/max rule evaluation, defuzzification.

Engines are immutable after construction; every operation is a pure function
of (engine, inputs), so one engine may serve any number of concurrent callers.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from ..errors import GdmError, ValidationError
from .membership import MembershipFunction

DOMAIN_TOLERANCE = 1e-9

CENTROID = "centroid"
MEAN_OF_MAXIMUM = "mom"
DEFUZZIFIERS = (CENTROID, MEAN_OF_MAXIMUM)


class DomainError(GdmError):
    """Crisp value lies outside a variable's domain beyond tolerance."""


class UnknownVariableError(GdmError):
    """A rule or input refers to a variable the engine does not know."""


class NoRuleFiredError(GdmError):
    """Every activation is zero: the inputs fall outside rule coverage."""


@dataclass(frozen=True)
class LinguisticVariable:
    """A named quantity partitioned into overlapping fuzzy terms."""

    name: str
    domain: tuple[float, float]
    terms: tuple[tuple[str, MembershipFunction], ...]

    def __post_init__(self) -> None:
        lo, hi = self.domain
        if not lo < hi:
            raise ValidationError(f"{self.name}: empty domain [{lo}, {hi}]")
        if not self.terms:
            raise ValidationError(f"{self.name}: no terms")
        labels = [label for label, _ in self.terms]
        if len(set(labels)) != len(labels):
            raise ValidationError(f"{self.name}: duplicate term labels {labels}")
        for label, mf in self.terms:
            s_lo, s_hi = mf.support
            if s_lo < lo - DOMAIN_TOLERANCE or s_hi > hi + DOMAIN_TOLERANCE:
                raise ValidationError(
                    f"{self.name}/{label}: support [{s_lo}, {s_hi}] exceeds domain"
                )

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.terms)

    def clamp(self, x: float) -> float:
        lo, hi = self.domain
        return min(hi, max(lo, float(x)))

    def fuzzify(self, x: float) -> dict[str, float]:
        """Membership degree of x in every term.

        Raises DomainError if x lies outside the domain by more than the
        shared tolerance; values inside the tolerance band are clamped.
        """
        lo, hi = self.domain
        if x < lo - DOMAIN_TOLERANCE or x > hi + DOMAIN_TOLERANCE:
            raise DomainError(f"{self.name}: {x} outside [{lo}, {hi}]")
        x = self.clamp(x)
        return {label: mf.mu(x) for label, mf in self.terms}

    def coverage_gaps(self, samples: int = 4096) -> list[float]:
        """Sampled points where no term has positive membership (should be none)."""
        lo, hi = self.domain
        xs = np.linspace(lo, hi, samples)
        return [
            float(x) for x in xs if all(mf.mu(float(x)) == 0.0 for _, mf in self.terms)
        ]


@dataclass(frozen=True)
class FuzzyRule:
    """IF every antecedent holds THEN the consequent term applies.

    Antecedents are (variable-name, term-label) pairs, one per input
    variable; the consequent is a single such pair on the output variable.
    """

    antecedents: tuple[tuple[str, str], ...]
    consequent: tuple[str, str]


class InferenceEngine:
    """Mamdani engine: min conjunction, clipped consequents, max aggregation."""

    def __init__(
        self,
        inputs: tuple[LinguisticVariable, ...],
        output: LinguisticVariable,
        rules: tuple[FuzzyRule, ...],
        defuzzifier: str = CENTROID,
        resolution: int = 2001,
    ) -> None:
        if defuzzifier not in DEFUZZIFIERS:
            raise ValidationError(f"unknown defuzzifier {defuzzifier!r}")
        if resolution < 2:
            raise ValidationError("resolution must be at least 2")
        self.inputs = tuple(inputs)
        self.output = output
        self.rules = tuple(rules)
        self.defuzzifier = defuzzifier
        self.resolution = int(resolution)
        self._by_name = {v.name: v for v in self.inputs}
        if len(self._by_name) != len(self.inputs):
            raise ValidationError("duplicate input variable names")
        if output.name in self._by_name:
            raise ValidationError("output variable shares a name with an input")
        self._validate_rules()
        self._curves: dict[int, tuple[np.ndarray, dict[str, np.ndarray]]] = {}

    def _validate_rules(self) -> None:
        seen: dict[tuple[tuple[str, str], ...], tuple[str, str]] = {}
        input_names = set(self._by_name)
        for rule in self.rules:
            named = {var for var, _ in rule.antecedents}
            if named != input_names or len(rule.antecedents) != len(self.inputs):
                raise ValidationError(
                    f"rule must name each input exactly once, got {rule.antecedents}"
                )
            for var, term in rule.antecedents:
                if term not in self._by_name[var].labels:
                    raise UnknownVariableError(f"rule names unknown term {var}.{term}")
            cvar, cterm = rule.consequent
            if cvar != self.output.name:
                raise UnknownVariableError(f"consequent variable {cvar!r} is not the output")
            if cterm not in self.output.labels:
                raise UnknownVariableError(f"rule names unknown term {cvar}.{cterm}")
            key = tuple(sorted(rule.antecedents))
            if key in seen and seen[key] != rule.consequent:
                raise ValidationError(f"contradictory rules for antecedents {key}")
            seen[key] = rule.consequent

    def clamp_inputs(self, values: dict[str, float]) -> dict[str, float]:
        self._check_input_names(values)
        return {name: self._by_name[name].clamp(x) for name, x in values.items()}

    def _check_input_names(self, values: dict[str, float]) -> None:
        unknown = set(values) - set(self._by_name)
        if unknown:
            raise UnknownVariableError(f"unknown input variables: {sorted(unknown)}")
        missing = set(self._by_name) - set(values)
        if missing:
            raise UnknownVariableError(f"missing input variables: {sorted(missing)}")

    def evaluate_rules(self, values: dict[str, float]) -> dict[str, float]:
        """Activation degree per output term: min over antecedents, max across rules."""
        self._check_input_names(values)
        fuzzified = {name: self._by_name[name].fuzzify(x) for name, x in values.items()}
        activations = {label: 0.0 for label in self.output.labels}
        for rule in self.rules:
            strength = min(fuzzified[var][term] for var, term in rule.antecedents)
            label = rule.consequent[1]
            if strength > activations[label]:
                activations[label] = strength
        return activations

    def _term_curves(self, resolution: int) -> tuple[np.ndarray, dict[str, np.ndarray]]:
        cached = self._curves.get(resolution)
        if cached is None:
            lo, hi = self.output.domain
            step = (hi - lo) / resolution
            xs = lo + (np.arange(resolution) + 0.5) * step
            curves = {
                label: np.array([mf.mu(float(x)) for x in xs])
                for label, mf in self.output.terms
            }
            cached = (xs, curves)
            self._curves[resolution] = cached
        return cached

    def aggregate(self, activations: dict[str, float], resolution: int | None = None
                  ) -> tuple[np.ndarray, np.ndarray]:
        """Midpoint-sampled aggregate membership: max of clipped consequent sets."""
        xs, curves = self._term_curves(resolution or self.resolution)
        agg = np.zeros_like(xs)
        for label, degree in activations.items():
            if label not in curves:
                raise UnknownVariableError(f"unknown output term {label!r}")
            if degree > 0.0:
                np.maximum(agg, np.minimum(degree, curves[label]), out=agg)
        return xs, agg

    def defuzzify(self, activations: dict[str, float], resolution: int | None = None) -> float:
        if all(degree <= 0.0 for degree in activations.values()):
            raise NoRuleFiredError("no rule fired: inputs outside rule coverage")
        xs, agg = self.aggregate(activations, resolution)
        if self.defuzzifier == CENTROID:
            mass = float(agg.sum())
            value = float((xs * agg).sum()) / mass
        else:
            peak = float(agg.max())
            plateau = xs[agg >= peak - 1e-12]
            value = float(plateau.mean())
        lo, hi = self.output.domain
        return min(hi, max(lo, value))

    def infer(self, values: dict[str, float]) -> float:
        """clamp -> fuzzify -> evaluate rules -> defuzzify."""
        clamped = self.clamp_inputs(values)
        return self.defuzzify(self.evaluate_rules(clamped))

    def to_document(self) -> dict:
        """Declarative description; round-trips through the loader."""
        shape = {"triangular": "tri", "trapezoidal": "trap"}

        def var_doc(v: LinguisticVariable) -> dict:
            return {
                "name": v.name,
                "domain": list(v.domain),
                "terms": [
                    {"label": label, "shape": shape[mf.kind], "points": list(mf.points)}
                    for label, mf in v.terms
                ],
            }

        return {
            "variables": [var_doc(v) for v in self.inputs] + [var_doc(self.output)],
            "rules": [
                {"if": dict(rule.antecedents), "then": {rule.consequent[0]: rule.consequent[1]}}
                for rule in self.rules
            ],
            "defuzzifier": self.defuzzifier,
            "resolution": self.resolution,
        }

    @property
    def fingerprint(self) -> str:
        """SHA-256 of the canonical engine document; recorded in reports."""
        canonical = json.dumps(self.to_document(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
