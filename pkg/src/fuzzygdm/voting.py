"""Preference values from criterion stances and alternative features.

Each expert holds a stance in {-1, 0, 1} per criterion.  Alternative
features are reduced to weights in [0, 1]: continuous features by strict
comparison against the group mean (ties weigh 0), binary features by their
raw value, coded categories by their coefficient.  The raw preference is
the rounded stance-weighted sum, scaled to [0, 100] and averaged into the
collective row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ValidationError

CONTINUOUS = "continuous"
BINARY = "binary"
CODED = "coded"

HIGHER = "higher"
LOWER = "lower"


@dataclass(frozen=True)
class FeatureSpec:
    """How one feature of an alternative is normalized and judged."""

    name: str
    kind: str
    direction: str | None = None
    coding: Mapping[str, float] | None = None

    def __post_init__(self) -> None:
        if self.kind not in (CONTINUOUS, BINARY, CODED):
            raise ValidationError(f"{self.name}: unknown feature kind {self.kind!r}")
        if self.kind == CONTINUOUS:
            if self.direction not in (HIGHER, LOWER):
                raise ValidationError(
                    f"{self.name}: continuous features need direction 'higher' or 'lower'"
                )
        elif self.direction is not None:
            raise ValidationError(f"{self.name}: direction only applies to continuous features")
        if self.kind == CODED:
            if not self.coding:
                raise ValidationError(f"{self.name}: coded features need a coding table")
            for label, coefficient in self.coding.items():
                if not 0.0 <= coefficient <= 1.0:
                    raise ValidationError(
                        f"{self.name}: coding coefficient for {label!r} outside [0, 1]"
                    )
        elif self.coding is not None:
            raise ValidationError(f"{self.name}: coding only applies to coded features")


@dataclass(frozen=True)
class AlternativeProfile:
    """An alternative's raw attribute values, keyed by feature name."""

    id: str
    values: Mapping[str, float | str]

    def validate_against(self, specs: Sequence[FeatureSpec]) -> None:
        for spec in specs:
            if spec.name not in self.values:
                raise ValidationError(f"alternative {self.id!r} missing feature {spec.name!r}")
            value = self.values[spec.name]
            if spec.kind == BINARY and value not in (0, 1):
                raise ValidationError(
                    f"alternative {self.id!r} feature {spec.name!r}: binary value must be 0 or 1"
                )
            if spec.kind == CODED and value not in spec.coding:  # type: ignore[operator]
                raise ValidationError(
                    f"alternative {self.id!r} feature {spec.name!r}: unknown category {value!r}"
                )


@dataclass(frozen=True)
class ExpertPreferenceVector:
    """One participant's stance per criterion: -1 against, 0 indifferent, 1 in favor."""

    participant_id: str
    stances: Mapping[str, int]

    def __post_init__(self) -> None:
        for feature, stance in self.stances.items():
            if stance not in (-1, 0, 1):
                raise ValidationError(
                    f"participant {self.participant_id!r} feature {feature!r}: "
                    f"stance must be -1, 0 or 1 (got {stance!r})"
                )


def hotel_feature_specs() -> tuple[FeatureSpec, ...]:
    """Feature schema of the bundled hotel dataset."""
    return (
        FeatureSpec("price_per_week", CONTINUOUS, direction=LOWER),
        FeatureSpec("rating", CONTINUOUS, direction=HIGHER),
        FeatureSpec("meal_type", CODED, coding={"breakfast": 0.33, "all_inclusive": 1.0}),
        FeatureSpec("room_area", CONTINUOUS, direction=HIGHER),
        FeatureSpec("star", CONTINUOUS, direction=HIGHER),
        FeatureSpec("beach_access", BINARY),
        FeatureSpec("city_minutes", CONTINUOUS, direction=LOWER),
        FeatureSpec("pool", BINARY),
    )


def feature_means(
    alternatives: Sequence[AlternativeProfile], specs: Sequence[FeatureSpec]
) -> dict[str, float]:
    """Arithmetic mean of every continuous feature across the alternatives."""
    if not alternatives:
        raise ValidationError("at least one alternative required to compute means")
    means: dict[str, float] = {}
    for spec in specs:
        if spec.kind != CONTINUOUS:
            continue
        values = [float(alt.values[spec.name]) for alt in alternatives]
        means[spec.name] = sum(values) / len(values)
    return means


def feature_weights(
    alternative: AlternativeProfile,
    specs: Sequence[FeatureSpec],
    means: Mapping[str, float],
) -> dict[str, float]:
    """Weight in [0, 1] per feature.

    Continuous features binarize against the mean with strict inequality,
    so a value exactly on the mean weighs 0.
    """
    weights: dict[str, float] = {}
    for spec in specs:
        value = alternative.values[spec.name]
        if spec.kind == CONTINUOUS:
            better = float(value) > means[spec.name] if spec.direction == HIGHER \
                else float(value) < means[spec.name]
            weights[spec.name] = 1.0 if better else 0.0
        elif spec.kind == BINARY:
            weights[spec.name] = float(value)
        else:
            if value not in spec.coding:  # type: ignore[operator]
                raise ValidationError(
                    f"alternative {alternative.id!r} feature {spec.name!r}: "
                    f"unknown category {value!r}"
                )
            weights[spec.name] = float(spec.coding[value])  # type: ignore[index]
    return weights


def _round_half_away(x: float) -> int:
    if x >= 0:
        return math.floor(x + 0.5)
    return math.ceil(x - 0.5)


def raw_preference(expert: ExpertPreferenceVector, weights: Mapping[str, float]) -> int:
    """Rounded stance-weighted sum; lands in [-p, p] for p features."""
    if set(expert.stances) != set(weights):
        raise ValidationError(
            f"participant {expert.participant_id!r}: stance features "
            f"{sorted(expert.stances)} do not match weight features {sorted(weights)}"
        )
    total = sum(weights[name] * expert.stances[name] for name in weights)
    return _round_half_away(total)


def scale_preference(raw: int, feature_count: int) -> float:
    """Affine map from [-p, p] onto [0, 100]."""
    if abs(raw) > feature_count:
        raise ValidationError(f"raw preference {raw} outside [-{feature_count}, {feature_count}]")
    return (raw + feature_count) / (2 * feature_count) * 100.0


def collective_matrix(scaled: Mapping[str, Mapping[str, float]]) -> dict[str, float]:
    """Per-alternative mean of the scaled scores across participants.

    Every row must cover the same alternatives; participants who never
    voted are simply absent from the mapping.
    """
    if not scaled:
        raise ValidationError("no scaled scores to aggregate")
    rows = list(scaled.values())
    alternative_ids = set(rows[0])
    for participant, row in scaled.items():
        if set(row) != alternative_ids:
            raise ValidationError(f"ragged matrix: row {participant!r} differs in alternatives")
    return {
        alt: sum(row[alt] for row in rows) / len(rows)
        for alt in sorted(alternative_ids)
    }


@dataclass(frozen=True)
class PreferenceMatrix:
    """Raw and scaled per-(participant, alternative) scores plus the collective row."""

    feature_count: int
    raw: Mapping[str, Mapping[str, int]]
    scaled: Mapping[str, Mapping[str, float]]
    collective: Mapping[str, float]


def compute_preference_matrix(
    alternatives: Sequence[AlternativeProfile],
    specs: Sequence[FeatureSpec],
    experts: Iterable[ExpertPreferenceVector],
) -> PreferenceMatrix:
    """Full voting stage: weights -> raw -> scaled -> collective."""
    for alt in alternatives:
        alt.validate_against(specs)
    means = feature_means(alternatives, specs)
    weights = {alt.id: feature_weights(alt, specs, means) for alt in alternatives}
    p = len(specs)
    raw: dict[str, dict[str, int]] = {}
    scaled: dict[str, dict[str, float]] = {}
    for expert in experts:
        raw_row = {alt.id: raw_preference(expert, weights[alt.id]) for alt in alternatives}
        raw[expert.participant_id] = raw_row
        scaled[expert.participant_id] = {
            alt_id: scale_preference(value, p) for alt_id, value in raw_row.items()
        }
    return PreferenceMatrix(
        feature_count=p,
        raw=raw,
        scaled=scaled,
        collective=collective_matrix(scaled),
    )
