"""Voting stage: feature normalization, preference values, collective scores.

The hotel dataset's reference matrices were derived by hand from the
stance-weighted sums and are frozen below; the two hotel4 cells where the
published matrix disagrees with the arithmetic are tracked explicitly.
"""

import random

import pytest

from fuzzygdm.errors import ValidationError
from fuzzygdm.voting import (
    AlternativeProfile,
    ExpertPreferenceVector,
    FeatureSpec,
    collective_matrix,
    compute_preference_matrix,
    feature_means,
    feature_weights,
    hotel_feature_specs,
    raw_preference,
    scale_preference,
)

HOTELS = [f"hotel{i}" for i in range(1, 8)]

# published reference matrix for the hotel dataset (set 1, raw scores)
PUBLISHED_RAW = {
    "parp1": dict(zip(HOTELS, [0, 1, 1, 0, 1, -2, -1])),
    "parp2": dict(zip(HOTELS, [3, 2, 4, 4, 4, 2, 2])),
    "parp3": dict(zip(HOTELS, [0, 2, 2, 1, 1, 0, 0])),
    "parp4": dict(zip(HOTELS, [2, 2, 3, 4, 3, 2, 2])),
}
# the stance-weighted sums yield 3 in both cells; the published 4s are
# treated as arithmetic slips and excluded from exact-match expectations
KNOWN_DEVIATIONS = {("parp2", "hotel4"), ("parp4", "hotel4")}

PUBLISHED_SCALED = {
    "parp1": dict(zip(HOTELS, [50.0, 56.25, 56.25, 50.0, 56.25, 37.5, 43.75])),
    "parp2": dict(zip(HOTELS, [68.75, 62.5, 75.0, 75.0, 75.0, 62.5, 62.5])),
    "parp3": dict(zip(HOTELS, [50.0, 62.5, 62.5, 56.25, 56.25, 50.0, 50.0])),
    "parp4": dict(zip(HOTELS, [62.5, 62.5, 68.75, 75.0, 68.75, 62.5, 62.5])),
}

PUBLISHED_COLLECTIVE = dict(
    zip(HOTELS, [57.81, 60.94, 65.62, 64.06, 64.06, 53.12, 54.69])
)


def test_feature_means_hotel_dataset(hotel_profiles):
    means = feature_means(hotel_profiles, hotel_feature_specs())
    assert means["price_per_week"] == pytest.approx(1021.43, abs=0.01)
    assert means["rating"] == pytest.approx(8.257, abs=0.001)
    assert means["room_area"] == pytest.approx(48.0, abs=1e-9)
    assert means["star"] == pytest.approx(22 / 7, abs=1e-9)
    assert means["city_minutes"] == pytest.approx(229 / 7, abs=1e-9)
    assert "meal_type" not in means
    assert "beach_access" not in means


def test_feature_means_single_alternative(hotel_profiles):
    means = feature_means(hotel_profiles[:1], hotel_feature_specs())
    assert means["price_per_week"] == 1165
    assert means["rating"] == 7.7


def test_feature_means_requires_alternatives():
    with pytest.raises(ValidationError):
        feature_means([], hotel_feature_specs())


def test_feature_weights_hotel5(hotel_profiles):
    specs = hotel_feature_specs()
    means = feature_means(hotel_profiles, specs)
    weights = feature_weights(hotel_profiles[4], specs, means)
    assert weights == {
        "price_per_week": 0.0,
        "rating": 1.0,
        "meal_type": 1.0,
        "room_area": 1.0,
        "star": 1.0,
        "beach_access": 1.0,
        "city_minutes": 1.0,
        "pool": 1.0,
    }


def test_feature_weights_hotel2(hotel_profiles):
    specs = hotel_feature_specs()
    means = feature_means(hotel_profiles, specs)
    weights = feature_weights(hotel_profiles[1], specs, means)
    assert weights == {
        "price_per_week": 1.0,
        "rating": 1.0,
        "meal_type": 0.33,
        "room_area": 0.0,
        "star": 0.0,
        "beach_access": 0.0,
        "city_minutes": 0.0,
        "pool": 0.0,
    }


def test_feature_weights_ties_go_to_zero():
    specs = (
        FeatureSpec("up", "continuous", direction="higher"),
        FeatureSpec("down", "continuous", direction="lower"),
    )
    profile = AlternativeProfile(id="x", values={"up": 5.0, "down": 5.0})
    weights = feature_weights(profile, specs, {"up": 5.0, "down": 5.0})
    assert weights == {"up": 0.0, "down": 0.0}


def test_feature_weights_unknown_category(hotel_profiles):
    specs = hotel_feature_specs()
    means = feature_means(hotel_profiles, specs)
    bogus = AlternativeProfile(
        id="x", values={**hotel_profiles[0].values, "meal_type": "half_board"}
    )
    with pytest.raises(ValidationError):
        feature_weights(bogus, specs, means)


def test_raw_preference_published_cells(hotel_profiles, hotel_experts):
    specs = hotel_feature_specs()
    means = feature_means(hotel_profiles, specs)
    weights = {alt.id: feature_weights(alt, specs, means) for alt in hotel_profiles}
    by_id = {e.participant_id: e for e in hotel_experts}
    assert raw_preference(by_id["parp1"], weights["hotel6"]) == -2
    assert raw_preference(by_id["parp2"], weights["hotel3"]) == 4
    # unrounded sum 1.67 rounds half away from zero to 2
    assert raw_preference(by_id["parp3"], weights["hotel2"]) == 2


def test_raw_preference_all_zero_stances():
    expert = ExpertPreferenceVector("p", {"a": 0, "b": 0})
    assert raw_preference(expert, {"a": 1.0, "b": 0.33}) == 0


def test_raw_preference_key_mismatch():
    expert = ExpertPreferenceVector("p", {"a": 1})
    with pytest.raises(ValidationError):
        raw_preference(expert, {"a": 1.0, "b": 0.5})


def test_stance_values_validated():
    with pytest.raises(ValidationError):
        ExpertPreferenceVector("p", {"a": 2})


def test_scale_preference_published_values():
    assert scale_preference(-2, 8) == 37.5
    assert scale_preference(0, 8) == 50.0
    assert scale_preference(8, 8) == 100.0
    assert scale_preference(-8, 8) == 0.0


def test_scale_preference_rejects_out_of_range():
    with pytest.raises(ValidationError):
        scale_preference(9, 8)


def test_scale_preference_is_affine_order_preserving():
    rng = random.Random(5)
    for _ in range(500):
        p = rng.randint(1, 12)
        a = rng.randint(-p, p - 1)
        b = rng.randint(a + 1, p)
        assert scale_preference(a, p) < scale_preference(b, p)


def test_raw_preference_is_odd_off_half_boundary():
    rng = random.Random(17)
    features = [f"f{i}" for i in range(6)]
    for _ in range(500):
        weights = {f: rng.choice([0.0, 0.33, 1.0]) for f in features}
        stances = {f: rng.choice([-1, 0, 1]) for f in features}
        total = sum(weights[f] * stances[f] for f in features)
        if abs(abs(total) % 1 - 0.5) < 1e-9:
            continue  # rounding is not odd exactly on .5 boundaries
        plus = raw_preference(ExpertPreferenceVector("p", stances), weights)
        minus = raw_preference(
            ExpertPreferenceVector("p", {f: -s for f, s in stances.items()}), weights
        )
        assert plus == -minus


def test_collective_matrix_published_columns():
    column = {"p1": {"h": 50.0}, "p2": {"h": 68.75}, "p3": {"h": 50.0}, "p4": {"h": 62.5}}
    assert collective_matrix(column)["h"] == pytest.approx(57.8125)
    column = {"p1": {"h": 56.25}, "p2": {"h": 75.0}, "p3": {"h": 62.5}, "p4": {"h": 68.75}}
    assert collective_matrix(column)["h"] == pytest.approx(65.625)


def test_collective_matrix_constant_scores():
    assert collective_matrix({"p1": {"h": 42.0}, "p2": {"h": 42.0}})["h"] == 42.0


def test_collective_matrix_rejects_ragged_rows():
    with pytest.raises(ValidationError):
        collective_matrix({"p1": {"a": 1.0, "b": 2.0}, "p2": {"a": 1.0}})


def test_collective_within_column_bounds():
    rng = random.Random(29)
    for _ in range(200):
        participants = [f"p{i}" for i in range(rng.randint(1, 6))]
        scores = {p: {"alt": rng.uniform(0, 100)} for p in participants}
        value = collective_matrix(scores)["alt"]
        column = [scores[p]["alt"] for p in participants]
        assert min(column) <= value <= max(column)


def test_hotel_dataset_reproduction(hotel_profiles, hotel_experts):
    matrix = compute_preference_matrix(hotel_profiles, hotel_feature_specs(), hotel_experts)

    matches = sum(
        matrix.raw[p][h] == PUBLISHED_RAW[p][h]
        for p in PUBLISHED_RAW
        for h in HOTELS
    )
    assert matches >= 26
    mismatches = {
        (p, h)
        for p in PUBLISHED_RAW
        for h in HOTELS
        if matrix.raw[p][h] != PUBLISHED_RAW[p][h]
    }
    assert mismatches <= KNOWN_DEVIATIONS

    # scaled values match the published set 2 on every reproduced cell
    for p in PUBLISHED_SCALED:
        for h in HOTELS:
            if (p, h) in mismatches:
                continue
            assert matrix.scaled[p][h] == pytest.approx(PUBLISHED_SCALED[p][h], abs=1e-9)

    # internal consistency: our scaled and collective derive exactly from our raw
    for p, row in matrix.raw.items():
        for h, raw in row.items():
            assert matrix.scaled[p][h] == scale_preference(raw, matrix.feature_count)
    assert matrix.collective == collective_matrix(matrix.scaled)


def test_published_scaled_matrix_reproduces_collective_row():
    collective = collective_matrix(PUBLISHED_SCALED)
    for hotel, expected in PUBLISHED_COLLECTIVE.items():
        assert collective[hotel] == pytest.approx(expected, abs=0.01)


def test_missing_voters_are_excluded(hotel_profiles, hotel_experts):
    matrix = compute_preference_matrix(
        hotel_profiles, hotel_feature_specs(), hotel_experts[:2]
    )
    assert set(matrix.raw) == {"parp1", "parp2"}
    assert matrix.collective["hotel1"] == pytest.approx((50.0 + 68.75) / 2)


def test_feature_spec_validation():
    with pytest.raises(ValidationError):
        FeatureSpec("x", "continuous")  # no direction
    with pytest.raises(ValidationError):
        FeatureSpec("x", "binary", direction="higher")
    with pytest.raises(ValidationError):
        FeatureSpec("x", "coded")  # no coding table
    with pytest.raises(ValidationError):
        FeatureSpec("x", "coded", coding={"a": 1.5})  # coefficient out of range
    with pytest.raises(ValidationError):
        FeatureSpec("x", "scalar")


def test_alternative_profile_validation(hotel_profiles):
    specs = hotel_feature_specs()
    with pytest.raises(ValidationError):
        AlternativeProfile(id="x", values={"price_per_week": 1}).validate_against(specs)
    broken = AlternativeProfile(
        id="x", values={**hotel_profiles[0].values, "pool": 2}
    )
    with pytest.raises(ValidationError):
        broken.validate_against(specs)
