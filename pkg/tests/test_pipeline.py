import pytest

from fuzzygdm.errors import NoDiscussionSignalError, ValidationError
from fuzzygdm.pipeline import rank, run_pipeline
from fuzzygdm.textsignals import (
    DiscussionSignal,
    EmotionVector,
    PrecomputedSignalProvider,
)
from fuzzygdm.voting import hotel_feature_specs

# published per-alternative inputs for the hotel dataset
PUBLISHED_INPUTS = {
    "hotel1": (57.81, -0.09),
    "hotel2": (60.94, 0.00),
    "hotel3": (65.62, 0.49),
    "hotel4": (64.06, 0.07),
    "hotel5": (64.06, 0.13),
    "hotel6": (53.12, -0.48),
    "hotel7": (54.69, -0.29),
}


@pytest.fixture()
def hotel_report(hotel_profiles, hotel_experts, signals_fixture, total_preference_engine):
    provider = PrecomputedSignalProvider.from_fixture(signals_fixture)
    return run_pipeline(
        alternatives=hotel_profiles,
        specs=hotel_feature_specs(),
        experts=hotel_experts,
        signals=provider.signals(),
        engine=total_preference_engine,
    )


def test_pipeline_winner_is_hotel3(hotel_report):
    assert hotel_report.winner_id == "hotel3"
    assert hotel_report.results[0].alternative_id == "hotel3"
    assert hotel_report.results[0].rank == 1


def test_pipeline_ranks_are_a_permutation(hotel_report):
    ranks = [result.rank for result in hotel_report.results]
    assert sorted(ranks) == list(range(1, 8))
    ids = {result.alternative_id for result in hotel_report.results}
    assert ids == {f"hotel{i}" for i in range(1, 8)}


def test_pipeline_fields_within_domains(hotel_report):
    for result in hotel_report.results:
        assert 0.0 <= result.voting_score <= 100.0
        assert -1.0 <= result.total_sentiment <= 1.0
        assert 0.0 <= result.fuzzy_score <= 10.0


def test_pipeline_is_deterministic(
    hotel_profiles, hotel_experts, signals_fixture, total_preference_engine
):
    provider = PrecomputedSignalProvider.from_fixture(signals_fixture)

    def build():
        return run_pipeline(
            hotel_profiles,
            hotel_feature_specs(),
            hotel_experts,
            provider.signals(),
            total_preference_engine,
        )

    first, second = build(), build()
    assert first == second
    assert first.engine_fingerprint == total_preference_engine.fingerprint


def test_pipeline_missing_signals_errors(
    hotel_profiles, hotel_experts, signals_fixture, total_preference_engine
):
    provider = PrecomputedSignalProvider.from_fixture(signals_fixture)
    partial = [s for s in provider.signals() if s.alternative_id != "hotel4"]
    with pytest.raises(NoDiscussionSignalError):
        run_pipeline(
            hotel_profiles,
            hotel_feature_specs(),
            hotel_experts,
            partial,
            total_preference_engine,
        )


def test_pipeline_rejects_engine_with_wrong_inputs(
    hotel_profiles, hotel_experts, signals_fixture, feedback_engine
):
    provider = PrecomputedSignalProvider.from_fixture(signals_fixture)
    with pytest.raises(ValidationError):
        run_pipeline(
            hotel_profiles,
            hotel_feature_specs(),
            hotel_experts,
            provider.signals(),
            feedback_engine,
        )


def test_identical_alternatives_tie_break_deterministically(
    hotel_profiles, total_preference_engine
):
    from fuzzygdm.voting import ExpertPreferenceVector

    clones = [
        hotel_profiles[0],
        type(hotel_profiles[0])(id="hotel0", values=dict(hotel_profiles[0].values)),
    ]
    experts = [
        ExpertPreferenceVector(
            "p1", {name: 1 for name in hotel_profiles[0].values}
        )
    ]
    signals = [
        DiscussionSignal("p1", "hotel1", 0.2, EmotionVector(happy=1.0)),
        DiscussionSignal("p1", "hotel0", 0.2, EmotionVector(happy=1.0)),
    ]
    report = run_pipeline(
        clones, hotel_feature_specs(), experts, signals, total_preference_engine
    )
    assert [r.fuzzy_score for r in report.results][0] == pytest.approx(
        [r.fuzzy_score for r in report.results][1]
    )
    # identical scores resolve by id
    assert [r.alternative_id for r in report.results] == ["hotel0", "hotel1"]


def test_dominating_alternative_ranks_first(total_preference_engine):
    """A clear dominator on both inputs outranks the dominated alternative.

    Verified against the engine directly: the chosen pair sits away from
    membership crossings, where inference is strictly increasing.
    """
    strong = total_preference_engine.infer({"voting": 80.0, "sentiment": 0.6})
    weak = total_preference_engine.infer({"voting": 45.0, "sentiment": -0.2})
    assert strong > weak
    ranked = rank([("weak", 45.0, -0.2, weak), ("strong", 80.0, 0.6, strong)])
    assert ranked[0].alternative_id == "strong"


# ---------------------------------------------------------------------------
# rank
# ---------------------------------------------------------------------------


def test_rank_tie_breaks_by_voting_then_id():
    ranked = rank(
        [
            ("alt1", 57.81, 0.0, 5.0),
            ("alt2", 65.62, 0.0, 7.5),
            ("alt3", 53.12, 0.0, 5.0),
        ]
    )
    assert [r.alternative_id for r in ranked] == ["alt2", "alt1", "alt3"]
    assert [r.rank for r in ranked] == [1, 2, 3]


def test_rank_single_alternative():
    ranked = rank([("only", 50.0, 0.0, 5.0)])
    assert ranked[0].rank == 1


def test_rank_published_top3(total_preference_engine):
    scored = [
        (alt, voting, sentiment,
         total_preference_engine.infer({"voting": voting, "sentiment": sentiment}))
        for alt, (voting, sentiment) in PUBLISHED_INPUTS.items()
    ]
    ranked = rank(scored)
    assert ranked[0].alternative_id == "hotel3"
    assert {r.alternative_id for r in ranked[:3]} == {"hotel3", "hotel4", "hotel5"}


def test_rank_rejects_empty():
    with pytest.raises(ValidationError):
        rank([])


def test_report_serialization(hotel_report):
    doc = hotel_report.to_dict()
    assert doc["winner"] == "hotel3"
    assert len(doc["results"]) == 7
    assert doc["engine_fingerprint"] == hotel_report.engine_fingerprint
    assert doc["results"][0]["rank"] == 1
