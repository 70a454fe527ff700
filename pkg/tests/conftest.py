import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_fixture(name: str):
    with open(FIXTURES / name, encoding="utf-8") as handle:
        return json.load(handle)


@pytest.fixture(scope="session")
def alternatives_fixture():
    return load_fixture("alternatives.json")


@pytest.fixture(scope="session")
def stances_fixture():
    return load_fixture("stances.json")


@pytest.fixture(scope="session")
def signals_fixture():
    return load_fixture("signals.json")


@pytest.fixture(scope="session")
def feedback_fixture():
    return load_fixture("feedback.json")


@pytest.fixture(scope="session")
def hotel_profiles(alternatives_fixture):
    from fuzzygdm.voting import AlternativeProfile

    return [
        AlternativeProfile(id=doc["id"], values={k: v for k, v in doc.items() if k != "id"})
        for doc in alternatives_fixture
    ]


@pytest.fixture(scope="session")
def hotel_experts(stances_fixture):
    from fuzzygdm.voting import ExpertPreferenceVector

    return [
        ExpertPreferenceVector(participant_id=doc["participant_id"], stances=doc["stances"])
        for doc in stances_fixture
    ]


@pytest.fixture(scope="session")
def total_preference_engine():
    from fuzzygdm.fuzzy import load_bundled_engine

    return load_bundled_engine("total_preference")


@pytest.fixture(scope="session")
def feedback_engine():
    from fuzzygdm.fuzzy import load_bundled_engine

    return load_bundled_engine("feedback")
