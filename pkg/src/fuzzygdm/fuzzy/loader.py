"""Load inference engines from declarative JSON documents.

Document shape::

    {"variables": [{"name": ..., "domain": [lo, hi],
                    "terms": [{"label": ..., "shape": "tri"|"trap", "points": [...]}]}],
     "rules": [{"if": {"var": "term", ...}, "then": {"var": "term"}}],
     "defuzzifier": "centroid",
     "resolution": 2001}

The variable named by every rule's "then" clause is the output; all other
variables are inputs, in document order.  Two engines ship bundled: the
total-preference engine (voting + sentiment -> total) and the feedback
engine (agreement + confidence -> feedback).
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from ..errors import ValidationError
from .engine import CENTROID, FuzzyRule, InferenceEngine, LinguisticVariable
from .membership import MembershipFunction

_SHAPES = {"tri": MembershipFunction.triangular, "trap": MembershipFunction.trapezoidal}

BUNDLED_ENGINES = ("total_preference", "feedback")


def _variable(doc: dict) -> LinguisticVariable:
    try:
        name = doc["name"]
        lo, hi = doc["domain"]
        terms = []
        for term in doc["terms"]:
            build = _SHAPES.get(term["shape"])
            if build is None:
                raise ValidationError(f"variable {name!r}: unknown shape {term['shape']!r}")
            terms.append((term["label"], build(*term["points"])))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed variable document: {exc}") from exc
    return LinguisticVariable(name=name, domain=(float(lo), float(hi)), terms=tuple(terms))


def _rule(doc: dict) -> FuzzyRule:
    try:
        antecedents = tuple(sorted(doc["if"].items()))
        (cvar, cterm), = doc["then"].items()
    except (KeyError, AttributeError, ValueError) as exc:
        raise ValidationError(f"malformed rule document: {exc}") from exc
    return FuzzyRule(antecedents=antecedents, consequent=(cvar, cterm))


def engine_from_document(doc: dict) -> InferenceEngine:
    variables = [_variable(v) for v in doc.get("variables", [])]
    rules = [_rule(r) for r in doc.get("rules", [])]
    if not rules:
        raise ValidationError("engine document declares no rules")
    output_names = {rule.consequent[0] for rule in rules}
    if len(output_names) != 1:
        raise ValidationError(f"rules target multiple outputs: {sorted(output_names)}")
    output_name = output_names.pop()
    by_name = {v.name: v for v in variables}
    if output_name not in by_name:
        raise ValidationError(f"output variable {output_name!r} not declared")
    inputs = tuple(v for v in variables if v.name != output_name)
    return InferenceEngine(
        inputs=inputs,
        output=by_name[output_name],
        rules=tuple(rules),
        defuzzifier=doc.get("defuzzifier", CENTROID),
        resolution=int(doc.get("resolution", 2001)),
    )


def load_engine(path: str | Path) -> InferenceEngine:
    with open(path, encoding="utf-8") as handle:
        return engine_from_document(json.load(handle))


def load_bundled_engine(name: str, defuzzifier: str | None = None) -> InferenceEngine:
    if name not in BUNDLED_ENGINES:
        raise ValidationError(f"no bundled engine {name!r}; choose from {BUNDLED_ENGINES}")
    doc = json.loads(
        resources.files("fuzzygdm.data.engines").joinpath(f"{name}.json").read_text("utf-8")
    )
    if defuzzifier is not None:
        doc["defuzzifier"] = defuzzifier
    return engine_from_document(doc)
