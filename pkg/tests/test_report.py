"""Tests for the strict JSON report schema."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from posbounds.core import Bracket
from posbounds.report import BoundReport, value_from_json, value_to_json


def test_fraction_encoding():
    assert value_to_json(Fraction(3, 7)) == {"num": 3, "den": 7}
    assert value_to_json(Fraction(4, 2)) == 2  # integral rationals collapse
    assert value_from_json({"num": 3, "den": 7}) == Fraction(3, 7)


def test_bracket_encoding():
    b = Bracket(Fraction(1, 3), Fraction(1, 2))
    enc = value_to_json(b)
    assert enc == {"lo": {"num": 1, "den": 3}, "hi": {"num": 1, "den": 2}}
    assert value_from_json(enc) == b


def test_nested_structures():
    data = {"xs": [Fraction(1, 2), 3], "b": Bracket(Fraction(0), Fraction(1))}
    enc = value_to_json(data)
    dec = value_from_json(enc)
    assert dec["xs"] == [Fraction(1, 2), 3]
    assert dec["b"] == Bracket(Fraction(0), Fraction(1))


def test_unserializable_rejected():
    with pytest.raises(TypeError):
        value_to_json(object())


def test_report_round_trip():
    report = BoundReport(
        theorem="example",
        inputs={"n": 2, "ratio": Fraction(2, 3)},
        threshold=Bracket(Fraction(5), Fraction(21, 4)),
        verdict="satisfied",
        details={"margin": Fraction(1, 7)},
    )
    doc = report.to_json()
    assert doc["schema"] == 1
    text = json.dumps(doc)
    again = BoundReport.from_json(json.loads(text))
    assert again == report


def test_report_rejects_unknown_fields():
    doc = BoundReport(theorem="x").to_json()
    doc["extra"] = 1
    with pytest.raises(ValueError):
        BoundReport.from_json(doc)


def test_report_rejects_wrong_schema():
    doc = BoundReport(theorem="x").to_json()
    doc["schema"] = 2
    with pytest.raises(ValueError):
        BoundReport.from_json(doc)


fractions = st.fractions(min_value=-100, max_value=100, max_denominator=50)


@given(fractions)
def test_fraction_round_trip_property(q):
    assert value_from_json(value_to_json(q)) == q


@given(fractions, fractions)
def test_bracket_round_trip_property(a, b):
    br = Bracket(min(a, b), max(a, b))
    assert value_from_json(value_to_json(br)) == br
