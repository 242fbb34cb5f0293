from fractions import Fraction

import pytest

from conftest import member_battery
from substochastic import Matrix, ParseError, decompose
from substochastic.documents import (
    decomposition_document,
    format_fraction,
    matrix_document,
    parse_decomposition_document,
    parse_fraction,
    parse_matrix_document,
)


@pytest.mark.parametrize(
    "text,value",
    [
        ("0", Fraction(0)),
        ("1", Fraction(1)),
        ("-1", Fraction(-1)),
        ("1/4", Fraction(1, 4)),
        ("-3/4", Fraction(-3, 4)),
        ("17", Fraction(17)),
        ("0/1", Fraction(0)),
        ("3/1", Fraction(3)),
        ("123/457", Fraction(123, 457)),
    ],
)
def test_parse_fraction_accepts_grammar(text, value):
    assert parse_fraction(text) == value


@pytest.mark.parametrize(
    "text",
    ["2/4", "1/0", "1/-2", "-1/-2", "1.5", "", " 1/2", "1 /2", "+1", "a", "03", "1/03", "1//2", None, 5],
)
def test_parse_fraction_rejects_bad_input(text):
    with pytest.raises(ParseError):
        parse_fraction(text)


def test_format_fraction_is_canonical():
    assert format_fraction(Fraction(1, 2)) == "1/2"
    assert format_fraction(Fraction(4, 2)) == "2"
    assert format_fraction(Fraction(0)) == "0"
    assert format_fraction(Fraction(-1, 3)) == "-1/3"


def test_matrix_document_round_trip():
    for matrix, k in member_battery(seeds=range(2)):
        document = matrix_document(matrix, k)
        parsed, parsed_k = parse_matrix_document(document)
        assert parsed == matrix
        assert parsed_k == k


def test_matrix_document_shape():
    document = matrix_document(Matrix([["1/4", "0"]]), 3)
    assert document == {"m": 1, "n": 2, "k": 3, "entries": [["1/4", "0"]]}


@pytest.mark.parametrize(
    "document",
    [
        "not a dict",
        {},
        {"m": 1, "n": 1, "k": 1},
        {"m": 0, "n": 1, "k": 1, "entries": []},
        {"m": 1, "n": 1, "k": True, "entries": [["0"]]},
        {"m": 1, "n": 1, "k": 1, "entries": [["0"], ["0"]]},
        {"m": 2, "n": 1, "k": 1, "entries": [["0"]]},
        {"m": 1, "n": 2, "k": 1, "entries": [["0"]]},
        {"m": 1, "n": 1, "k": 1, "entries": [["2/4"]]},
        {"m": 1, "n": 1, "k": 1, "entries": [[0.5]]},
    ],
)
def test_parse_matrix_document_rejects_bad_structure(document):
    with pytest.raises(ParseError):
        parse_matrix_document(document)


def test_decomposition_document_round_trip():
    for matrix, k in member_battery(max_dim=2, seeds=range(2)):
        result = decompose(matrix, k)
        document = decomposition_document(result, k)
        parsed, parsed_k = parse_decomposition_document(document)
        assert parsed == result
        assert parsed_k == k


def test_decomposition_document_rejects_bad_terms():
    base = matrix_document(Matrix([["0"]]), 2)
    with pytest.raises(ParseError):
        parse_decomposition_document({"base": base, "terms": "oops"})
    with pytest.raises(ParseError):
        parse_decomposition_document({"base": base, "terms": [{"weight": "1"}]})
    with pytest.raises(ParseError):
        parse_decomposition_document(
            {"base": base, "terms": [{"weight": "1", "vertex": [["0", "0"]]}]}
        )
