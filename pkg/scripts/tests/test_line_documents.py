#!/usr/bin/env python3
from fractions import Fraction

import pytest

from line_documents import (
    DocumentParseError,
    InputDocument,
    document_of,
    format_certificate,
    format_document,
    parse_certificate,
    parse_input,
)
from lines_core import Hypergraph3
from metric_spaces import Family, Graph, gen_family
from proofkit import extract_certificate


def test_parse_examples():
    doc = parse_input("hypergraph 4\n0 1 2\n")
    assert doc.payload == Hypergraph3.from_triples(4, [(0, 1, 2)])

    doc = parse_input("graph 3\n0 1\n1 2\n")
    assert doc.kind == "graph"
    assert doc.payload == Graph(3, frozenset({(0, 1), (1, 2)}))
    assert doc.hypergraph().hedges == {(0, 1, 2)}

    doc = parse_input("metric 2\n0 1\n1 0\n")
    assert doc.payload.d(0, 1) == 1


def test_comments_blank_lines_and_rationals():
    text = """
    # a path with half steps
    metric 3   # three points
    0 1/2 1

    1/2 0 1/2
    1 1/2 0
    """
    doc = parse_input(text)
    assert doc.payload.d(0, 1) == Fraction(1, 2)
    assert doc.hypergraph().hedges == {(0, 1, 2)}


def test_points_document():
    doc = parse_input("points_l1 3\n0 0\n1 0\n2 0\n")
    assert doc.payload == ((0, 0), (1, 0), (2, 0))
    assert (0, 1, 2) in doc.hypergraph().hedges


@pytest.mark.parametrize("text, kind, line, column", [
    ("hypergrph 4\n0 1 2\n", "unknown-header", 1, 1),
    ("hypergraph 4\n0 1 x\n", "non-integer", 2, 5),
    ("hypergraph 4\n0 1 4\n", "out-of-range-vertex", 2, 5),
    ("hypergraph 4\n0 1\n", "wrong-arity", 2, 3),
    ("hypergraph 4\n0 1 1\n", "repeated-vertex", 2, 1),
    ("hypergraph 4\n0 1 2\ngraph 4\n", "mixed-document", 3, 1),
    ("graph 3\n0 0\n", "repeated-vertex", 2, 1),
    ("metric 2\n0 1\n2 0\n", "asymmetric-metric", 3, 1),
    ("metric 3\n0 1 5\n1 0 1\n5 1 0\n", "triangle-violation", 2, 5),
    ("metric 2\n0 1.5\n1.5 0\n", "non-rational", 2, 3),
    ("metric 3\n0 1 1\n1 0 1\n", "row-count", 1, None),
    ("points_l1 2\n0 0\n0 0\n", "zero-distance", 3, 1),
    ("graph -2\n", "invalid-size", 1, 7),
    ("# nothing here\n\n", "empty-document", 1, None),
])
def test_parse_errors(text, kind, line, column):
    with pytest.raises(DocumentParseError) as excinfo:
        parse_input(text)
    error = excinfo.value
    assert (error.kind, error.line, error.column) == (kind, line, column)
    assert f"line {line}" in str(error)


@pytest.mark.parametrize("family, n, seed", [
    (Family.BIPARTITE, 6, 1),
    (Family.CHORDAL, 7, 2),
    (Family.ONE_TWO_METRIC, 4, 3),
    (Family.RANDOM_HYPERGRAPH, 6, 4),
    (Family.L1_GENERAL_POSITION, 5, 5),
])
def test_print_then_parse(family, n, seed):
    document = document_of(gen_family(family, n, seed))
    assert parse_input(format_document(document)) == document


def test_certificate_document(empty4):
    cert = extract_certificate(empty4, Fraction(1, 4))
    text = format_certificate(cert, empty4)
    assert text.startswith("certificate\nepsilon 1/4\ndelta 1/25\n")
    assert "branch t_large" in text and "final_chain_applicable none" in text
    assert parse_certificate(text) == (cert, empty4)
    doc = parse_input(text)
    assert doc.kind == "certificate" and doc.hypergraph() == empty4


def test_certificate_document_errors(empty4):
    text = format_certificate(extract_certificate(empty4, Fraction(1, 4)), empty4)
    with pytest.raises(DocumentParseError) as excinfo:
        parse_input(text.replace("mode exhaustive\n", ""))
    assert excinfo.value.kind == "missing-key"
    with pytest.raises(DocumentParseError) as excinfo:
        parse_input(text.replace("m 6\n", "m 6\nm 6\n"))
    assert excinfo.value.kind == "duplicate-key"
    with pytest.raises(DocumentParseError) as excinfo:
        parse_input(text.replace("branch t_large", "branch sideways"))
    assert excinfo.value.kind == "bad-value"
    with pytest.raises(DocumentParseError) as excinfo:
        parse_input(text.split("hypergraph")[0])
    assert excinfo.value.kind == "missing-hypergraph"
    with pytest.raises(DocumentParseError):
        parse_certificate("hypergraph 3\n")


def test_document_of_points():
    doc = document_of([(0, 0), (2, 1)])
    assert doc == InputDocument("points_l1", 2, ((0, 0), (2, 1)))
