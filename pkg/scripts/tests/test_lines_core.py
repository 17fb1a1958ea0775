#!/usr/bin/env python3
import random

import pytest
from hypothesis import given, settings

from lines_core import (
    Hypergraph3,
    InvalidArgumentError,
    InvalidPairError,
    InvalidSizeError,
    InvalidVertexError,
    Line,
    all_lines,
    alpha,
    beta,
    has_universal_line,
    line_of_pair,
    lines_as_lists,
    naive_all_lines,
    naive_line,
    span,
    trace_map,
)
from strategies import hypergraphs, random_hypergraph


def L(*members):
    return Line.from_members(members)


def test_line_of_pair(empty4, single_hedge):
    assert line_of_pair(empty4, 0, 1) == L(0, 1)
    assert line_of_pair(single_hedge, 0, 1) == L(0, 1, 2)
    assert line_of_pair(single_hedge, 0, 3) == L(0, 3)


@pytest.mark.parametrize("u, v", [(0, 0), (0, 4), (-1, 2)])
def test_line_of_pair_rejects_bad_pairs(single_hedge, u, v):
    with pytest.raises(InvalidPairError):
        line_of_pair(single_hedge, u, v)


def test_all_lines_examples(single_hedge):
    assert lines_as_lists(all_lines(Hypergraph3(3, frozenset()))) == [[0, 1], [0, 2], [1, 2]]
    lines = all_lines(single_hedge)
    assert lines.m == 4
    assert lines_as_lists(lines) == [[0, 1, 2], [0, 3], [1, 3], [2, 3]]

    two = Hypergraph3.from_triples(4, [(0, 1, 2), (0, 1, 3)])
    assert L(0, 1, 2, 3) in all_lines(two)
    assert all_lines(two).m == len(naive_all_lines(two))


def test_small_n():
    assert all_lines(Hypergraph3(0)).m == 0
    assert all_lines(Hypergraph3(1)).m == 0
    assert not has_universal_line(Hypergraph3(1))
    # n = 2 always has the universal line {0, 1}
    assert has_universal_line(Hypergraph3(2))


def test_has_universal_line():
    assert has_universal_line(Hypergraph3.from_triples(3, [(0, 1, 2)]))
    assert not has_universal_line(Hypergraph3(3, frozenset()))
    assert has_universal_line(Hypergraph3.from_triples(4, [(0, 1, 2), (0, 1, 3)]))


def test_alpha_beta(single_hedge):
    empty3 = Hypergraph3(3, frozenset())
    assert alpha(empty3, 0) == {L(0, 1), L(0, 2)}
    assert beta(empty3, 0) == {L(0, 1), L(0, 2)}
    assert alpha(single_hedge, 3) == {L(0, 3), L(1, 3), L(2, 3)}
    assert alpha(single_hedge, 0) == {L(0, 1, 2), L(0, 3)}
    assert beta(single_hedge, 0) == {L(0, 1, 2), L(0, 3)}
    with pytest.raises(InvalidVertexError):
        alpha(single_hedge, 4)


def test_beta_can_be_proper_subset():
    # line(0,1) is universal, so it contains 2 without being a line 2w
    h = Hypergraph3.from_triples(4, [(0, 1, 2), (0, 1, 3)])
    assert beta(h, 2) == {L(0, 1, 2), L(2, 3)}
    assert alpha(h, 2) == {L(0, 1, 2), L(2, 3), L(0, 1, 2, 3)}


def test_span(empty4):
    empty3 = Hypergraph3(3, frozenset())
    assert span(empty3, []) == frozenset()
    assert span(empty3, [0]) == {L(0, 1), L(0, 2)}
    assert len(span(empty4, [0, 1])) == 5
    with pytest.raises(InvalidVertexError):
        span(empty4, [7])


def test_trace_map_restrict(single_hedge):
    trace = trace_map(single_hedge, 3)
    assert trace.beta <= trace.alpha
    a, b = trace.restrict([L(0, 3), L(0, 1, 2)])
    assert a == b == {L(0, 3)}


def test_hypergraph_validation():
    with pytest.raises(InvalidArgumentError):
        Hypergraph3.from_triples(4, [(0, 0, 1)])
    with pytest.raises(InvalidVertexError):
        Hypergraph3.from_triples(3, [(0, 1, 3)])
    with pytest.raises(InvalidArgumentError):
        Hypergraph3(4, frozenset({(2, 1, 0)}))
    with pytest.raises(InvalidSizeError):
        Hypergraph3(-1)


def test_line_container_protocol():
    line = L(4, 1, 7)
    assert line.members == (1, 4, 7)
    assert 4 in line and 5 not in line and -1 not in line
    assert len(line) == 3
    assert list(line) == [1, 4, 7]


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=9))
def test_line_properties(h):
    for u in range(h.n):
        for v in range(u + 1, h.n):
            line = line_of_pair(h, u, v)
            assert line == line_of_pair(h, v, u)
            assert u in line and v in line
    for x in range(h.n):
        assert beta(h, x) <= alpha(h, x)


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=10))
def test_naive_engine_agrees(h):
    optimized = {frozenset(line.members) for line in all_lines(h)}
    assert optimized == naive_all_lines(h)
    if h.n >= 2:
        assert frozenset(line_of_pair(h, 0, 1).members) == naive_line(h, 0, 1)


@pytest.mark.slow
def test_naive_engine_agrees_on_random_instances():
    rng = random.Random(7)
    for _ in range(10_000):
        h = random_hypergraph(rng, rng.randint(2, 16))
        assert {frozenset(line.members) for line in all_lines(h)} == naive_all_lines(h)
