#!/usr/bin/env python3
"""
Metric spaces, their betweenness hypergraphs, and generators for the graph
and metric families the survey results talk about.

Distances are exact Fractions; betweenness is exact equality.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from lines_core import (
    Hypergraph3,
    InvalidArgumentError,
    InvalidSizeError,
    InvalidVertexError,
    Line,
    LinesError,
    all_lines,
    has_universal_line,
    mask_of,
)

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


class InvalidMetricError(LinesError):
    """`cell` is the (row, column) of the offending entry when there is one."""

    kind = "invalid-metric"

    def __init__(self, message: str, kind: Optional[str] = None, cell: Optional[Tuple[int, int]] = None):
        super().__init__(message, kind)
        self.cell = cell


class NotConnectedError(LinesError):
    kind = "not-connected"

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is not connected: no path between {u} and {v}")
        self.pair = (u, v)


@dataclass(frozen=True)
class MetricSpace:
    n: int
    dist: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n != len(self.dist):
            raise InvalidMetricError(f"n = {self.n} but the matrix has {len(self.dist)} rows", kind="not-square")
        validate_metric(self.dist)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Union[int, Fraction, str]]]) -> "MetricSpace":
        dist = tuple(tuple(Fraction(x) for x in row) for row in rows)
        return cls(len(dist), dist)

    def d(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]


def validate_metric(dist: Sequence[Sequence[Fraction]]) -> None:
    """Raise InvalidMetricError naming the first violated axiom."""
    n = len(dist)
    for i, row in enumerate(dist):
        if len(row) != n:
            raise InvalidMetricError(f"row {i} has {len(row)} entries, expected {n}", kind="not-square", cell=(i, 0))
    for i in range(n):
        if dist[i][i] != 0:
            raise InvalidMetricError(f"dist({i},{i}) = {dist[i][i]} is not 0", kind="diagonal", cell=(i, i))
        for j in range(i + 1, n):
            if dist[i][j] != dist[j][i]:
                raise InvalidMetricError(
                    f"dist({i},{j}) = {dist[i][j]} but dist({j},{i}) = {dist[j][i]}", kind="asymmetric", cell=(j, i))
            if dist[i][j] <= 0:
                raise InvalidMetricError(f"dist({i},{j}) = {dist[i][j]} is not positive", kind="zero-distance", cell=(i, j))
    for i, j, k in product(range(n), repeat=3):
        if dist[i][k] > dist[i][j] + dist[j][k]:
            raise InvalidMetricError(
                f"dist({i},{k}) = {dist[i][k]} exceeds dist({i},{j}) + dist({j},{k}) = "
                f"{dist[i][j] + dist[j][k]}", kind="triangle", cell=(i, k))


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidSizeError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u >= v:
                raise InvalidArgumentError(f"edge ({u}, {v}) must be stored as u < v without loops")
            if v >= self.n or u < 0:
                raise InvalidVertexError(f"edge ({u}, {v}) outside [0, {self.n})")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        normalized = set()
        for u, v in edges:
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(n, frozenset(normalized))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)


def _between(ms: MetricSpace, a: int, b: int, c: int) -> bool:
    """b lies between a and c."""
    return ms.dist[a][b] + ms.dist[b][c] == ms.dist[a][c]


def betweenness_hypergraph(ms: MetricSpace) -> Hypergraph3:
    hedges = set()
    for a, b, c in combinations(range(ms.n), 3):
        if _between(ms, a, b, c) or _between(ms, b, a, c) or _between(ms, a, c, b):
            hedges.add((a, b, c))
    return Hypergraph3(ms.n, frozenset(hedges))


def metric_line(ms: MetricSpace, u: int, v: int) -> Line:
    """Three-clause line definition, evaluated on distances directly."""
    if u == v or not (0 <= u < ms.n and 0 <= v < ms.n):
        raise InvalidArgumentError(f"pair ({u}, {v}) is not a pair of distinct points", kind="invalid-pair")
    d = ms.dist
    members = {u, v}
    for p in range(ms.n):
        if (d[p][u] + d[u][v] == d[p][v]
                or d[u][p] + d[p][v] == d[u][v]
                or d[u][v] + d[v][p] == d[u][p]):
            members.add(p)
    return Line(mask_of(members))


def graph_metric(g: Graph) -> MetricSpace:
    """Shortest-path distances by breadth-first layering."""
    lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
    rows = []
    for u in range(g.n):
        row = []
        for v in range(g.n):
            if v not in lengths[u]:
                raise NotConnectedError(u, v)
            row.append(Fraction(lengths[u][v]))
        rows.append(tuple(row))
    return MetricSpace(g.n, tuple(rows))


def in_general_position(points: Sequence[Point]) -> bool:
    """No two points share their x- or y-coordinate."""
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    return len(set(xs)) == len(xs) and len(set(ys)) == len(ys)


def l1_metric(points: Sequence[Point]) -> Tuple[MetricSpace, bool]:
    """L1 metric on integer points plus the general-position flag."""
    points = [tuple(p) for p in points]
    seen = {}
    for i, p in enumerate(points):
        if p in seen:
            raise InvalidMetricError(f"points {seen[p]} and {i} coincide at {p}", kind="zero-distance")
        seen[p] = i
    rows = tuple(
        tuple(Fraction(abs(x1 - x2) + abs(y1 - y2)) for x2, y2 in points)
        for x1, y1 in points
    )
    return MetricSpace(len(points), rows), in_general_position(points)


def check_at_least_n_or_universal(h: Hypergraph3) -> bool:
    return has_universal_line(h) or all_lines(h).m >= h.n


def check_bipartite_universal(g: Graph) -> bool:
    """A connected bipartite graph's metric has a universal line."""
    if not nx.is_bipartite(g.to_networkx()):
        raise InvalidArgumentError("graph is not bipartite", kind="not-bipartite")
    return has_universal_line(betweenness_hypergraph(graph_metric(g)))


class Family(str, Enum):
    BIPARTITE = "bipartite"
    CHORDAL = "chordal"
    ONE_TWO_METRIC = "one_two_metric"
    RANDOM_GRAPH = "random_graph"
    RANDOM_HYPERGRAPH = "random_hypergraph"
    L1_GENERAL_POSITION = "l1_general_position"


def _random_tree_edges(rng: random.Random, order: List[int], side=None) -> set:
    """Attach each vertex to a random earlier one (of the other side when sides are given)."""
    edges = set()
    for i, v in enumerate(order[1:], start=1):
        earlier = order[:i]
        if side is not None:
            earlier = [u for u in earlier if side[u] != side[v]]
        u = rng.choice(earlier)
        edges.add((min(u, v), max(u, v)))
    return edges


def _gen_bipartite(rng: random.Random, n: int) -> Graph:
    side = [0, 1] + [rng.randrange(2) for _ in range(n - 2)]
    order = [0, 1] + rng.sample(range(2, n), n - 2)
    edges = _random_tree_edges(rng, order, side)
    for u, v in combinations(range(n), 2):
        if side[u] != side[v] and rng.random() < 0.3:
            edges.add((u, v))
    return Graph(n, frozenset(edges))


def _gen_chordal(rng: random.Random, n: int) -> Graph:
    # each new vertex is joined to a clique of the current graph, so it is
    # simplicial when added; the reverse order is a perfect elimination order
    adjacency = {0: set()}
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        clique = [u]
        neighbours = sorted(adjacency[u])
        rng.shuffle(neighbours)
        for w in neighbours:
            if rng.random() < 0.5 and all(w in adjacency[c] for c in clique):
                clique.append(w)
        adjacency[v] = set(clique)
        for c in clique:
            adjacency[c].add(v)
            edges.add((c, v))
    return Graph(n, frozenset(edges))


def _gen_random_graph(rng: random.Random, n: int) -> Graph:
    order = rng.sample(range(n), n)
    edges = _random_tree_edges(rng, order)
    for u, v in combinations(range(n), 2):
        if rng.random() < 0.3:
            edges.add((u, v))
    return Graph(n, frozenset(edges))


def _gen_one_two_metric(rng: random.Random, n: int) -> MetricSpace:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        rows[i][j] = rows[j][i] = Fraction(rng.choice((1, 2)))
    return MetricSpace(n, tuple(tuple(row) for row in rows))


def _gen_random_hypergraph(rng: random.Random, n: int) -> Hypergraph3:
    return Hypergraph3(n, frozenset(t for t in combinations(range(n), 3) if rng.random() < 0.5))


def _gen_l1_points(rng: random.Random, n: int) -> List[Point]:
    span = 3 * n
    xs = rng.sample(range(span), n)
    ys = rng.sample(range(span), n)
    return list(zip(xs, ys))


_GENERATORS = {
    Family.BIPARTITE: _gen_bipartite,
    Family.CHORDAL: _gen_chordal,
    Family.ONE_TWO_METRIC: _gen_one_two_metric,
    Family.RANDOM_GRAPH: _gen_random_graph,
    Family.RANDOM_HYPERGRAPH: _gen_random_hypergraph,
    Family.L1_GENERAL_POSITION: _gen_l1_points,
}


def gen_family(family: Union[Family, str], n: int, seed: int):
    """Deterministic instance of a family for (family, n, seed)."""
    family = Family(family)
    if not isinstance(n, int) or n < 2:
        raise InvalidSizeError(f"family {family.value} needs n >= 2, got {n}")
    rng = random.Random(f"{family.value}:{n}:{seed}")
    return _GENERATORS[family](rng, n)


def enumerate_connected_bipartite(n: int) -> Iterator[Graph]:
    """Every connected bipartite graph on n vertices up to relabeling.

    Sides are laid out as A = {0..a-1}, B = {a..n-1} with a <= n - a; every
    bipartite graph is isomorphic to one of these.
    """
    if n < 2:
        raise InvalidSizeError(f"need n >= 2, got {n}")
    for a in range(1, n // 2 + 1):
        cross = [(u, v) for u in range(a) for v in range(a, n)]
        for code in range(1 << len(cross)):
            edges = frozenset(e for i, e in enumerate(cross) if code >> i & 1)
            if len(edges) < n - 1:
                continue
            g = Graph(n, edges)
            if nx.is_connected(g.to_networkx()):
                yield g


def enumerate_one_two_metrics(n: int) -> Iterator[MetricSpace]:
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i, (a, b) in enumerate(pairs):
            rows[a][b] = rows[b][a] = Fraction(2 if code >> i & 1 else 1)
        yield MetricSpace(n, tuple(tuple(row) for row in rows))


def is_chordal_bruteforce(g: Graph) -> bool:
    """No vertex subset of size >= 4 induces a cycle."""
    nxg = g.to_networkx()
    for size in range(4, g.n + 1):
        for subset in combinations(range(g.n), size):
            induced = nxg.subgraph(subset)
            if all(d == 2 for _, d in induced.degree()) and nx.is_connected(induced):
                logger.debug("induced cycle on %s", subset)
                return False
    return True
