#!/usr/bin/env python3
"""
Lines in 3-uniform hypergraphs.

A line of a pair u, v is {u, v} plus every p such that {u, v, p} is a hedge.
Lines are compared as vertex sets, so two pairs can define the same line.
Vertex sets are Python integers used as bitsets (bit i set means vertex i is
a member), which keeps union and equality cheap in the enumeration loops.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


class LinesError(Exception):
    """Base error; `kind` is the stable identifier reported by the CLI."""

    kind = "lines-error"

    def __init__(self, message: str, kind: Optional[str] = None):
        super().__init__(message)
        if kind is not None:
            self.kind = kind


class InvalidPairError(LinesError):
    kind = "invalid-pair"


class InvalidVertexError(LinesError):
    kind = "invalid-vertex"


class InvalidArgumentError(LinesError):
    kind = "invalid-argument"


class InvalidSizeError(LinesError):
    kind = "invalid-size"


class UnsupportedSizeError(LinesError):
    kind = "unsupported-size"


class PreconditionError(LinesError):
    kind = "precondition"


class InvalidFunctionError(LinesError):
    kind = "invalid-f"


class InvariantViolation(LinesError):
    """A proved statement failed on a concrete instance. Always a bug."""

    kind = "invariant-violation"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True, slots=True)
class Line:
    """A line, identified by its member set."""

    mask: int

    @classmethod
    def from_members(cls, members: Iterable[int]) -> "Line":
        return cls(mask_of(members))

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(bits(self.mask))

    def sort_key(self) -> Tuple[int, ...]:
        return self.members

    def __contains__(self, vertex: int) -> bool:
        return vertex >= 0 and bool(self.mask >> vertex & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __repr__(self) -> str:
        return "Line({" + ", ".join(map(str, self.members)) + "})"


def sorted_lines(lines: Iterable[Line]) -> List[Line]:
    """Lines in lexicographic order of their ascending member lists."""
    return sorted(lines, key=Line.sort_key)


@dataclass(frozen=True)
class LineSet:
    lines: Tuple[Line, ...]

    @property
    def m(self) -> int:
        return len(self.lines)

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self) -> Iterator[Line]:
        return iter(self.lines)

    def __contains__(self, line: Line) -> bool:
        return line in self.as_set

    @cached_property
    def as_set(self) -> FrozenSet[Line]:
        return frozenset(self.lines)


@dataclass(frozen=True)
class Hypergraph3:
    """Vertex count plus a set of sorted vertex triples (hedges)."""

    n: int
    hedges: FrozenSet[Triple] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidSizeError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        for hedge in self.hedges:
            if len(hedge) != 3 or len(set(hedge)) != 3:
                raise InvalidArgumentError(f"hedge {hedge} must have 3 distinct vertices")
            if tuple(sorted(hedge)) != tuple(hedge):
                raise InvalidArgumentError(f"hedge {hedge} is not stored sorted")
            for v in hedge:
                if not 0 <= v < self.n:
                    raise InvalidVertexError(f"hedge {hedge} has vertex {v} outside [0, {self.n})")

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[Iterable[int]]) -> "Hypergraph3":
        hedges = set()
        for triple in triples:
            triple = tuple(triple)
            if len(triple) != 3 or len(set(triple)) != 3:
                raise InvalidArgumentError(f"hedge {triple} must have 3 distinct vertices")
            hedges.add(tuple(sorted(triple)))
        return cls(n, frozenset(hedges))

    def sorted_hedges(self) -> List[Triple]:
        return sorted(self.hedges)

    @cached_property
    def engine(self) -> "LineEngine":
        return LineEngine(self)

    def __repr__(self) -> str:
        return f"Hypergraph3(n={self.n}, hedges={self.sorted_hedges()})"


class LineEngine:
    """Bitmask line tables for one hypergraph. Read-only after construction."""

    def __init__(self, h: Hypergraph3):
        n = h.n
        self.n = n
        self.full = (1 << n) - 1
        third = [[0] * n for _ in range(n)]
        for a, b, c in h.hedges:
            third[a][b] |= 1 << c
            third[b][a] |= 1 << c
            third[a][c] |= 1 << b
            third[c][a] |= 1 << b
            third[b][c] |= 1 << a
            third[c][b] |= 1 << a
        self.pair = [
            [third[u][v] | (1 << u) | (1 << v) if u != v else 0 for v in range(n)]
            for u in range(n)
        ]
        self.line_masks: FrozenSet[int] = frozenset(
            self.pair[u][v] for u, v in combinations(range(n), 2)
        )
        logger.debug("engine n=%d hedges=%d m=%d", n, len(h.hedges), len(self.line_masks))

    @property
    def m(self) -> int:
        return len(self.line_masks)

    @property
    def universal(self) -> bool:
        return self.n >= 2 and self.full in self.line_masks

    def alpha_masks(self, x: int) -> FrozenSet[int]:
        return frozenset(mk for mk in self.line_masks if mk >> x & 1)

    def beta_masks(self, x: int) -> FrozenSet[int]:
        row = self.pair[x]
        return frozenset(row[w] for w in range(self.n) if w != x)

    @cached_property
    def betas(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(self.beta_masks(x) for x in range(self.n))

    @cached_property
    def alphas(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(self.alpha_masks(x) for x in range(self.n))

    def span_masks(self, vertices: Iterable[int]) -> FrozenSet[int]:
        out: set = set()
        for x in vertices:
            out |= self.betas[x]
        return frozenset(out)


def _check_vertex(h: Hypergraph3, x: int) -> None:
    if not isinstance(x, int) or not 0 <= x < h.n:
        raise InvalidVertexError(f"vertex {x!r} outside [0, {h.n})")


def line_of_pair(h: Hypergraph3, u: int, v: int) -> Line:
    if not isinstance(u, int) or not isinstance(v, int):
        raise InvalidPairError(f"pair ({u!r}, {v!r}) must be integers")
    if u == v:
        raise InvalidPairError(f"pair ({u}, {v}) repeats a vertex")
    if not (0 <= u < h.n and 0 <= v < h.n):
        raise InvalidPairError(f"pair ({u}, {v}) outside [0, {h.n})")
    return Line(h.engine.pair[u][v])


def all_lines(h: Hypergraph3) -> LineSet:
    """Distinct lines of h, sorted; empty when n < 2."""
    if h.n < 2:
        return LineSet(())
    return LineSet(tuple(sorted_lines(Line(mk) for mk in h.engine.line_masks)))


def has_universal_line(h: Hypergraph3) -> bool:
    return h.engine.universal


def alpha(h: Hypergraph3, x: int) -> FrozenSet[Line]:
    _check_vertex(h, x)
    return frozenset(Line(mk) for mk in h.engine.alphas[x])


def beta(h: Hypergraph3, x: int) -> FrozenSet[Line]:
    _check_vertex(h, x)
    return frozenset(Line(mk) for mk in h.engine.betas[x])


def span(h: Hypergraph3, s: Iterable[int]) -> FrozenSet[Line]:
    s = list(s)
    for x in s:
        _check_vertex(h, x)
    return frozenset(Line(mk) for mk in h.engine.span_masks(s))


@dataclass(frozen=True)
class TraceMap:
    vertex: int
    alpha: FrozenSet[Line]
    beta: FrozenSet[Line]

    def restrict(self, lines: Iterable[Line]) -> Tuple[FrozenSet[Line], FrozenSet[Line]]:
        """(alpha ∩ T, beta ∩ T) for a line set T such as a span."""
        lines = frozenset(lines)
        return self.alpha & lines, self.beta & lines


def trace_map(h: Hypergraph3, x: int) -> TraceMap:
    trace = TraceMap(x, alpha(h, x), beta(h, x))
    if not trace.beta <= trace.alpha:
        raise InvariantViolation(f"beta({x}) is not contained in alpha({x}) for {h!r}")
    return trace


# Reference engine: plain sets of vertices, no bitsets, no cached tables.

def naive_line(h: Hypergraph3, u: int, v: int) -> FrozenSet[int]:
    members = {u, v}
    for p in range(h.n):
        if p != u and p != v and tuple(sorted((u, v, p))) in h.hedges:
            members.add(p)
    return frozenset(members)


def naive_all_lines(h: Hypergraph3) -> FrozenSet[FrozenSet[int]]:
    return frozenset(naive_line(h, u, v) for u in range(h.n) for v in range(u + 1, h.n))


def naive_profile(h: Hypergraph3) -> Tuple[int, bool]:
    """(m, has universal line) computed by the reference engine."""
    lines = naive_all_lines(h)
    return len(lines), h.n >= 2 and frozenset(range(h.n)) in lines


def lines_as_lists(lines: Iterable[Line]) -> List[List[int]]:
    return [list(line.members) for line in sorted_lines(lines)]
