#!/usr/bin/env python3
"""
Plain-text input documents and their printers.

Every document starts with a header line `<kind> <n>` followed by one record
per line: triples for `hypergraph`, pairs for `graph`, matrix rows for
`metric`, coordinate pairs for `points_l1`. `#` starts a comment, blank lines
are skipped, vertices are 0-indexed. A `certificate` document has a bare
header, key-value lines, `ineq` lines, and ends with the hypergraph it
certifies.

Parse errors carry the 1-based line and column of the offending token.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from lines_core import Hypergraph3, InvalidArgumentError, Line, LinesError, lines_as_lists
from metric_spaces import (
    Graph,
    InvalidMetricError,
    MetricSpace,
    Point,
    betweenness_hypergraph,
    graph_metric,
    l1_metric,
)
from proofkit import BoundCertificate, Branch, Inequality, SpanSearch, Term

KINDS = ("hypergraph", "graph", "metric", "points_l1", "certificate")

_TOKEN = re.compile(r"\S+")
_INTEGER = re.compile(r"^-?\d+$")
_RATIONAL = re.compile(r"^-?\d+(?:/\d+)?$")

METRIC_ERROR_KINDS = {
    "asymmetric": "asymmetric-metric",
    "triangle": "triangle-violation",
    "diagonal": "nonzero-diagonal",
    "zero-distance": "zero-distance",
}

CERTIFICATE_KEYS = ("epsilon", "delta", "mode", "n", "m", "S", "T", "R", "branch", "final_chain_applicable")


class DocumentParseError(LinesError):
    kind = "parse-error"

    def __init__(self, message: str, line: int, column: Optional[int] = None, kind: Optional[str] = None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}", kind)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Record:
    line: int
    tokens: Tuple[Tuple[int, str], ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def text(self, i: int) -> str:
        return self.tokens[i][1]

    def fail(self, message: str, kind: str, i: Optional[int] = None) -> DocumentParseError:
        column = self.tokens[i][0] if i is not None and i < len(self.tokens) else None
        return DocumentParseError(message, self.line, column, kind)


def _records(text: str) -> List[_Record]:
    records = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = tuple((m.start() + 1, m.group()) for m in _TOKEN.finditer(content))
        if tokens:
            records.append(_Record(number, tokens))
    return records


def _int(record: _Record, i: int) -> int:
    token = record.text(i)
    if not _INTEGER.match(token):
        raise record.fail(f"expected an integer, got {token!r}", "non-integer", i)
    return int(token)


def _rational(record: _Record, i: int) -> Fraction:
    token = record.text(i)
    if not _RATIONAL.match(token) or token.endswith("/0"):
        raise record.fail(f"expected an integer or p/q, got {token!r}", "non-rational", i)
    return Fraction(token)


def _vertex(record: _Record, i: int, n: int) -> int:
    v = _int(record, i)
    if not 0 <= v < n:
        raise record.fail(f"vertex {v} outside [0, {n})", "out-of-range-vertex", i)
    return v


def _arity(record: _Record, expected: int, what: str) -> None:
    if len(record) != expected:
        raise record.fail(f"{what} needs {expected} tokens, got {len(record)}", "wrong-arity",
                          min(expected, len(record) - 1))


def _reject_header(record: _Record) -> None:
    if record.text(0) in KINDS:
        raise record.fail(f"second header {record.text(0)!r} in one document", "mixed-document", 0)


@dataclass(frozen=True)
class InputDocument:
    kind: str
    n: int
    payload: Union[Hypergraph3, Graph, MetricSpace, Tuple[Point, ...]]
    certificate: Optional[BoundCertificate] = None

    def hypergraph(self) -> Hypergraph3:
        """The hypergraph whose lines the document describes."""
        if self.kind in ("hypergraph", "certificate"):
            return self.payload
        if self.kind == "graph":
            return betweenness_hypergraph(graph_metric(self.payload))
        if self.kind == "metric":
            return betweenness_hypergraph(self.payload)
        metric, _ = l1_metric(self.payload)
        return betweenness_hypergraph(metric)


def _header(record: _Record) -> Tuple[str, int]:
    kind = record.text(0)
    if kind not in KINDS:
        raise record.fail(f"unknown header {kind!r}; expected one of {', '.join(KINDS)}", "unknown-header", 0)
    if kind == "certificate":
        _arity(record, 1, "certificate header")
        return kind, -1
    _arity(record, 2, f"{kind} header")
    n = _int(record, 1)
    if n < 0:
        raise record.fail(f"vertex count {n} is negative", "invalid-size", 1)
    return kind, n


def _hypergraph(n: int, body: Sequence[_Record]) -> Hypergraph3:
    hedges = set()
    for record in body:
        _reject_header(record)
        _arity(record, 3, "hedge")
        triple = tuple(_vertex(record, i, n) for i in range(3))
        if len(set(triple)) != 3:
            raise record.fail(f"hedge {triple} repeats a vertex", "repeated-vertex", 0)
        hedges.add(tuple(sorted(triple)))
    return Hypergraph3(n, frozenset(hedges))


def _graph(n: int, body: Sequence[_Record]) -> Graph:
    edges = set()
    for record in body:
        _reject_header(record)
        _arity(record, 2, "edge")
        u, v = _vertex(record, 0, n), _vertex(record, 1, n)
        if u == v:
            raise record.fail(f"loop at vertex {u}", "repeated-vertex", 0)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def _metric(n: int, body: Sequence[_Record], header: _Record) -> MetricSpace:
    if len(body) != n:
        where = body[n] if len(body) > n else header
        raise where.fail(f"metric {n} needs {n} rows, got {len(body)}", "row-count")
    rows = []
    for record in body:
        _reject_header(record)
        _arity(record, n, "metric row")
        rows.append(tuple(_rational(record, i) for i in range(n)))
    try:
        return MetricSpace(n, tuple(rows))
    except InvalidMetricError as e:
        row, column = e.cell if e.cell else (0, None)
        raise body[row].fail(str(e), METRIC_ERROR_KINDS.get(e.kind, e.kind), column)


def _points(n: int, body: Sequence[_Record], header: _Record) -> Tuple[Point, ...]:
    if len(body) != n:
        where = body[n] if len(body) > n else header
        raise where.fail(f"points_l1 {n} needs {n} points, got {len(body)}", "row-count")
    points = []
    seen: Dict[Point, int] = {}
    for record in body:
        _reject_header(record)
        _arity(record, 2, "point")
        point = (_int(record, 0), _int(record, 1))
        if point in seen:
            raise record.fail(f"point {point} repeats the point on line {seen[point]}", "zero-distance", 0)
        seen[point] = record.line
        points.append(point)
    return tuple(points)


def parse_input(text: str) -> InputDocument:
    records = _records(text)
    if not records:
        raise DocumentParseError("document is empty", 1, kind="empty-document")
    header, body = records[0], records[1:]
    kind, n = _header(header)
    if kind == "hypergraph":
        return InputDocument(kind, n, _hypergraph(n, body))
    if kind == "graph":
        return InputDocument(kind, n, _graph(n, body))
    if kind == "metric":
        return InputDocument(kind, n, _metric(n, body, header))
    if kind == "points_l1":
        return InputDocument(kind, n, _points(n, body, header))
    cert, h = _certificate(body, header)
    return InputDocument(kind, h.n, h, cert)


# Certificates

def _vertex_tuple(record: _Record) -> Tuple[int, ...]:
    return tuple(_int(record, i) for i in range(1, len(record)))


def _line_token(record: _Record, i: int) -> Line:
    parts = record.text(i).split(",")
    if not all(_INTEGER.match(p) and int(p) >= 0 for p in parts):
        raise record.fail(f"expected a comma-separated vertex list, got {record.text(i)!r}", "non-integer", i)
    return Line.from_members(int(p) for p in parts)


def _single(record: _Record) -> str:
    _arity(record, 2, record.text(0))
    return record.text(1)


def _enum_value(record: _Record, enum_type):
    try:
        return enum_type(_single(record))
    except ValueError:
        raise record.fail(f"bad {record.text(0)} value {record.text(1)!r}", "bad-value", 1)


def _inequality(record: _Record) -> Inequality:
    _arity(record, 5, "ineq")
    try:
        return Inequality(record.text(1), Term.parse(record.text(2)), record.text(3), Term.parse(record.text(4)))
    except (InvalidArgumentError, ValueError, ZeroDivisionError) as e:
        raise record.fail(str(e), "bad-term", 2)


def _certificate(body: Sequence[_Record], header: _Record) -> Tuple[BoundCertificate, Hypergraph3]:
    start = next((i for i, r in enumerate(body) if r.text(0) == "hypergraph"), None)
    if start is None:
        raise header.fail("certificate has no embedded hypergraph", "missing-hypergraph")
    values: Dict[str, object] = {}
    inequalities: List[Inequality] = []
    for record in body[:start]:
        key = record.text(0)
        if key == "ineq":
            inequalities.append(_inequality(record))
            continue
        if key not in CERTIFICATE_KEYS:
            raise record.fail(f"unknown certificate key {key!r}", "unknown-key", 0)
        if key in values:
            raise record.fail(f"key {key!r} given twice", "duplicate-key", 0)
        if key in ("epsilon", "delta"):
            _arity(record, 2, key)
            values[key] = _rational(record, 1)
        elif key in ("n", "m"):
            _arity(record, 2, key)
            values[key] = _int(record, 1)
        elif key in ("S", "R"):
            values[key] = _vertex_tuple(record)
        elif key == "T":
            values[key] = tuple(_line_token(record, i) for i in range(1, len(record)))
        elif key == "mode":
            values[key] = _enum_value(record, SpanSearch)
        elif key == "branch":
            values[key] = _enum_value(record, Branch)
        else:
            flag = _single(record)
            if flag not in ("none", "true", "false"):
                raise record.fail(f"bad final_chain_applicable value {flag!r}", "bad-value", 1)
            values[key] = None if flag == "none" else flag == "true"
    missing = [k for k in CERTIFICATE_KEYS if k not in values]
    if missing:
        raise header.fail(f"certificate is missing {', '.join(missing)}", "missing-key")
    kind, n = _header(body[start])
    h = _hypergraph(n, body[start + 1:])
    return BoundCertificate(inequalities=tuple(inequalities), **values), h


def parse_certificate(text: str) -> Tuple[BoundCertificate, Hypergraph3]:
    document = parse_input(text)
    if document.kind != "certificate":
        raise DocumentParseError(f"expected a certificate, got a {document.kind} document", 1, 1, "unknown-header")
    return document.certificate, document.payload


# Printers

def _frac(value: Fraction) -> str:
    return str(Fraction(value))


def format_hypergraph(h: Hypergraph3) -> str:
    rows = [f"hypergraph {h.n}"] + [f"{a} {b} {c}" for a, b, c in h.sorted_hedges()]
    return "\n".join(rows) + "\n"


def format_graph(g: Graph) -> str:
    rows = [f"graph {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(rows) + "\n"


def format_metric(ms: MetricSpace) -> str:
    rows = [f"metric {ms.n}"] + [" ".join(_frac(x) for x in row) for row in ms.dist]
    return "\n".join(rows) + "\n"


def format_points(points: Sequence[Point]) -> str:
    rows = [f"points_l1 {len(points)}"] + [f"{x} {y}" for x, y in points]
    return "\n".join(rows) + "\n"


def format_certificate(cert: BoundCertificate, h: Hypergraph3) -> str:
    flag = "none" if cert.final_chain_applicable is None else str(cert.final_chain_applicable).lower()
    rows = [
        "certificate",
        f"epsilon {_frac(cert.epsilon)}",
        f"delta {_frac(cert.delta)}",
        f"mode {cert.mode.value}",
        f"n {cert.n}",
        f"m {cert.m}",
        " ".join(["S"] + [str(x) for x in cert.S]),
        " ".join(["T"] + [",".join(map(str, line.members)) for line in cert.T]),
        " ".join(["R"] + [str(x) for x in cert.R]),
        f"branch {cert.branch.value}",
        f"final_chain_applicable {flag}",
    ]
    rows += [f"ineq {q}" for q in cert.inequalities]
    return "\n".join(rows) + "\n" + format_hypergraph(h)


def format_document(document: InputDocument) -> str:
    if document.kind == "hypergraph":
        return format_hypergraph(document.payload)
    if document.kind == "graph":
        return format_graph(document.payload)
    if document.kind == "metric":
        return format_metric(document.payload)
    if document.kind == "points_l1":
        return format_points(document.payload)
    return format_certificate(document.certificate, document.payload)


def document_of(obj) -> InputDocument:
    """Wrap a generated object in the document kind that prints it."""
    if isinstance(obj, Hypergraph3):
        return InputDocument("hypergraph", obj.n, obj)
    if isinstance(obj, Graph):
        return InputDocument("graph", obj.n, obj)
    if isinstance(obj, MetricSpace):
        return InputDocument("metric", obj.n, obj)
    points = tuple(tuple(p) for p in obj)
    return InputDocument("points_l1", len(points), points)


def certificate_to_dict(cert: BoundCertificate) -> Dict:
    return {
        "epsilon": _frac(cert.epsilon),
        "delta": _frac(cert.delta),
        "mode": cert.mode.value,
        "heuristic": cert.heuristic,
        "n": cert.n,
        "m": cert.m,
        "S": list(cert.S),
        "T": lines_as_lists(cert.T),
        "R": list(cert.R),
        "s": cert.s,
        "t": cert.t,
        "branch": cert.branch.value,
        "final_chain_applicable": cert.final_chain_applicable,
        "inequalities": [
            {"name": q.name, "lhs": str(q.lhs), "relation": q.relation, "rhs": str(q.rhs),
             "lhs_approx": float(q.lhs.approx()), "rhs_approx": float(q.rhs.approx()), "holds": q.holds}
            for q in cert.inequalities
        ],
    }
