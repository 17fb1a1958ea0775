#!/usr/bin/env python3
"""
Exhaustive and sampled search over 3-uniform hypergraphs for small line
counts.

A hypergraph on n vertices is encoded as an integer whose bit i says whether
the i-th triple in colex order is a hedge, so the exhaustive population is
range(2 ** C(n, 3)) and a shard is a contiguous slice of that range. Every
examined instance without a universal line is checked against 2^m >= n;
a failure raises InvariantViolation.
"""
from __future__ import annotations

import json
import logging
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from lines_core import (
    Hypergraph3,
    InvalidArgumentError,
    InvariantViolation,
    LinesError,
    UnsupportedSizeError,
    bits,
    naive_profile,
)

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]

EXHAUSTIVE_MAX_N = 7
CANONICAL_EXACT_MAX_N = 8
CANONICAL_MAX_N = 10
MAX_SAMPLE_ATTEMPTS = 1000


class Mode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class Constraint(str, Enum):
    NO_UNIVERSAL = "no_universal"
    DBE_TWO_OR_THREE = "dbe_two_or_three"
    DBE_TWO = "dbe_two"
    NONE = "none"


class DbeVariant(str, Enum):
    TWO_OR_THREE = "two_or_three"
    TWO = "two"


class Engine(str, Enum):
    OPTIMIZED = "optimized"
    NAIVE = "naive"


# hedge counts a 4-set may not carry
FORBIDDEN_COUNTS = {
    DbeVariant.TWO_OR_THREE: frozenset({2, 3}),
    DbeVariant.TWO: frozenset({2}),
}

CONSTRAINT_VARIANT = {
    Constraint.DBE_TWO_OR_THREE: DbeVariant.TWO_OR_THREE,
    Constraint.DBE_TWO: DbeVariant.TWO,
}


class SamplingExhausted(LinesError):
    kind = "sampling-exhausted"


@lru_cache(maxsize=None)
def colex_triples(n: int) -> Tuple[Triple, ...]:
    return tuple(sorted(combinations(range(n), 3), key=lambda t: (t[2], t[1], t[0])))


@lru_cache(maxsize=None)
def triple_index(n: int) -> Dict[Triple, int]:
    return {t: i for i, t in enumerate(colex_triples(n))}


def total_codes(n: int) -> int:
    return 1 << math.comb(n, 3)


def hypergraph_from_code(n: int, code: int) -> Hypergraph3:
    triples = colex_triples(n)
    return Hypergraph3(n, frozenset(triples[i] for i in bits(code)))


def code_of(h: Hypergraph3) -> int:
    index = triple_index(h.n)
    code = 0
    for hedge in h.hedges:
        code |= 1 << index[hedge]
    return code


def shard_range(total: int, index: int, count: int) -> Tuple[int, int]:
    if count < 1 or not 0 <= index < count:
        raise InvalidArgumentError(f"shard {index}/{count} is not valid", kind="invalid-shard")
    return total * index // count, total * (index + 1) // count


@lru_cache(maxsize=None)
def _pair_tables(n: int):
    pairs = list(combinations(range(n), 2))
    position = {p: i for i, p in enumerate(pairs)}
    contributions = tuple(
        ((position[(a, b)], 1 << c), (position[(a, c)], 1 << b), (position[(b, c)], 1 << a))
        for a, b, c in colex_triples(n)
    )
    base = tuple((1 << u) | (1 << v) for u, v in pairs)
    return base, contributions


def line_profile(n: int, code: int) -> Tuple[int, bool]:
    """(m, has universal line) straight from the hedge code."""
    base, contributions = _pair_tables(n)
    lines = list(base)
    for i in bits(code):
        for pos, bit in contributions[i]:
            lines[pos] |= bit
    distinct = set(lines)
    return len(distinct), ((1 << n) - 1) in distinct


def _profile(n: int, code: int, engine: Engine) -> Tuple[int, bool]:
    if engine is Engine.NAIVE:
        return naive_profile(hypergraph_from_code(n, code))
    return line_profile(n, code)


@lru_cache(maxsize=None)
def _quad_masks(n: int) -> Tuple[int, ...]:
    index = triple_index(n)
    return tuple(
        sum(1 << index[t] for t in combinations(quad, 3))
        for quad in combinations(range(n), 4)
    )


def _dbe_ok(n: int, code: int, variant: DbeVariant) -> bool:
    forbidden = FORBIDDEN_COUNTS[variant]
    return all((code & qm).bit_count() not in forbidden for qm in _quad_masks(n))


def dbe_condition(h: Hypergraph3, variant: Union[DbeVariant, str]) -> bool:
    """No four vertices carry a forbidden number of hedges; vacuous for n < 4."""
    variant = DbeVariant(variant)
    if h.n < 4:
        return True
    return _dbe_ok(h.n, code_of(h), variant)


# Canonical forms

def _vertex_invariants(n: int, hedges: Sequence[Triple]) -> List[Tuple]:
    degree = [0] * n
    for hedge in hedges:
        for v in hedge:
            degree[v] += 1
    seen_with = [[] for _ in range(n)]
    for hedge in hedges:
        for v in hedge:
            seen_with[v].extend(degree[w] for w in hedge if w != v)
    return [(degree[v], tuple(sorted(seen_with[v]))) for v in range(n)]


def _refined_labelings(n: int, hedges: Sequence[Triple]) -> Iterator[Tuple[int, ...]]:
    """Labelings that send cells of equal invariant to consecutive label blocks, in invariant order."""
    invariants = _vertex_invariants(n, hedges)
    cells: Dict[Tuple, List[int]] = {}
    for v in range(n):
        cells.setdefault(invariants[v], []).append(v)
    ordered = [cells[key] for key in sorted(cells)]
    for arrangement in product(*(permutations(cell) for cell in ordered)):
        label = [0] * n
        next_label = 0
        for cell in arrangement:
            for v in cell:
                label[v] = next_label
                next_label += 1
        yield tuple(label)


def canonical_code(n: int, code: int) -> int:
    """Smallest code over the relabelings of the hypergraph with this code."""
    if n > CANONICAL_MAX_N:
        raise UnsupportedSizeError(f"canonical forms are limited to n <= {CANONICAL_MAX_N}")
    triples = colex_triples(n)
    index = triple_index(n)
    hedges = [triples[i] for i in bits(code)]
    if n <= CANONICAL_EXACT_MAX_N:
        labelings = permutations(range(n))
    else:
        labelings = _refined_labelings(n, hedges)
    best = None
    for label in labelings:
        image = 0
        for a, b, c in hedges:
            image |= 1 << index[tuple(sorted((label[a], label[b], label[c])))]
        if best is None or image < best:
            best = image
    return best


def canonical_form(h: Hypergraph3) -> Tuple[int, int]:
    return h.n, canonical_code(h.n, code_of(h))


def relabel(h: Hypergraph3, label: Sequence[int]) -> Hypergraph3:
    return Hypergraph3.from_triples(h.n, ((label[a], label[b], label[c]) for a, b, c in h.hedges))


# Tasks and results

@dataclass(frozen=True)
class SearchTask:
    n: int
    mode: Mode = Mode.EXHAUSTIVE
    constraint: Constraint = Constraint.NO_UNIVERSAL
    seed: int = 0
    shard: Tuple[int, int] = (0, 1)
    engine: Engine = Engine.OPTIMIZED
    iso_reject: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "constraint", Constraint(self.constraint))
        object.__setattr__(self, "engine", Engine(self.engine))
        index, count = self.shard
        if count < 1 or not 0 <= index < count:
            raise InvalidArgumentError(f"shard {index}/{count} is not valid", kind="invalid-shard")
        if self.n < 2:
            raise UnsupportedSizeError(f"search needs n >= 2, got {self.n}")
        if self.mode is Mode.EXHAUSTIVE and self.n > EXHAUSTIVE_MAX_N:
            raise UnsupportedSizeError(f"exhaustive search is limited to n <= {EXHAUSTIVE_MAX_N}, got {self.n}")

    def key(self) -> Dict:
        return {"n": self.n, "mode": self.mode.value, "constraint": self.constraint.value,
                "seed": self.seed, "shard": list(self.shard),
                "engine": self.engine.value, "iso_reject": self.iso_reject}


@dataclass
class SearchResult:
    n: int
    mode: Mode
    constraint: Constraint
    enumerated: int = 0
    examined: int = 0
    min_m: Optional[int] = None
    argmin_index: Optional[int] = None
    argmin_code: Optional[int] = None
    histogram: Dict[int, int] = field(default_factory=dict)

    @property
    def argmin(self) -> Optional[Hypergraph3]:
        if self.argmin_code is None:
            return None
        return hypergraph_from_code(self.n, self.argmin_code)

    def observe(self, index: int, code: int, m: int, universal: bool) -> None:
        if not universal and (1 << m) < self.n:
            raise InvariantViolation(
                f"m = {m} < lg {self.n} without a universal line: {hypergraph_from_code(self.n, code)!r}")
        self.examined += 1
        self.histogram[m] = self.histogram.get(m, 0) + 1
        if self.min_m is None or (m, index) < (self.min_m, self.argmin_index):
            self.min_m, self.argmin_index, self.argmin_code = m, index, code

    def merge(self, other: "SearchResult") -> "SearchResult":
        merged = SearchResult(self.n, self.mode, self.constraint,
                              self.enumerated + other.enumerated, self.examined + other.examined)
        for part in (self, other):
            for m, count in part.histogram.items():
                merged.histogram[m] = merged.histogram.get(m, 0) + count
        candidates = [p for p in (self, other) if p.min_m is not None]
        if candidates:
            best = min(candidates, key=lambda p: (p.min_m, p.argmin_index))
            merged.min_m, merged.argmin_index, merged.argmin_code = best.min_m, best.argmin_index, best.argmin_code
        return merged

    def to_dict(self) -> Dict:
        witness = self.argmin
        return {
            "n": self.n,
            "mode": self.mode.value,
            "constraint": self.constraint.value,
            "enumerated": self.enumerated,
            "examined": self.examined,
            "min_m": self.min_m,
            "argmin_index": self.argmin_index,
            "witness": [list(t) for t in witness.sorted_hedges()] if witness else None,
            "histogram": {str(m): self.histogram[m] for m in sorted(self.histogram)},
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "SearchResult":
        result = cls(data["n"], Mode(data["mode"]), Constraint(data["constraint"]),
                     data["enumerated"], data["examined"], data["min_m"], data["argmin_index"])
        if data.get("witness") is not None:
            result.argmin_code = code_of(Hypergraph3.from_triples(data["n"], data["witness"]))
        result.histogram = {int(m): count for m, count in data["histogram"].items()}
        return result


def _qualifies(constraint: Constraint, n: int, code: int, universal: bool) -> bool:
    if constraint is Constraint.NONE:
        return True
    if universal:
        return False
    variant = CONSTRAINT_VARIANT.get(constraint)
    return variant is None or n < 4 or _dbe_ok(n, code, variant)


def scan_range(n: int, constraint: Constraint, lo: int, hi: int,
               engine: Engine = Engine.OPTIMIZED, iso_reject: bool = False) -> SearchResult:
    """Examine codes lo..hi-1."""
    constraint, engine = Constraint(constraint), Engine(engine)
    variant = CONSTRAINT_VARIANT.get(constraint)
    result = SearchResult(n, Mode.EXHAUSTIVE, constraint)
    for code in range(lo, hi):
        result.enumerated += 1
        if iso_reject and canonical_code(n, code) != code:
            continue
        # cheap filter before computing lines
        if variant is not None and n >= 4 and not _dbe_ok(n, code, variant):
            continue
        m, universal = _profile(n, code, engine)
        if _qualifies(constraint, n, code, universal):
            result.observe(code, code, m, universal)
    return result


def enumerate_hypergraphs(n: int, shard: Tuple[int, int] = (0, 1)) -> Iterator[Hypergraph3]:
    if not 2 <= n <= EXHAUSTIVE_MAX_N:
        raise UnsupportedSizeError(f"enumeration supports 2 <= n <= {EXHAUSTIVE_MAX_N}, got {n}")
    lo, hi = shard_range(total_codes(n), *shard)
    for code in range(lo, hi):
        yield hypergraph_from_code(n, code)


def save_checkpoint(path: str, task: SearchTask, next_index: int, partial: SearchResult) -> None:
    tmp = path + ".tmp"
    with open(tmp, 'w') as f:
        json.dump({"task": task.key(), "next_index": next_index, "partial": partial.to_dict()}, f, indent=2)
    os.replace(tmp, path)


def load_checkpoint(path: str, task: SearchTask) -> Optional[Tuple[int, SearchResult]]:
    if not os.path.exists(path):
        return None
    with open(path, 'r') as f:
        data = json.load(f)
    if data.get("task") != task.key():
        logger.warning("checkpoint %s belongs to another task; starting fresh", path)
        return None
    return data["next_index"], SearchResult.from_dict(data["partial"])


def _split(lo: int, hi: int, parts: int) -> List[Tuple[int, int]]:
    size = hi - lo
    return [(lo + size * i // parts, lo + size * (i + 1) // parts) for i in range(parts)]


def _run_pool(func, n: int, constraint: Constraint, ranges, extra, mode: Mode, workers: int) -> SearchResult:
    result = SearchResult(n, mode, constraint)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(func, n, constraint, lo, hi, *extra) for lo, hi in ranges if hi > lo]
        for future in as_completed(futures):
            result = result.merge(future.result())
    return result


def min_lines(n: int, constraint: Union[Constraint, str] = Constraint.NO_UNIVERSAL, *,
              shard: Tuple[int, int] = (0, 1), engine: Union[Engine, str] = Engine.OPTIMIZED,
              iso_reject: bool = False, workers: int = 1, checkpoint: Optional[str] = None,
              checkpoint_every: int = 4096) -> SearchResult:
    """Minimum line count over the shard's hypergraphs meeting the constraint."""
    engine = Engine(engine)
    task = SearchTask(n, Mode.EXHAUSTIVE, Constraint(constraint), shard=shard,
                      engine=engine, iso_reject=iso_reject)
    lo, hi = shard_range(total_codes(n), *shard)
    if workers > 1 and checkpoint is None:
        return _run_pool(scan_range, n, task.constraint, _split(lo, hi, workers * 4),
                         (engine, iso_reject), Mode.EXHAUSTIVE, workers)
    if workers > 1:
        logger.warning("checkpointing runs in a single worker")

    start, result = lo, SearchResult(n, Mode.EXHAUSTIVE, task.constraint)
    if checkpoint:
        loaded = load_checkpoint(checkpoint, task)
        if loaded:
            start, result = loaded
            logger.info("resuming %s at index %d", checkpoint, start)
    try:
        for chunk_lo in range(start, hi, checkpoint_every):
            chunk_hi = min(hi, chunk_lo + checkpoint_every)
            result = result.merge(scan_range(n, task.constraint, chunk_lo, chunk_hi, engine, iso_reject))
            if checkpoint:
                save_checkpoint(checkpoint, task, chunk_hi, result)
            logger.info("n=%d scanned %d/%d min_m=%s", n, chunk_hi - lo, hi - lo, result.min_m)
    except KeyboardInterrupt:
        logger.warning("interrupted; progress kept in %s", checkpoint or "no checkpoint")
        raise
    return result


def sample_code(n: int, rng: random.Random) -> int:
    """Each triple is a hedge with a per-draw density chosen uniformly."""
    density = rng.random()
    code = 0
    for i in range(math.comb(n, 3)):
        if rng.random() < density:
            code |= 1 << i
    return code


def sample_range(n: int, constraint: Constraint, lo: int, hi: int, seed: int,
                 engine: Engine = Engine.OPTIMIZED) -> SearchResult:
    constraint, engine = Constraint(constraint), Engine(engine)
    result = SearchResult(n, Mode.SAMPLED, constraint)
    for trial in range(lo, hi):
        rng = random.Random(f"{seed}:{trial}")
        for _ in range(MAX_SAMPLE_ATTEMPTS):
            code = sample_code(n, rng)
            result.enumerated += 1
            m, universal = _profile(n, code, engine)
            if _qualifies(constraint, n, code, universal):
                result.observe(trial, code, m, universal)
                break
        else:
            raise SamplingExhausted(f"trial {trial}: no qualifying instance in {MAX_SAMPLE_ATTEMPTS} draws")
    return result


def sampled_search(task: SearchTask, trials: int, *, engine: Union[Engine, str] = Engine.OPTIMIZED,
                   workers: int = 1) -> SearchResult:
    """Random exploration; deterministic in (seed, trials) whatever the worker count."""
    if trials < 1:
        raise InvalidArgumentError(f"trials must be at least 1, got {trials}")
    engine = Engine(engine)
    lo, hi = shard_range(trials, *task.shard)
    if workers > 1:
        return _run_pool(sample_range, task.n, task.constraint, _split(lo, hi, workers * 4),
                         (task.seed, engine), Mode.SAMPLED, workers)
    return sample_range(task.n, task.constraint, lo, hi, task.seed, engine)


def check_dbe_suite(n: int, variant: Union[DbeVariant, str]) -> Tuple[bool, SearchResult]:
    """At least n lines for every hypergraph on n vertices meeting the DBE condition without a universal line."""
    variant = DbeVariant(variant)
    constraint = {v: c for c, v in CONSTRAINT_VARIANT.items()}[variant]
    result = min_lines(n, constraint)
    return result.min_m is None or result.min_m >= n, result
