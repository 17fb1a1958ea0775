#!/usr/bin/env python3
"""
Checkers for the lower bound on the number of lines of a 3-uniform
hypergraph without a universal line, and the certificate extractor that
walks the bound's argument on a concrete instance.

Every decision involving lg is made in integers: c*lg(a) <= x is turned into
a power comparison through common denominators. mpmath is used only for the
decimal approximations shown next to exact values.
"""
from __future__ import annotations

import logging
import math
import random
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, Union

import mpmath

from lines_core import (
    Hypergraph3,
    InvalidArgumentError,
    InvalidFunctionError,
    InvalidSizeError,
    InvariantViolation,
    Line,
    LineEngine,
    PreconditionError,
    UnsupportedSizeError,
    has_universal_line,
    sorted_lines,
)

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction, str]

# Rational upper bound for e used by the certified delta condition.
E_UPPER = Fraction(87, 32)

EXHAUSTIVE_MAX_N = 20


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _frac(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Term:
    """One side of a recorded inequality: a number, 2^e, or c*lg(a)."""

    kind: str
    value: Fraction
    coeff: Fraction = Fraction(1)

    @classmethod
    def num(cls, value: Rational) -> "Term":
        return cls("num", Fraction(value))

    @classmethod
    def pow2(cls, exponent: Rational) -> "Term":
        return cls("pow2", Fraction(exponent))

    @classmethod
    def lg(cls, argument: Rational, coeff: Rational = 1) -> "Term":
        argument = Fraction(argument)
        if argument <= 0:
            raise InvalidArgumentError(f"lg of nonpositive value {argument}")
        return cls("lg", argument, Fraction(coeff))

    def __str__(self) -> str:
        if self.kind == "num":
            return _frac(self.value)
        if self.kind == "pow2":
            return f"2^({_frac(self.value)})"
        if self.coeff == 1:
            return f"lg({_frac(self.value)})"
        return f"{_frac(self.coeff)}*lg({_frac(self.value)})"

    _POW2 = re.compile(r"^2\^\((?P<e>[^()]+)\)$")
    _LG = re.compile(r"^(?:(?P<c>[^*]+)\*)?lg\((?P<a>[^()]+)\)$")

    @classmethod
    def parse(cls, text: str) -> "Term":
        match = cls._POW2.match(text)
        if match:
            return cls.pow2(Fraction(match["e"]))
        match = cls._LG.match(text)
        if match:
            return cls.lg(Fraction(match["a"]), Fraction(match["c"] or 1))
        try:
            return cls.num(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise InvalidArgumentError(f"cannot parse term {text!r}")

    def approx(self) -> mpmath.mpf:
        with mpmath.workdps(30):
            value = mpmath.mpf(self.value.numerator) / self.value.denominator
            if self.kind == "num":
                return value
            if self.kind == "pow2":
                return mpmath.power(2, value)
            coeff = mpmath.mpf(self.coeff.numerator) / self.coeff.denominator
            return coeff * mpmath.log(value, 2)


def _cmp_pow2_num(exponent: Fraction, value: Fraction) -> int:
    """Sign of 2^exponent - value."""
    if value <= 0:
        return 1
    p, q = exponent.numerator, exponent.denominator
    a, b = value.numerator, value.denominator
    lhs, rhs = b ** q, a ** q
    if p >= 0:
        lhs <<= p
    else:
        rhs <<= -p
    return _sign(lhs - rhs)


def _cmp_lg_num(coeff: Fraction, argument: Fraction, x: Fraction) -> int:
    """Sign of coeff*lg(argument) - x."""
    if coeff == 0:
        return _sign(-x)
    against = _cmp_pow2_num(x / coeff, argument)
    return -against if coeff > 0 else against


def _cmp_lg_lg(a: Term, b: Term) -> int:
    scale = math.lcm(a.coeff.denominator, b.coeff.denominator)
    left = a.value ** int(a.coeff * scale)
    right = b.value ** int(b.coeff * scale)
    return _sign(left - right)


def compare_terms(a: Term, b: Term) -> int:
    """Exact sign of a - b."""
    if a.kind == b.kind == "num":
        return _sign(a.value - b.value)
    if a.kind == b.kind == "pow2":
        return _sign(a.value - b.value)
    if a.kind == b.kind == "lg":
        return _cmp_lg_lg(a, b)
    if a.kind == "pow2" and b.kind == "num":
        return _cmp_pow2_num(a.value, b.value)
    if a.kind == "lg" and b.kind == "num":
        return _cmp_lg_num(a.coeff, a.value, b.value)
    if a.kind == "num":
        return -compare_terms(b, a)
    raise InvalidArgumentError(f"cannot compare {a} with {b}")


RELATIONS = {
    "<=": lambda sign: sign <= 0,
    "<": lambda sign: sign < 0,
    ">=": lambda sign: sign >= 0,
    ">": lambda sign: sign > 0,
}


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: Term
    relation: str
    rhs: Term

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise InvalidArgumentError(f"unknown relation {self.relation!r}")

    @property
    def holds(self) -> bool:
        return RELATIONS[self.relation](compare_terms(self.lhs, self.rhs))

    def __str__(self) -> str:
        return f"{self.name} {self.lhs} {self.relation} {self.rhs}"


def _require_no_universal(h: Hypergraph3) -> None:
    if h.n < 2:
        raise InvalidSizeError(f"need n >= 2, got {h.n}")
    if has_universal_line(h):
        raise PreconditionError("hypergraph has a universal line", kind="universal-line")


# Antichain of traces

VertexMap = Union[Mapping[int, FrozenSet[Line]], Sequence[FrozenSet[Line]]]


def _as_masks(h: Hypergraph3, f: VertexMap) -> List[FrozenSet[int]]:
    eng = h.engine
    images = []
    for x in range(h.n):
        image = frozenset(line.mask for line in f[x])
        if not eng.betas[x] <= image <= eng.alphas[x]:
            raise InvalidFunctionError(f"f({x}) is not between beta({x}) and alpha({x})")
        images.append(image)
    return images


def find_antichain_violation(h: Hypergraph3, f: VertexMap) -> Optional[Tuple[int, int]]:
    """First (x, y), x != y, with f(x) a subset of f(y); None when there is none."""
    _require_no_universal(h)
    images = _as_masks(h, f)
    for x in range(h.n):
        for y in range(h.n):
            if x != y and images[x] <= images[y]:
                return x, y
    return None


def check_sandwich_antichain(h: Hypergraph3, f: VertexMap) -> bool:
    violation = find_antichain_violation(h, f)
    if violation:
        logger.error("f(%d) is contained in f(%d) on %r", *violation, h)
    return violation is None


def random_sandwich(h: Hypergraph3, rng: random.Random) -> List[FrozenSet[Line]]:
    """beta(x) plus a random part of alpha(x) - beta(x), for every x."""
    eng = h.engine
    images = []
    for x in range(h.n):
        extra = [mk for mk in sorted(eng.alphas[x] - eng.betas[x]) if rng.random() < 0.5]
        images.append(frozenset(Line(mk) for mk in eng.betas[x].union(extra)))
    return images


def lemma1_witness(h: Hypergraph3, x: int, y: int) -> Line:
    """The line x z with z outside line(x, y); it lies in beta(x) - alpha(y)."""
    _require_no_universal(h)
    if x == y or not (0 <= x < h.n and 0 <= y < h.n):
        raise InvalidArgumentError(f"({x}, {y}) is not a pair of distinct vertices", kind="invalid-pair")
    eng = h.engine
    outside = eng.full & ~eng.pair[x][y]
    z = (outside & -outside).bit_length() - 1
    witness = eng.pair[x][z]
    if witness >> y & 1:
        raise InvariantViolation(f"line({x},{z}) contains {y} on {h!r}")
    return Line(witness)


# Traces through coincident lines

def find_trace_violation(h: Hypergraph3) -> Optional[Tuple[int, int, int]]:
    """First (x, y, z) with line(x,y) = line(x,z) but different traces on beta(x)."""
    eng = h.engine
    for x in range(h.n):
        bx = eng.betas[x]
        row = eng.pair[x]
        for y in range(h.n):
            for z in range(h.n):
                if len({x, y, z}) < 3 or row[y] != row[z]:
                    continue
                if eng.alphas[y] & bx != eng.alphas[z] & bx:
                    return x, y, z
    return None


def check_trace_equality(h: Hypergraph3) -> bool:
    violation = find_trace_violation(h)
    if violation:
        logger.error("trace equality fails at (x, y, z) = %s on %r", violation, h)
    return violation is None


# Span inequality

@dataclass(frozen=True)
class SpanCheck:
    holds: bool
    m: int
    t: int
    lhs: Term
    rhs: Optional[Term]


def _vertex_list(h: Hypergraph3, s) -> List[int]:
    s = list(s)
    if not s:
        raise InvalidArgumentError("vertex set must be nonempty")
    if len(set(s)) != len(s):
        raise InvalidArgumentError(f"vertices {s} are not distinct")
    for x in s:
        if not isinstance(x, int) or not 0 <= x < h.n:
            raise InvalidArgumentError(f"vertex {x!r} outside [0, {h.n})", kind="invalid-vertex")
    return s


def check_span_inequality(h: Hypergraph3, s) -> SpanCheck:
    """m - t >= lg(n - s) - s lg t for the span T of s; vacuous when s = n."""
    s = _vertex_list(h, s)
    _require_no_universal(h)
    eng = h.engine
    t = len(eng.span_masks(s))
    lhs = Term.num(eng.m - t)
    if len(s) == h.n:
        return SpanCheck(True, eng.m, t, lhs, None)
    rhs = Term.lg(Fraction(h.n - len(s), t ** len(s)))
    return SpanCheck(compare_terms(lhs, rhs) >= 0, eng.m, t, lhs, rhs)


def psi_partition(h: Hypergraph3, s: Sequence[int]) -> Dict[Tuple[Line, ...], Tuple[int, ...]]:
    """Vertices outside s grouped by their tuple of lines to x_1, ..., x_s."""
    s = _vertex_list(h, s)
    pair = h.engine.pair
    members = set(s)
    classes: Dict[Tuple[Line, ...], List[int]] = {}
    for v in range(h.n):
        if v not in members:
            key = tuple(Line(pair[x][v]) for x in s)
            classes.setdefault(key, []).append(v)
    return {key: tuple(vs) for key, vs in classes.items()}


# Binomial tails

def binomial_tail(N: int, k: int) -> int:
    """Exact sum of C(N, i) for i = 0..k."""
    if not (isinstance(N, int) and isinstance(k, int)) or N < 0 or k < 0 or k > N:
        raise InvalidArgumentError(f"need 0 <= k <= N, got N={N}, k={k}")
    return sum(math.comb(N, i) for i in range(k + 1))


def bernstein_bound(N: int, k: int) -> Fraction:
    """(N/k)^k (N/(N-k))^(N-k) as an exact rational."""
    return Fraction(N ** N, k ** k * (N - k) ** (N - k))


def check_bernstein(N: int, k: int) -> bool:
    if not (isinstance(N, int) and isinstance(k, int)) or not 1 <= k <= N // 2:
        raise InvalidArgumentError(f"need 1 <= k <= N/2, got N={N}, k={k}", kind="out-of-range")
    tail = binomial_tail(N, k)
    bound = bernstein_bound(N, k)
    logger.debug("N=%d k=%d tail=%d bound~%s", N, k, tail,
                 mpmath.nstr(mpmath.mpf(bound.numerator) / bound.denominator, 8))
    return tail <= bound


def delta_condition_holds(delta: Fraction, epsilon: Fraction) -> bool:
    """Certified delta*(1 - ln delta) <= epsilon*ln 2.

    Checked as delta*lg(E/delta) <= epsilon with E a rational above e, which
    implies the condition for e itself.
    """
    delta, epsilon = Fraction(delta), Fraction(epsilon)
    if not 0 < delta <= Fraction(1, 2):
        return False
    return compare_terms(Term.lg(E_UPPER / delta, delta), Term.num(epsilon)) <= 0


def delta_margin(delta: Fraction, epsilon: Fraction) -> mpmath.mpf:
    """epsilon*ln 2 - delta*(1 - ln delta), for display."""
    with mpmath.workdps(30):
        d = mpmath.mpf(delta.numerator) / delta.denominator
        e = mpmath.mpf(epsilon.numerator) / epsilon.denominator
        return e * mpmath.log(2) - d * (1 - mpmath.log(d))


def delta_for_epsilon(epsilon: Rational) -> Fraction:
    """A delta = 1/k in (0, 1/2] meeting the tail condition for epsilon.

    The left side of the condition grows with delta, so the smallest
    admissible k is found by doubling and then bisection.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise InvalidArgumentError(f"epsilon must be positive, got {epsilon}", kind="invalid-epsilon")
    if delta_condition_holds(Fraction(1, 2), epsilon):
        return Fraction(1, 2)
    lo, hi = 2, 4
    while not delta_condition_holds(Fraction(1, hi), epsilon):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if delta_condition_holds(Fraction(1, mid), epsilon):
            hi = mid
        else:
            lo = mid
    return Fraction(1, hi)


def tail_condition_holds(delta: Fraction, epsilon: Fraction, N: int) -> bool:
    """sum_{i < delta N} C(N, i) <= 2^(epsilon N), exactly."""
    k = math.ceil(Fraction(delta) * N) - 1
    tail = binomial_tail(N, k)
    return compare_terms(Term.num(tail), Term.pow2(Fraction(epsilon) * N)) <= 0


def check_lg_bound(h: Hypergraph3) -> bool:
    """m >= lg n, as 2^m >= n."""
    _require_no_universal(h)
    return (1 << h.engine.m) >= h.n


# Certificates

class Branch(str, Enum):
    T_LARGE = "t_large"
    MT_LARGE = "mt_large"
    FINAL_CHAIN = "final_chain"


class SpanSearch(str, Enum):
    EXHAUSTIVE = "exhaustive"
    GREEDY = "greedy"


@dataclass(frozen=True)
class BoundCertificate:
    epsilon: Fraction
    delta: Fraction
    mode: SpanSearch
    n: int
    m: int
    S: Tuple[int, ...]
    T: Tuple[Line, ...]
    R: Tuple[int, ...]
    branch: Branch
    final_chain_applicable: Optional[bool]
    inequalities: Tuple[Inequality, ...] = field(default_factory=tuple)

    @property
    def s(self) -> int:
        return len(self.S)

    @property
    def t(self) -> int:
        return len(self.T)

    @property
    def heuristic(self) -> bool:
        return self.mode is SpanSearch.GREEDY

    @property
    def inequality_values(self) -> List[Tuple[str, Term, Term]]:
        return [(q.name, q.lhs, q.rhs) for q in self.inequalities]

    @property
    def all_hold(self) -> bool:
        return all(q.holds for q in self.inequalities)


def _spans_enough(n: int, delta: Fraction, s: int, t: int) -> bool:
    """t >= (0.5 delta lg n) * s."""
    return s == 0 or compare_terms(Term.lg(n, delta * s / 2), Term.num(t)) <= 0


def _largest_spanning_set(eng: LineEngine, delta: Fraction, mode: SpanSearch) -> Tuple[int, ...]:
    n = eng.n
    if mode is SpanSearch.EXHAUSTIVE:
        if n > EXHAUSTIVE_MAX_N:
            raise UnsupportedSizeError(f"exhaustive span search is limited to n <= {EXHAUSTIVE_MAX_N}")
        for size in range(n, 0, -1):
            # no span exceeds m
            if not _spans_enough(n, delta, size, eng.m):
                continue
            for candidate in combinations(range(n), size):
                if _spans_enough(n, delta, size, len(eng.span_masks(candidate))):
                    return candidate
        return ()
    chosen: List[int] = []
    covered: FrozenSet[int] = frozenset()
    grown = True
    while grown:
        grown = False
        for y in range(n):
            if y in chosen:
                continue
            wider = covered | eng.betas[y]
            if _spans_enough(n, delta, len(chosen) + 1, len(wider)):
                chosen.append(y)
                covered = wider
                grown = True
    return tuple(sorted(chosen))


def _largest_trace_class(eng: LineEngine, span_masks: FrozenSet[int]) -> Tuple[int, ...]:
    classes: Dict[FrozenSet[int], List[int]] = {}
    for y in range(eng.n):
        classes.setdefault(eng.betas[y] & span_masks, []).append(y)
    return tuple(max(classes.values(), key=lambda c: (len(c), -c[0])))


def _proof_steps(h: Hypergraph3, epsilon: Fraction, delta: Fraction, S: Tuple[int, ...]):
    """Walk the argument for this S; returns (branch, applicable, R, inequalities)."""
    eng = h.engine
    n, m = h.n, eng.m
    T = eng.span_masks(S)
    s, t = len(S), len(T)
    num = Term.num
    steps: List[Inequality] = []

    def record(name, lhs, relation, rhs):
        steps.append(Inequality(name, lhs, relation, rhs))

    if s:
        record("span_threshold", Term.lg(n, delta * s / 2), "<=", num(t))
    record("m_ge_t", num(m), ">=", num(t))
    if compare_terms(num(t), Term.lg(n, 2)) >= 0:
        record("t_ge_2lgn", num(t), ">=", Term.lg(n, 2))
        return Branch.T_LARGE, None, (), steps

    record("t_lt_2lgn", num(t), "<", Term.lg(n, 2))
    if s:
        record("s_lt_4_over_delta", num(s), "<", num(4 / delta))
    if t == 0:
        record("m_ge_lgn", num(m), ">=", Term.lg(n))
    elif s < n:
        record("span_lemma", num(m - t), ">=", Term.lg(Fraction(n - s, t ** s)))

    if 2 * t > m:
        record("half_m_gt_m_minus_t", num(Fraction(m, 2)), ">", num(m - t))
        return Branch.MT_LARGE, None, (), steps

    record("t_le_half_m", num(t), "<=", num(Fraction(m, 2)))
    R = _largest_trace_class(eng, T)
    r = len(R)
    record("r_times_2t_ge_n", num(r * 2 ** t), ">=", num(n))
    outside = [eng.betas[y] - T for y in R]
    record("distinct_outside_traces", num(len(set(outside))), ">=", num(r))
    record("outside_trace_lt_threshold", num(max(map(len, outside))), "<", Term.lg(n, delta / 2))

    N = m - t
    applicable = compare_terms(Term.lg(n, Fraction(1, 2)), num(N)) < 0
    if not applicable:
        return Branch.FINAL_CHAIN, False, R, steps

    threshold = Term.lg(n, delta / 2)
    small = sum(math.comb(N, i) for i in range(N + 1) if compare_terms(num(i), threshold) < 0)
    tail = sum(math.comb(N, i) for i in range(N + 1) if i < delta * N)
    record("r_le_small_subsets", num(r), "<=", num(small))
    record("small_subsets_le_delta_tail", num(small), "<=", num(tail))
    record("delta_tail_le_2_eps_mt", num(tail), "<=", Term.pow2(epsilon * N))
    record("2_eps_mt_le_2_eps_m", Term.pow2(epsilon * N), "<=", Term.pow2(epsilon * m))
    record("n_le_2t_r", num(n), "<=", num(2 ** t * r))
    record("2t_r_le_2_t_plus_eps_m", num(2 ** t * r), "<=", Term.pow2(t + epsilon * m))
    record("t_plus_eps_m_le_half_plus_eps_m", Term.pow2(t + epsilon * m), "<=",
           Term.pow2((Fraction(1, 2) + epsilon) * m))
    record("half_plus_eps_m_le_final", Term.pow2((Fraction(1, 2) + epsilon) * m), "<=",
           Term.pow2(m / (2 - 4 * epsilon)))
    record("m_ge_2_minus_4eps_lgn", num(m), ">=", Term.lg(n, 2 - 4 * epsilon))
    return Branch.FINAL_CHAIN, True, R, steps


def _check_epsilon(epsilon: Rational) -> Fraction:
    try:
        epsilon = Fraction(epsilon)
    except (ValueError, ZeroDivisionError, TypeError):
        raise InvalidArgumentError(f"epsilon {epsilon!r} is not a rational number", kind="invalid-epsilon")
    if not 0 < epsilon < Fraction(1, 2):
        raise InvalidArgumentError(f"epsilon must lie in (0, 1/2), got {epsilon}", kind="invalid-epsilon")
    return epsilon


def extract_certificate(h: Hypergraph3, epsilon: Rational,
                        mode: Union[SpanSearch, str] = SpanSearch.EXHAUSTIVE) -> BoundCertificate:
    epsilon = _check_epsilon(epsilon)
    mode = SpanSearch(mode)
    if h.n < 3:
        raise InvalidSizeError(f"certificates need n >= 3, got {h.n}")
    _require_no_universal(h)
    delta = delta_for_epsilon(epsilon)
    eng = h.engine
    S = _largest_spanning_set(eng, delta, mode)
    branch, applicable, R, steps = _proof_steps(h, epsilon, delta, S)
    cert = BoundCertificate(
        epsilon=epsilon, delta=delta, mode=mode, n=h.n, m=eng.m, S=S,
        T=tuple(sorted_lines(Line(mk) for mk in eng.span_masks(S))),
        R=R, branch=branch, final_chain_applicable=applicable, inequalities=tuple(steps),
    )
    for q in cert.inequalities:
        if not q.holds:
            logger.error("certificate step fails: %s", q)
    logger.info("certificate n=%d m=%d s=%d t=%d branch=%s", cert.n, cert.m, cert.s, cert.t, branch.value)
    return cert


def validate_certificate(h: Hypergraph3, cert: BoundCertificate) -> List[str]:
    """Independent re-check of a certificate against h; empty list means valid."""
    problems: List[str] = []
    eng = h.engine
    if (cert.n, cert.m) != (h.n, eng.m):
        problems.append(f"n, m recorded as {cert.n}, {cert.m}; actual {h.n}, {eng.m}")
        return problems
    if not delta_condition_holds(cert.delta, cert.epsilon):
        problems.append(f"delta {cert.delta} does not meet the tail condition for epsilon {cert.epsilon}")
    if list(cert.S) != sorted(set(cert.S)) or any(not 0 <= x < h.n for x in cert.S):
        problems.append(f"S = {cert.S} is not a sorted vertex set")
        return problems
    span_masks = eng.span_masks(cert.S)
    if {line.mask for line in cert.T} != span_masks or len(cert.T) != len(span_masks):
        problems.append("T is not the span of S")
    if not _spans_enough(h.n, cert.delta, cert.s, len(span_masks)):
        problems.append("span of S is below the threshold")
    for y in range(h.n):
        if y not in cert.S and _spans_enough(h.n, cert.delta, cert.s + 1, len(span_masks | eng.betas[y])):
            problems.append(f"S can be extended by vertex {y}")
    if cert.R:
        traces = {eng.betas[y] & span_masks for y in cert.R}
        if len(traces) != 1:
            problems.append("vertices of R do not share their trace on T")
        if len(cert.R) != len(_largest_trace_class(eng, span_masks)):
            problems.append("R is not a largest trace class")
        if (1 << cert.t) * len(cert.R) < h.n:
            problems.append("|R| < n / 2^t")
    for q in cert.inequalities:
        if not q.holds:
            problems.append(f"inequality fails: {q}")
    branch, applicable, R, steps = _proof_steps(h, cert.epsilon, cert.delta, cert.S)
    if branch is not cert.branch or applicable != cert.final_chain_applicable:
        problems.append(f"branch recorded as {cert.branch.value}, recomputed {branch.value}")
    if tuple(R) != tuple(cert.R):
        problems.append(f"R recorded as {cert.R}, recomputed {R}")
    if [str(q) for q in steps] != [str(q) for q in cert.inequalities]:
        problems.append("recorded inequalities differ from the recomputed chain")
    return problems


# Suites used by the `check` command

@dataclass(frozen=True)
class SuiteOutcome:
    name: str
    passed: bool
    detail: str = ""


def suite_antichain(h: Hypergraph3, rng: random.Random, trials: int) -> SuiteOutcome:
    eng = h.engine
    candidates = [("alpha", [frozenset(Line(mk) for mk in a) for a in eng.alphas]),
                  ("beta", [frozenset(Line(mk) for mk in b) for b in eng.betas])]
    candidates += [(f"sandwich#{i}", random_sandwich(h, rng)) for i in range(trials)]
    for label, f in candidates:
        violation = find_antichain_violation(h, f)
        if violation:
            x, y = violation
            return SuiteOutcome("antichain", False, f"{label}: f({x}) is contained in f({y})")
    return SuiteOutcome("antichain", True, f"{len(candidates)} maps")


def suite_trace(h: Hypergraph3) -> SuiteOutcome:
    violation = find_trace_violation(h)
    if violation:
        return SuiteOutcome("trace", False, "x, y, z = %d, %d, %d" % violation)
    return SuiteOutcome("trace", True)


def suite_span(h: Hypergraph3, rng: random.Random, samples: int, exhaustive_up_to: int = 12) -> SuiteOutcome:
    _require_no_universal(h)
    if h.n <= exhaustive_up_to:
        subsets = [c for size in range(1, h.n + 1) for c in combinations(range(h.n), size)]
    else:
        subsets = []
        for _ in range(samples):
            size = rng.randint(1, h.n)
            subsets.append(tuple(sorted(rng.sample(range(h.n), size))))
    for subset in subsets:
        result = check_span_inequality(h, subset)
        if not result.holds:
            return SuiteOutcome("span", False, f"S = {list(subset)}: {result.lhs} < {result.rhs}")
    return SuiteOutcome("span", True, f"{len(subsets)} sets")


def suite_lg_bound(h: Hypergraph3) -> SuiteOutcome:
    if check_lg_bound(h):
        return SuiteOutcome("lg_bound", True, f"2^{h.engine.m} >= {h.n}")
    return SuiteOutcome("lg_bound", False, f"2^{h.engine.m} < {h.n}")


def suite_bernstein(max_n: int) -> SuiteOutcome:
    count = 0
    for N in range(2, max_n + 1):
        for k in range(1, N // 2 + 1):
            count += 1
            if not check_bernstein(N, k):
                return SuiteOutcome("bernstein", False, f"N={N}, k={k}")
    return SuiteOutcome("bernstein", True, f"{count} pairs")


def suite_certificate(h: Hypergraph3, cert: BoundCertificate) -> SuiteOutcome:
    problems = validate_certificate(h, cert)
    if problems:
        return SuiteOutcome("certificate", False, problems[0])
    return SuiteOutcome("certificate", True, f"branch {cert.branch.value}")
