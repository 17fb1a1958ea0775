"""Hypothesis strategies and seeded generators shared by the test modules."""
import math
import random
from itertools import combinations

from hypothesis import strategies as st

from line_search import hypergraph_from_code
from lines_core import Hypergraph3, has_universal_line


@st.composite
def hypergraphs(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << math.comb(n, 3)) - 1))
    return hypergraph_from_code(n, code)


def no_universal(strategy):
    return strategy.filter(lambda h: not has_universal_line(h))


def random_hypergraph(rng: random.Random, n: int, p: float = None) -> Hypergraph3:
    p = rng.random() if p is None else p
    return Hypergraph3(n, frozenset(t for t in combinations(range(n), 3) if rng.random() < p))


def random_no_universal(rng: random.Random, n: int) -> Hypergraph3:
    while True:
        h = random_hypergraph(rng, n)
        if not has_universal_line(h):
            return h
