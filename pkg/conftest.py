"""Shared pytest setup: flat modules on sys.path plus common fixtures."""
import os
import random
import sys

import pytest

ROOT = os.path.dirname(os.path.abspath(__file__))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from lines_core import Hypergraph3  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def empty4():
    return Hypergraph3(4, frozenset())


@pytest.fixture
def single_hedge():
    """n = 4 with the one hedge {0, 1, 2}."""
    return Hypergraph3.from_triples(4, [(0, 1, 2)])


@pytest.fixture
def write_doc(tmp_path):
    """Write text to a fresh file and return its path."""
    counter = iter(range(1_000_000))

    def write(text: str) -> str:
        path = tmp_path / f"doc{next(counter)}.txt"
        path.write_text(text)
        return str(path)

    return write
