#!/usr/bin/env python3
import json
import random
from itertools import permutations

import pytest
from hypothesis import given, settings

from line_search import (
    Constraint,
    DbeVariant,
    Engine,
    Mode,
    SearchResult,
    SearchTask,
    canonical_code,
    canonical_form,
    check_dbe_suite,
    code_of,
    colex_triples,
    dbe_condition,
    enumerate_hypergraphs,
    hypergraph_from_code,
    line_profile,
    load_checkpoint,
    min_lines,
    relabel,
    sampled_search,
    save_checkpoint,
    scan_range,
    total_codes,
)
from lines_core import (
    Hypergraph3,
    InvalidArgumentError,
    InvariantViolation,
    UnsupportedSizeError,
    all_lines,
    has_universal_line,
    naive_all_lines,
    naive_profile,
)
from strategies import hypergraphs, random_hypergraph


def test_colex_order():
    assert colex_triples(4) == ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
    assert colex_triples(5)[:4] == colex_triples(4)


def test_codes_are_a_bijection():
    seen = {frozenset(h.hedges) for h in enumerate_hypergraphs(4)}
    assert len(seen) == 16
    h = Hypergraph3.from_triples(5, [(0, 2, 4), (1, 2, 3)])
    assert hypergraph_from_code(5, code_of(h)) == h


@pytest.mark.parametrize("n, count", [(3, 2), (4, 16), (5, 1024)])
def test_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_hypergraphs(n)) == count


@pytest.mark.parametrize("n", [1, 8])
def test_enumeration_size_limits(n):
    with pytest.raises(UnsupportedSizeError):
        list(enumerate_hypergraphs(n))


def test_shards_cover_exactly():
    for n in (3, 4, 5):
        for k in (1, 3, 4, 16):
            codes = [code_of(h) for i in range(k) for h in enumerate_hypergraphs(n, (i, k))]
            assert codes == list(range(total_codes(n)))


def test_dbe_condition_examples():
    assert dbe_condition(Hypergraph3(6), DbeVariant.TWO_OR_THREE)
    assert dbe_condition(Hypergraph3(6), DbeVariant.TWO)
    two = Hypergraph3.from_triples(4, [(0, 1, 2), (0, 1, 3)])
    assert not dbe_condition(two, "two_or_three") and not dbe_condition(two, "two")
    three = Hypergraph3.from_triples(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    assert not dbe_condition(three, "two_or_three")
    assert dbe_condition(three, "two")
    assert dbe_condition(Hypergraph3.from_triples(3, [(0, 1, 2)]), "two")


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=9))
def test_line_profile_matches_engines(h):
    m, universal = line_profile(h.n, code_of(h))
    assert (m, universal) == naive_profile(h)
    assert (m, universal) == (all_lines(h).m, has_universal_line(h))


def test_min_lines_small():
    assert min_lines(3).min_m == 3
    result = min_lines(4)
    assert result.min_m == 4
    assert result.enumerated == 16
    assert sum(result.histogram.values()) == result.examined
    assert not has_universal_line(result.argmin)
    assert all_lines(result.argmin).m == result.min_m


def test_min_lines_five_engines_agree():
    optimized = min_lines(5)
    naive = min_lines(5, engine=Engine.NAIVE)
    assert optimized.to_dict() == naive.to_dict()
    assert (1 << optimized.min_m) >= 5
    assert optimized.argmin_index == code_of(optimized.argmin)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_engines_agree_on_every_instance(n):
    for h in enumerate_hypergraphs(n):
        assert {frozenset(line.members) for line in all_lines(h)} == naive_all_lines(h)


def test_min_lines_without_constraint_counts_everything():
    result = min_lines(5, Constraint.NONE)
    assert result.examined == 1024
    # the single hedge on three vertices is its own universal line
    assert min_lines(3, "none").min_m == 1


def test_sharded_search_is_identical():
    whole = min_lines(5).to_dict()
    for k in (4, 16):
        merged = None
        for i in range(k):
            part = min_lines(5, shard=(i, k))
            merged = part if merged is None else merged.merge(part)
        assert merged.to_dict() == whole


def test_parallel_search_is_identical():
    assert min_lines(5, workers=2).to_dict() == min_lines(5).to_dict()


def test_merge_breaks_ties_by_index():
    a = SearchResult(5, Mode.EXHAUSTIVE, Constraint.NO_UNIVERSAL)
    b = SearchResult(5, Mode.EXHAUSTIVE, Constraint.NO_UNIVERSAL)
    a.observe(9, 9, 5, False)
    b.observe(3, 3, 5, False)
    assert a.merge(b).argmin_index == 3 == b.merge(a).argmin_index
    assert a.merge(b).histogram == {5: 2}


def test_observe_enforces_lg_floor():
    result = SearchResult(5, Mode.EXHAUSTIVE, Constraint.NO_UNIVERSAL)
    with pytest.raises(InvariantViolation):
        result.observe(0, 0, 2, False)
    # universal instances are exempt
    result.observe(0, 0, 1, True)


def test_search_task_validation():
    with pytest.raises(UnsupportedSizeError):
        SearchTask(8)
    with pytest.raises(InvalidArgumentError):
        SearchTask(5, shard=(4, 4))
    assert SearchTask(12, Mode.SAMPLED).n == 12


def test_dbe_suites_n5():
    for variant in DbeVariant:
        holds, result = check_dbe_suite(5, variant)
        assert holds
        assert result.min_m is None or result.min_m >= 5


def test_iso_reject_keeps_minimum():
    plain = min_lines(5)
    reduced = min_lines(5, iso_reject=True)
    assert reduced.min_m == plain.min_m
    assert reduced.examined < plain.examined


# Sampling

def test_sampled_search_single_trial():
    result = sampled_search(SearchTask(6, Mode.SAMPLED, seed=4), 1)
    assert sum(result.histogram.values()) == 1
    assert len(result.histogram) == 1


def test_sampled_search_is_deterministic():
    task = SearchTask(8, Mode.SAMPLED, seed=17)
    assert sampled_search(task, 50).to_dict() == sampled_search(task, 50).to_dict()
    split = sampled_search(SearchTask(8, Mode.SAMPLED, seed=17, shard=(0, 2)), 50).merge(
        sampled_search(SearchTask(8, Mode.SAMPLED, seed=17, shard=(1, 2)), 50))
    assert split.to_dict() == sampled_search(task, 50).to_dict()


def test_sampled_minimum_respects_exhaustive_minimum():
    exhaustive = min_lines(5)
    sampled = sampled_search(SearchTask(5, Mode.SAMPLED, seed=2), 300)
    assert sampled.min_m >= exhaustive.min_m


def test_sampled_search_n10():
    result = sampled_search(SearchTask(10, Mode.SAMPLED, seed=1), 200)
    assert result.min_m >= 4
    assert not has_universal_line(result.argmin)


def test_sampled_search_rejects_no_trials():
    with pytest.raises(InvalidArgumentError):
        sampled_search(SearchTask(6, Mode.SAMPLED), 0)


# Canonical forms

def test_canonical_form_examples():
    a = Hypergraph3.from_triples(4, [(0, 1, 2)])
    b = Hypergraph3.from_triples(4, [(1, 2, 3)])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a) != canonical_form(Hypergraph3(4))


def test_canonical_classes_n4_match_bruteforce():
    graphs = list(enumerate_hypergraphs(4))
    classes = []
    for h in graphs:
        images = {frozenset(relabel(h, p).hedges) for p in permutations(range(4))}
        if not any(rep in images for rep in classes):
            classes.append(frozenset(h.hedges))
    assert len({canonical_form(h) for h in graphs}) == len(classes) == 5


def test_canonical_form_is_relabeling_invariant(rng):
    for _ in range(200):
        n = rng.randint(3, 7)
        h = random_hypergraph(rng, n)
        label = list(range(n))
        rng.shuffle(label)
        image = relabel(h, label)
        assert canonical_form(image) == canonical_form(h)
        assert line_profile(n, code_of(image)) == line_profile(n, code_of(h))


def test_refined_canonical_form_n9():
    h = Hypergraph3.from_triples(9, [(0, 1, 2), (2, 3, 4)])
    label = [8, 6, 4, 2, 0, 1, 3, 5, 7]
    assert canonical_form(relabel(h, label)) == canonical_form(h)
    other = Hypergraph3.from_triples(9, [(0, 1, 2), (3, 4, 5)])
    assert canonical_form(other) != canonical_form(h)
    with pytest.raises(UnsupportedSizeError):
        canonical_code(11, 0)


# Checkpoints

def test_checkpoint_written_and_reused(tmp_path):
    path = str(tmp_path / "n4.json")
    result = min_lines(4, checkpoint=path, checkpoint_every=4)
    with open(path) as f:
        saved = json.load(f)
    assert saved["next_index"] == 16
    assert saved["partial"] == result.to_dict()
    assert min_lines(4, checkpoint=path).to_dict() == result.to_dict()


def test_checkpoint_resume(tmp_path):
    path = str(tmp_path / "n5.json")
    task = SearchTask(5)
    save_checkpoint(path, task, 500, scan_range(5, Constraint.NO_UNIVERSAL, 0, 500))
    next_index, partial = load_checkpoint(path, task)
    assert next_index == 500 and partial.enumerated == 500
    assert min_lines(5, checkpoint=path, checkpoint_every=128).to_dict() == min_lines(5).to_dict()


def test_checkpoint_for_another_task_is_ignored(tmp_path):
    path = str(tmp_path / "other.json")
    save_checkpoint(path, SearchTask(4), 16, min_lines(4))
    assert load_checkpoint(path, SearchTask(5)) is None
    assert min_lines(5, checkpoint=path).to_dict() == min_lines(5).to_dict()


def test_checkpoint_for_other_scan_settings_is_ignored(tmp_path):
    path = str(tmp_path / "n5.json")
    save_checkpoint(path, SearchTask(5), 512, scan_range(5, Constraint.NO_UNIVERSAL, 0, 512))
    assert load_checkpoint(path, SearchTask(5, iso_reject=True)) is None
    assert load_checkpoint(path, SearchTask(5, engine=Engine.NAIVE)) is None
    reduced = min_lines(5, iso_reject=True, checkpoint=path)
    assert reduced.to_dict() == min_lines(5, iso_reject=True).to_dict()
    with open(path) as f:
        assert json.load(f)["task"]["iso_reject"] is True


@pytest.mark.slow
def test_exhaustive_populations_full():
    for n in (4, 5):
        result = min_lines(n, Constraint.NONE)
        assert result.examined == total_codes(n)
    rng = random.Random(13)
    for _ in range(10_000):
        h = random_hypergraph(rng, rng.randint(3, 8))
        label = list(range(h.n))
        rng.shuffle(label)
        assert line_profile(h.n, code_of(relabel(h, label))) == line_profile(h.n, code_of(h))
    result = sampled_search(SearchTask(10, Mode.SAMPLED, seed=0), 10_000)
    assert result.min_m >= 4
