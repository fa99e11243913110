from __future__ import annotations

import json

import pytest

from chromtree import search
from chromtree.graphs import enumerate_trees, graph_from_code
from chromtree.invariants import csf, subtree_polynomial_direct
from chromtree.partitions import Partition


def _trees_by_code(n):
    from chromtree.graphs import canonical_tree_code

    return {canonical_tree_code(t): t for t in enumerate_trees(n)}


def test_no_csf_collisions_among_small_trees():
    report = search.distinguishability_scan(10, "csf")
    assert report.collisions == []
    assert report.counts[10] == 106


def test_no_stp_collisions_up_to_ten():
    assert search.distinguishability_scan(10, "stp").collisions == []


def test_stp_collision_at_eleven():
    report = search.distinguishability_scan(11, "stp", min_n=11)
    assert report.collisions
    trees = _trees_by_code(11)
    lam = Partition((7, 2, 2))
    matched = False
    for f in report.collisions:
        a, b = trees[f.code_a], trees[f.code_b]
        assert f.code_a != f.code_b
        assert subtree_polynomial_direct(a).to_text() == subtree_polynomial_direct(b).to_text()
        xa, xb = csf(a), csf(b)
        assert xa != xb
        if (xa.coefficient(lam) == 0) != (xb.coefficient(lam) == 0):
            matched = True
    assert matched


def test_csf_buckets_refine_stp_buckets():
    for n in range(1, 13):
        stp = {frozenset((f.code_a, f.code_b)) for f in search.distinguishability_scan(n, "stp", min_n=n).collisions}
        csf_pairs = {frozenset((f.code_a, f.code_b)) for f in search.distinguishability_scan(n, "csf", min_n=n).collisions}
        assert csf_pairs <= stp


def test_graph_collisions():
    report = search.graph_collision_scan(5)
    assert all(f.order == 5 for f in report.collisions)
    assert report.collisions
    for f in report.collisions:
        assert f.code_a != f.code_b
        assert csf(graph_from_code(f.code_a)) == csf(graph_from_code(f.code_b))


def test_scan_bounds():
    with pytest.raises(search.BoundError):
        search.distinguishability_scan(16, "csf")
    with pytest.raises(search.BoundError):
        search.distinguishability_scan(14, "stp")
    with pytest.raises(search.BoundError):
        search.graph_collision_scan(7)
    with pytest.raises(search.BoundError):
        search.conjecture_scan(13)
    with pytest.raises(search.BoundError):
        search.identity_sweep(11)
    with pytest.raises(ValueError):
        search.distinguishability_scan(5, "chromatic")


def test_forced_scan_logs_a_warning(caplog):
    search.CAPS["graphs"], old = 3, search.CAPS["graphs"]
    try:
        with caplog.at_level("WARNING"):
            search.graph_collision_scan(4, force=True)
    finally:
        search.CAPS["graphs"] = old
    assert "exceeds" in caplog.text


def test_identity_sweep_is_clean():
    report = search.identity_sweep(8)
    assert report.failures == []
    assert report.counts[8] == 23


def test_main_theorem_sweep_is_clean():
    assert search.identity_sweep(9, "main-thm").failures == []


def test_sweep_reports_injected_failures(monkeypatch):
    monkeypatch.setattr(search, "given_size_holds", lambda x: x.degree != 5)
    report = search.identity_sweep(5)
    assert {f.invariant for f in report.failures} == {"given-size"}
    assert {f.order for f in report.failures} == {5}


def test_conjecture_scan():
    report = search.conjecture_scan(10)
    assert report.failures == []
    assert any("xi*z in" in note for note in report.notes)
    assert search.conjecture_scan(2).failures == []


def test_reports_are_deterministic(monkeypatch):
    first = search.distinguishability_scan(11, "stp").to_text(timing=False)
    assert first == search.distinguishability_scan(11, "stp").to_text(timing=False)
    monkeypatch.setenv(search.WORKERS_ENV, "2")
    assert search.distinguishability_scan(11, "stp").to_text(timing=False) == first


def test_jsonl_schema():
    report = search.graph_collision_scan(5)
    lines = report.to_jsonl().splitlines()
    assert len(lines) == len(report.collisions)
    for line in lines:
        rec = json.loads(line)
        assert set(rec) == {"order", "code_a", "code_b", "invariant", "detail"}


def test_unicyclic_builder_counts():
    # connected unicyclic graphs on 3..7 vertices
    assert [len(search.unicyclic_from_trees(n)) for n in range(3, 8)] == [1, 2, 5, 13, 33]
