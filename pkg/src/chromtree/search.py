"""Exhaustive scans: distinguishability, collisions, identity sweeps, conjecture tables."""

from __future__ import annotations

import json
import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .graphs import (
    Graph,
    canonical_graph_code,
    canonical_tree_code,
    degree_counts,
    enumerate_connected_graphs,
    enumerate_trees,
    girth_direct,
    path_counts,
    cycle_edges,
)
from .invariants import (
    connector_from_csf,
    connector_polynomial_direct,
    csf,
    csf_unicyclic_broken_circuit,
    given_size_holds,
    girth_from_csf,
    sequences_from_stp,
    subtree_from_csf,
    subtree_polynomial_direct,
    substitution_identity_check,
)
from .partitions import Partition
from .symfunc import specialize_principal, xi_table

log = logging.getLogger(__name__)

WORKERS_ENV = "CHROMTREE_WORKERS"
CAPS = {"csf": 15, "stp": 13, "graphs": 6, "identities": 10, "conjecture": 12}


class BoundError(ValueError):
    pass


@dataclass
class Finding:
    order: int
    code_a: str
    code_b: str | None
    invariant: str
    detail: str = ""


@dataclass
class ScanReport:
    family: str
    invariant: str
    min_n: int
    max_n: int
    counts: dict[int, int] = field(default_factory=dict)
    collisions: list[Finding] = field(default_factory=list)
    failures: list[Finding] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def to_text(self, timing: bool = True) -> str:
        lines = [f"scan {self.family} invariant={self.invariant} n={self.min_n}..{self.max_n}"]
        for n, c in sorted(self.counts.items()):
            lines.append(f"  n={n}: {c} checked")
        for f in self.collisions:
            lines.append(f"  collision n={f.order}: {f.code_a} ~ {f.code_b} {f.detail}".rstrip())
        for f in self.failures:
            lines.append(f"  FAIL n={f.order} {f.invariant}: {f.code_a} {f.detail}".rstrip())
        lines.extend(f"  note: {note}" for note in self.notes)
        lines.append(f"{len(self.collisions)} collisions, {len(self.failures)} failures")
        if timing:
            lines.append(f"elapsed {self.elapsed:.2f}s")
        return "\n".join(lines) + "\n"

    def records(self) -> list[dict]:
        """One flat record per finding with keys order, code_a, code_b, invariant, detail."""
        return [asdict(f) for f in self.collisions + self.failures]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records())


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn, items: list) -> list:
    """Ordered map, fanned out to processes when more than one worker is configured."""
    workers = worker_count()
    if workers == 1 or len(items) < 2 * workers:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _check_cap(kind: str, max_n: int, force: bool) -> None:
    cap = CAPS[kind]
    if max_n > cap:
        if not force:
            raise BoundError(f"max_n={max_n} exceeds the {kind} cap of {cap}")
        log.warning("max_n=%d exceeds the %s cap of %d; this may take a long time", max_n, kind, cap)


def _bucket_collisions(rows, order: int, invariant: str, detail_fn=None) -> list[Finding]:
    buckets: dict[str, list[tuple[str, Graph]]] = {}
    for code, key, g in rows:
        buckets.setdefault(key, []).append((code, g))
    found = []
    for members in buckets.values():
        members.sort(key=lambda cg: cg[0])
        for (ca, ga), (cb, gb) in combinations(members, 2):
            detail = detail_fn(ga, gb) if detail_fn else ""
            found.append(Finding(order, ca, cb, invariant, detail))
    found.sort(key=lambda f: (f.code_a, f.code_b))
    return found


# ------------------------------------------------------------------ tree distinguishability


def _tree_row(args):
    n, edges, invariant = args
    t = Graph(n, edges)
    value = csf(t) if invariant == "csf" else subtree_polynomial_direct(t)
    return canonical_tree_code(t), value.to_text()


SEVEN_TWO_TWO = Partition((7, 2, 2))


def stp_collision_detail(a: Graph, b: Graph) -> str:
    xa, xb = csf(a), csf(b)
    parts = [f"csf_equal={xa == xb}"]
    if a.n == SEVEN_TWO_TWO.weight():
        parts.append(f"c[7,2,2]={xa.coefficient(SEVEN_TWO_TWO)}/{xb.coefficient(SEVEN_TWO_TWO)}")
    return " ".join(parts)


def distinguishability_scan(max_n: int, invariant: str = "csf", min_n: int = 1, force: bool = False) -> ScanReport:
    if invariant not in ("csf", "stp"):
        raise ValueError(f"unknown invariant {invariant!r}")
    _check_cap(invariant, max_n, force)
    start = time.perf_counter()
    report = ScanReport("trees", invariant, min_n, max_n)
    for n in range(min_n, max_n + 1):
        trees = list(enumerate_trees(n))
        rows = _map(_tree_row, [(n, t.edges, invariant) for t in trees])
        report.counts[n] = len(trees)
        detail = stp_collision_detail if invariant == "stp" else None
        report.collisions += _bucket_collisions(
            [(code, key, t) for (code, key), t in zip(rows, trees)], n, invariant, detail
        )
    if invariant == "stp" and report.collisions:
        first = min(f.order for f in report.collisions)
        report.notes.append(f"smallest order with equal subtree polynomials: {first}")
    report.elapsed = time.perf_counter() - start
    return report


# ------------------------------------------------------------------ connected graphs


def graph_collision_scan(max_n: int, min_n: int = 1, force: bool = False) -> ScanReport:
    _check_cap("graphs", max_n, force)
    start = time.perf_counter()
    report = ScanReport("graphs", "csf", min_n, max_n)
    for n in range(min_n, max_n + 1):
        graphs = list(enumerate_connected_graphs(n))
        report.counts[n] = len(graphs)
        rows = [(canonical_graph_code(g), csf(g).to_text(), g) for g in graphs]
        report.collisions += _bucket_collisions(rows, n, "csf")
    report.elapsed = time.perf_counter() - start
    return report


# ------------------------------------------------------------------ identity sweeps


def _main_theorem_failures(t: Graph) -> list[tuple[str, str]]:
    x = csf(t)
    out = []
    if connector_from_csf(x) != connector_polynomial_direct(t):
        out.append(("main-thm/connector", "connector polynomial mismatch"))
    if subtree_from_csf(x) != subtree_polynomial_direct(t):
        out.append(("main-thm/subtree", "subtree polynomial mismatch"))
    return out


def _tree_identity_failures(t: Graph) -> list[tuple[str, str]]:
    out = _main_theorem_failures(t)
    x = csf(t)
    n = t.n
    s = subtree_polynomial_direct(t)
    k = connector_polynomial_direct(t)
    if not substitution_identity_check(s, k):
        out.append(("substitution", "S(q,r) != K(qr, q(1-r))"))
    if not given_size_holds(x):
        out.append(("given-size", "level sums differ from binomial counts"))
    if n >= 2:
        seq = sequences_from_stp(s, n)
        if list(seq.degree_seq) != degree_counts(t):
            out.append(("sequences/degree", f"{seq.degree_seq} vs {degree_counts(t)}"))
        if list(seq.path_seq) != path_counts(t):
            out.append(("sequences/path", f"{seq.path_seq} vs {path_counts(t)}"))
    for colors in range(6):
        if specialize_principal(x, colors) != colors * (colors - 1) ** (n - 1):
            out.append(("chromatic", f"k={colors}"))
    if girth_from_csf(x) != math.inf:
        out.append(("girth/tree", "finite girth reported for a tree"))
    return out


def _unicyclic_failures(g: Graph) -> list[tuple[str, str]]:
    x = csf(g)
    out = []
    if girth_from_csf(x) != girth_direct(g):
        out.append(("girth/unicyclic", f"{girth_from_csf(x)} vs {girth_direct(g)}"))
    for e0 in cycle_edges(g):
        if csf_unicyclic_broken_circuit(g, e0) != x:
            out.append(("broken-circuit", f"e0={e0}"))
    return out


def _graph_failures(g: Graph) -> list[tuple[str, str]]:
    got, want = girth_from_csf(csf(g)), girth_direct(g)
    return [] if got == want else [("girth/graph", f"{got} vs {want}")]


def _tree_worker(args):
    n, edges, which = args
    t = Graph(n, edges)
    fn = _main_theorem_failures if which == "main-thm" else _tree_identity_failures
    return canonical_tree_code(t), fn(t)


def unicyclic_from_trees(n: int) -> list[Graph]:
    """Every connected unicyclic graph on ``n`` vertices as tree plus one edge.

    Isomorphic copies are merged by canonical code when ``n`` allows it.
    """
    seen: dict[str, Graph] = {}
    out = []
    for t in enumerate_trees(n):
        present = set(t.edges)
        for e in combinations(range(n), 2):
            if e in present:
                continue
            g = t.add_edge(*e)
            if n <= 8:
                code = canonical_graph_code(g)
                if code in seen:
                    continue
                seen[code] = g
            out.append(g)
    return out


def identity_sweep(max_n: int, which: str = "identities", force: bool = False) -> ScanReport:
    """Run the tree identities (or only the main theorem) on every tree up to ``max_n``."""
    if which not in ("identities", "main-thm"):
        raise ValueError(f"unknown sweep {which!r}")
    _check_cap("identities", max_n, force)
    start = time.perf_counter()
    report = ScanReport("trees", which, 1, max_n)
    for n in range(1, max_n + 1):
        trees = list(enumerate_trees(n))
        report.counts[n] = len(trees)
        for code, fails in _map(_tree_worker, [(n, t.edges, which) for t in trees]):
            report.failures += [Finding(n, code, None, check, detail) for check, detail in fails]
    if which == "identities":
        for n in range(3, max_n + 1):
            graphs = unicyclic_from_trees(n)
            report.notes.append(f"n={n}: {len(graphs)} unicyclic graphs checked")
            for g in graphs:
                code = canonical_graph_code(g) if n <= 8 else repr(g.edges)
                report.failures += [Finding(n, code, None, c, d) for c, d in _unicyclic_failures(g)]
        for n in range(1, min(max_n, CAPS["graphs"]) + 1):
            graphs = list(enumerate_connected_graphs(n))
            report.notes.append(f"n={n}: {len(graphs)} connected graphs checked for girth")
            for g in graphs:
                report.failures += [
                    Finding(n, canonical_graph_code(g), None, c, d) for c, d in _graph_failures(g)
                ]
    report.elapsed = time.perf_counter() - start
    return report


# ------------------------------------------------------------------ conjectures


def conjecture_scan(max_n: int, force: bool = False) -> ScanReport:
    _check_cap("conjecture", max_n, force)
    start = time.perf_counter()
    report = ScanReport("xi", "conjecture", 1, max_n)
    for n in range(1, max_n + 1):
        table = xi_table(n)
        report.counts[n] = len(table.entries)
        for mu, a, b in table.positivity_violations():
            report.failures.append(Finding(n, str(mu), None, "positivity", f"i={a} j={b} xi={table.entries[(mu, a, b)]}"))
        for mu, a, b in table.integrality_violations():
            report.failures.append(Finding(n, str(mu), None, "z-integrality", f"i={a} j={b} xi={table.entries[(mu, a, b)]}"))
        rng = table.scaled_range()
        if rng is not None:
            report.notes.append(f"n={n}: xi*z in [{rng[0]}, {rng[1]}]")
    report.elapsed = time.perf_counter() - start
    return report
