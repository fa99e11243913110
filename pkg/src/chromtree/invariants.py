"""The chromatic symmetric function and invariants extracted from it."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import _kernels
from .bipoly import BivariatePolynomial, inverse_substitution_holds, substitute_connector
from .graphs import Graph, connector, cycle_edges, is_tree, is_unicyclic
from .partitions import Partition, binomial, partitions_list, phi, psi
from .symfunc import SymFunc

SAMPLE_POINTS = ((1, 1), (2, 3), (Fraction(1, 2), Fraction(-3, 7)), (-5, 2), (Fraction(7, 3), 4))


def _from_type_counts(n: int, counts: dict[int, int]) -> SymFunc:
    return SymFunc("P", n, {Partition(_kernels.decode_type(code, n)): c for code, c in counts.items()})


def csf(g: Graph, backend: str | None = None) -> SymFunc:
    """Power-sum expansion ``sum_A (-1)^|A| p_type(A)`` over all edge subsets."""
    if g.n == 0:
        return SymFunc("P", 0, {Partition(): 1})
    return _from_type_counts(g.n, _kernels.type_counts(g.n, g.edges, backend))


def csf_reference(g: Graph) -> SymFunc:
    """Slow pure-Python expansion used as an oracle for the kernels."""
    from .graphs import components_type

    acc: dict[Partition, int] = {}
    for mask in range(1 << g.m):
        lam = components_type(g, mask)
        acc[lam] = acc.get(lam, 0) + (-1) ** mask.bit_count()
    return SymFunc("P", g.n, acc)


def coefficient(x: SymFunc, lam) -> Fraction:
    return x.coefficient(lam)


def csf_unicyclic_broken_circuit(g: Graph, e0, backend: str | None = None) -> SymFunc:
    """Expansion restricted to subsets that do not contain the broken circuit ``C - e0``."""
    if not is_unicyclic(g):
        raise ValueError("graph is not connected unicyclic")
    e0 = (min(e0), max(e0))
    ring = cycle_edges(g)
    if e0 not in ring:
        raise ValueError(f"edge {e0} is not on the cycle")
    index = {e: i for i, e in enumerate(g.edges)}
    broken = 0
    for e in ring:
        if e != e0:
            broken |= 1 << index[e]
    return _from_type_counts(g.n, _kernels.type_counts(g.n, g.edges, backend, forbidden=broken))


# ------------------------------------------------------------------ direct polynomials


def subtree_polynomial_direct(t: Graph, backend: str | None = None) -> BivariatePolynomial:
    if not is_tree(t):
        raise ValueError("subtree polynomial needs a tree")
    return BivariatePolynomial(_kernels.subtree_counts(t.n, t.edges, backend), ("q", "r"))


def connector_polynomial_direct(t: Graph) -> BivariatePolynomial:
    if not is_tree(t):
        raise ValueError("connector polynomial needs a tree")
    terms: dict[tuple[int, int], int] = {}
    for mask in range(1, 1 << t.m):
        key = (mask.bit_count(), connector(t, mask).bit_count())
        terms[key] = terms.get(key, 0) + 1
    return BivariatePolynomial(terms, ("x", "y"))


# ------------------------------------------------------------------ from X_T


@lru_cache(maxsize=None)
def _psi_cells(n: int) -> dict[Partition, tuple]:
    table = {}
    for lam in partitions_list(n):
        cells = []
        for a in range(1, n):
            for b in range(0, n - a):
                val = psi(lam, n, a, b)
                if val:
                    cells.append(((a, b), val))
        table[lam] = tuple(cells)
    return table


@lru_cache(maxsize=None)
def _phi_cells(n: int) -> dict[Partition, tuple]:
    table = {}
    for lam in partitions_list(n):
        cells = []
        for i in range(1, n):
            for j in range(1, i + 1):
                val = phi(lam, n, i, j)
                if val:
                    cells.append(((i, j), val))
        table[lam] = tuple(cells)
    return table


def _pair_with(x: SymFunc, cells: dict, names) -> BivariatePolynomial:
    acc: dict[tuple[int, int], Fraction] = {}
    for lam, c in x.coeffs.items():
        for key, val in cells[lam]:
            acc[key] = acc.get(key, 0) + val * c
    bad = [k for k, v in acc.items() if Fraction(v).denominator != 1]
    if bad:
        raise ValueError(f"non-integral coefficients at {sorted(bad)}: input is not a tree's X")
    return BivariatePolynomial({k: int(v) for k, v in acc.items()}, names)


def connector_from_csf(x: SymFunc) -> BivariatePolynomial:
    if x.basis != "P":
        raise ValueError("expected a P-basis symmetric function")
    return _pair_with(x, _psi_cells(x.degree), ("x", "y"))


def subtree_from_csf(x: SymFunc) -> BivariatePolynomial:
    if x.basis != "P":
        raise ValueError("expected a P-basis symmetric function")
    return _pair_with(x, _phi_cells(x.degree), ("q", "r"))


def substitution_identity_check(s: BivariatePolynomial, k: BivariatePolynomial) -> bool:
    """``S(q, r) == K(qr, q(1-r))`` exactly, and the inverse substitution at sample points."""
    if substitute_connector(k) != s:
        return False
    return inverse_substitution_holds(s, k, SAMPLE_POINTS)


# ------------------------------------------------------------------ sequences


@dataclass(frozen=True)
class SequenceTriple:
    """Path, star and degree sequences; entry ``i - 1`` holds index ``i``."""

    path_seq: tuple[int, ...]
    star_seq: tuple[int, ...]
    degree_seq: tuple[int, ...]

    @property
    def diameter(self) -> int:
        return max((i + 1 for i, c in enumerate(self.path_seq) if c > 0), default=0)

    @property
    def leaves(self) -> int:
        return self.degree_seq[0] if self.degree_seq else 0


def _trim(seq: list[int]) -> tuple[int, ...]:
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def sequences_from_stp(s: BivariatePolynomial, n: int) -> SequenceTriple:
    if n <= 1:
        return SequenceTriple((), (), ())
    top = n - 1
    path = [n - 1] + [s[(i, 2)] for i in range(2, top + 1)]
    star = [s[(k, k)] for k in range(1, top + 1)]
    degree = [0] * (top + 1)
    for j in range(2, top + 1):
        degree[j] = sum(binomial(k, j) * (-1) ** (j + k) * star[k - 1] for k in range(j, top + 1))
    degree[1] = n - sum(degree[2:])
    if min(degree[1:]) < 0:
        raise ValueError("negative degree count: not a tree's subtree polynomial")
    return SequenceTriple(_trim(path), _trim(star), _trim(degree[1:]))


# ------------------------------------------------------------------ scalar extractions


@dataclass
class ScalarReport:
    n: int
    edges: int
    components: int
    tree: bool
    leaves: int | None = None
    subtree_counts: dict[int, int] = field(default_factory=dict)


def _hook(n: int, j: int) -> Partition:
    return Partition([j] + [1] * (n - j))


def edge_count(x: SymFunc) -> int:
    if x.degree < 2:
        return 0
    return int(-x.coefficient(_hook(x.degree, 2)))


def component_count(x: SymFunc) -> int:
    return min((len(lam) for lam in x.coeffs), default=0)


def scalar_extractions(x: SymFunc) -> ScalarReport:
    n = x.degree
    edges = edge_count(x)
    comps = component_count(x)
    tree = comps == 1 and edges == n - 1
    report = ScalarReport(n, edges, comps, tree)
    if tree:
        report.subtree_counts = {j: int(abs(x.coefficient(_hook(n, j)))) for j in range(2, n + 1)}
        if n == 2:
            report.leaves = 2
        elif n >= 3:
            report.leaves = int(abs(x.coefficient(Partition([n - 1, 1]))))
        else:
            report.leaves = 0
    return report


def level_sums(x: SymFunc) -> dict[int, Fraction]:
    sums: dict[int, Fraction] = {}
    for lam, c in x.coeffs.items():
        sums[len(lam)] = sums.get(len(lam), 0) + c
    return sums


def girth_from_csf(x: SymFunc) -> float | int:
    """Girth from the first level ``k`` (scanning down) where the acyclic count fails."""
    n = x.degree
    m = edge_count(x)
    sums = level_sums(x)
    for k in range(n - 1, 0, -1):
        if sums.get(k, 0) != (-1) ** (n - k) * binomial(m, n - k):
            return n - k + 1
    return math.inf


def given_size_holds(x: SymFunc) -> bool:
    """Tree level identity: ``sum_{len(lam) = k} (-1)^(n-k) c_lam == C(n-1, n-k)``.

    Each side counts the edge subsets of size ``n - k``.
    """
    n = x.degree
    sums = level_sums(x)
    return all((-1) ** (n - k) * sums.get(k, 0) == binomial(n - 1, n - k) for k in range(1, n + 1))
