"""Recover spiders, caterpillars, squids and crabs from their invariants."""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction

from .bipoly import BivariatePolynomial
from .graphs import CaterpillarSpec, CrabSpec, SquidSpec
from .invariants import girth_from_csf, sequences_from_stp, subtree_from_csf
from .partitions import Partition, conjugate, omega, omega_by_class
from .symfunc import SymFunc, two_part_portion


class ReconstructionError(ValueError):
    """The input does not satisfy the hypotheses of the reconstruction."""


# ------------------------------------------------------------------ caterpillar test


def caterpillar_criterion_raw(x: SymFunc) -> bool:
    """``diam - 1 == n - leaves`` without the star guard."""
    n = x.degree
    if n < 4:
        raise ValueError("the caterpillar criterion needs n >= 4")
    seq = sequences_from_stp(subtree_from_csf(x), n)
    return seq.diameter - 1 == n - seq.leaves


def is_caterpillar_by_csf(x: SymFunc) -> bool:
    n = x.degree
    if n < 4:
        raise ValueError("the caterpillar criterion needs n >= 4")
    seq = sequences_from_stp(subtree_from_csf(x), n)
    if seq.leaves == n - 1:
        # stars pass the numeric test but have a one-vertex spine
        return False
    return seq.diameter - 1 == n - seq.leaves


# ------------------------------------------------------------------ spiders from S_T


def _other_legs_literal(m: dict[int, int], ell: int, k: int) -> int:
    """Contribution of legs shorter than ``k`` to ``s(n-k-1, ell-1)``, as printed."""
    total = 0
    for j in range(1, k // 2 + 1):
        if not m.get(j):
            continue
        args = [m.get(i, 0) - (1 if i == j else 0) for i in range(2, k - j + 1)]
        args.append(ell - sum(m.get(i, 0) for i in range(1, k - j + 1)))
        total += m[j] * omega_by_class(args)
    for j in range(k // 2 + 1, k):
        if not m.get(j):
            continue
        args = [m.get(i, 0) for i in range(2, k - j + 1)]
        args.append(ell - 1 - sum(m.get(i, 0) for i in range(1, k - j + 1)))
        total += m[j] * omega_by_class(args)
    return total


def _other_legs_direct(m: dict[int, int], ell: int, k: int) -> int:
    """Same count built leg by leg: drop one leg of length ``j``, trim ``k - j`` edges elsewhere."""
    total = 0
    longer = ell - sum(m.get(i, 0) for i in range(1, k))
    for j in range(1, k):
        if not m.get(j):
            continue
        balls = k - j
        caps = []
        for i in range(1, k):
            caps += [min(i - 1, balls)] * (m.get(i, 0) - (1 if i == j else 0))
        caps += [balls] * longer
        total += m[j] * omega(caps, balls)
    return total


def leg_multiplicities_from_stp(s: BivariatePolynomial, n: int, ell: int, method: str = "literal") -> dict[int, int]:
    """Multiplicities ``m_k`` of leg lengths for a spider with ``ell > 3`` legs."""
    contrib = _other_legs_literal if method == "literal" else _other_legs_direct
    m = {1: s[(n - 2, ell - 1)]}
    k = 1
    while sum(m.values()) < ell:
        k += 1
        if k > n - 1:
            raise ReconstructionError("leg multiplicities do not close up: not a spider")
        m[k] = s[(n - k - 1, ell - 1)] - contrib(m, ell, k)
        if m[k] < 0:
            raise ReconstructionError(f"negative multiplicity for leg length {k}: not a spider")
    if sum(m.values()) != ell or sum(k * c for k, c in m.items()) != n - 1:
        raise ReconstructionError("leg multiplicities inconsistent with the edge count")
    return {k: c for k, c in m.items() if c}


def spider_from_stp(s: BivariatePolynomial, n: int, method: str = "literal") -> Partition:
    """Leg lengths of a spider from its subtree polynomial."""
    seq = sequences_from_stp(s, n)
    degree = seq.degree_seq
    if sum(degree[2:]) != 1:
        raise ReconstructionError("subtree polynomial does not belong to a spider")
    ell = seq.leaves
    if ell == 3:
        diam = seq.diameter
        shortest = (n - 1) - diam
        three_leaf = sum(c for (_, j), c in s.terms.items() if j == 3)
        if shortest < 1 or three_leaf % shortest:
            raise ReconstructionError("three-leaf subtree count is inconsistent")
        product = three_leaf // shortest
        disc = diam * diam - 4 * product
        root = math.isqrt(disc) if disc >= 0 else -1
        if root < 0 or root * root != disc or (diam + root) % 2:
            raise ReconstructionError("leg lengths are not integral")
        a, b = (diam + root) // 2, (diam - root) // 2
        if b < shortest:
            raise ReconstructionError("recovered legs are not ordered")
        return Partition((a, b, shortest))
    mult = leg_multiplicities_from_stp(s, n, ell, method)
    return Partition(k for k, c in mult.items() for _ in range(c))


# ------------------------------------------------------------------ spiders from the two-part portion


def d_vector(y: SymFunc, n: int) -> tuple[int, ...]:
    return tuple(int(abs(y.coefficient((a, n - a)))) for a in range(1, n // 2 + 1))


def spider_from_two_part(y: SymFunc, n: int) -> Partition:
    """Leg lengths from the length-two terms of ``X``.

    Paths come back as two legs; callers decide whether that is acceptable.
    """
    d = list(d_vector(two_part_portion(y), n))
    if not d:
        raise ReconstructionError("order too small to carry a two-part portion")
    rise = next((i for i in range(1, len(d)) if d[i] > d[i - 1]), None)
    if rise is None:
        mu = [x for x in d if x]
    else:
        t = rise  # number of entries in the weakly decreasing prefix
        tail = d[t:]
        if d[t - 1] != 1 or any(x != 2 for x in tail[:-1]) or tail[-1] not in (1, 2):
            raise ReconstructionError(f"d-vector {tuple(d)} has neither admissible shape")
        mu = d[:t]
        for x in tail:
            mu += [1, 1] if x == 2 else [1]
    legs = conjugate(mu)
    if legs.weight() != n - 1 or len(legs) < 2:
        raise ReconstructionError(f"d-vector {tuple(d)} does not describe a spider on {n} vertices")
    return legs


# ------------------------------------------------------------------ caterpillars and crabs


def _singleton_free_types(x: SymFunc) -> dict[int, list[Partition]]:
    by_len: dict[int, list[Partition]] = {}
    for lam in x.coeffs:
        if lam.singleton_free():
            by_len.setdefault(len(lam), []).append(lam)
    return by_len


def _merged_pairs(leaf_type: Partition, merged: list[Partition]) -> list[tuple[int, int]]:
    """For each merged type, the two parts of ``leaf_type`` that were joined."""
    whole = Counter(leaf_type)
    pairs = []
    for mu in merged:
        lost = whole - Counter(mu)
        gained = Counter(mu) - whole
        if sum(lost.values()) != 2 or sum(gained.values()) != 1:
            raise ReconstructionError(f"{mu} is not a one-merge coarsening of {leaf_type}")
        a, b = sorted(lost.elements())
        if next(iter(gained)) != a + b:
            raise ReconstructionError(f"{mu} is not a one-merge coarsening of {leaf_type}")
        pairs.append((a - 1, b - 1))
    return pairs


def _adjacency(pairs) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for a, b in pairs:
        if a != b:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
    return adj


def caterpillar_from_csf(x: SymFunc) -> CaterpillarSpec:
    """Leaf numbers of a caterpillar whose equal leaf numbers sit on contiguous spine runs."""
    n = x.degree
    by_len = _singleton_free_types(x)
    if not by_len:
        raise ReconstructionError("no singleton-free type: not a caterpillar with positive leaf numbers")
    top = max(by_len)
    if len(by_len[top]) != 1 or top < 2:
        raise ReconstructionError("leaf-edge type is not unique")
    leaf_type = by_len[top][0]
    counts = Counter(p - 1 for p in leaf_type)
    pairs = _merged_pairs(leaf_type, by_len.get(top - 1, []))
    adj = _adjacency(pairs)
    values = sorted(counts)
    for v in values:
        adj.setdefault(v, set())
    edges = sum(len(s) for s in adj.values()) // 2
    if len(values) > 1:
        ends = [v for v in values if len(adj[v]) == 1]
        if edges != len(values) - 1 or len(ends) != 2 or any(len(adj[v]) > 2 for v in values):
            raise ReconstructionError("leaf-number adjacencies do not form a path")
        order = [min(ends)]
        while len(order) < len(values):
            order.append(next(w for w in adj[order[-1]] if w not in order))
    else:
        order = values
    seq = tuple(v for v in order for _ in range(counts[v]))
    if len(seq) + sum(seq) != n:
        raise ReconstructionError("recovered caterpillar has the wrong order")
    return CaterpillarSpec(seq)


def crab_from_csf(x: SymFunc) -> CrabSpec:
    """Cyclic leaf counts of a crab whose cycle vertices have distinct degrees above 2."""
    g = girth_from_csf(x)
    if g == math.inf:
        raise ReconstructionError("acyclic input: not a crab")
    by_len = _singleton_free_types(x)
    top = by_len.get(g, [])
    if len(top) != 1:
        raise ReconstructionError("leaf-edge type of length g is missing or not unique")
    leaf_type = top[0]
    counts = Counter(p - 1 for p in leaf_type)
    if any(c > 1 for c in counts.values()):
        raise ReconstructionError("leaf counts are not distinct")
    pairs = _merged_pairs(leaf_type, by_len.get(g - 1, []))
    adj = _adjacency(pairs)
    values = sorted(counts)
    if len(pairs) != g or any(len(adj.get(v, ())) != 2 for v in values):
        raise ReconstructionError("leaf-count adjacencies do not form a cycle")
    order = [values[0]]
    while len(order) < g:
        nxt = [w for w in adj[order[-1]] if w not in order]
        if not nxt:
            raise ReconstructionError("leaf-count adjacencies split into several cycles")
        order.append(min(nxt))
    return CrabSpec(tuple(order))


# ------------------------------------------------------------------ squids


def _hook_sum(n: int, upto: int) -> SymFunc:
    """``sum_{j=1}^{upto} p_(j, n-j)``."""
    acc = SymFunc.zero("P", n)
    for j in range(1, upto + 1):
        acc = acc + SymFunc("P", n, {Partition((j, n - j)): 1})
    return acc


def squid_from_csf(x: SymFunc) -> SquidSpec:
    n = x.degree
    g = girth_from_csf(x)
    if g == math.inf:
        raise ReconstructionError("acyclic input: not a squid")
    k = g - 1
    sign = (-1) ** (n - 2)
    spiders_total = two_part_portion(x)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            spiders_total = spiders_total + SymFunc("P", n, {Partition((j - i, n - j + i)): sign})
    correction = SymFunc.zero("P", n)
    for i in range(1, k + 1):
        correction = correction + _hook_sum(n, k) - _hook_sum(n, i) - _hook_sum(n, k - i)
    target = (spiders_total + correction.scale(sign)).scale(Fraction(1, k))
    if not target.is_integral():
        raise ReconstructionError("averaged two-part portion is not integral: not a squid")
    legs = spider_from_two_part(target, n)
    if len(legs) == 2:
        tentacles = Partition([n - 1 - k])
    else:
        rest = list(legs)
        if k not in rest:
            raise ReconstructionError(f"spider legs {legs} lack the cycle leg of length {k}")
        rest.remove(k)
        tentacles = Partition(rest)
    if tentacles.weight() + g != n or not tentacles:
        raise ReconstructionError("recovered squid has the wrong order")
    return SquidSpec(g, tentacles)
