"""Simple graphs, structural predicates, canonical forms and enumeration."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .partitions import Partition, partitions_of

MAX_EDGES = 62
MAX_TREE_ORDER = 16
MAX_GRAPH_ORDER = 6
MAX_CANON_ORDER = 8

INF = math.inf


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v`` in first-seen
    order; that order fixes the bit positions of edge subsets.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: dict[tuple[int, int], None] = {}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            seen.setdefault((min(u, v), max(u, v)), None)
        if len(seen) > MAX_EDGES:
            raise ValueError(f"at most {MAX_EDGES} edges are supported, got {len(seen)}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(seen)
        self._adj = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adj(self) -> list[list[int]]:
        if self._adj is None:
            adj: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.edges:
                adj[u].append(v)
                adj[v].append(u)
            self._adj = adj
        return self._adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, list(self.edges) + [(u, v)])

    def remove_edges(self, drop: Iterable[Sequence[int]]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in drop}
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, list(self.edges) + [(u + shift, v + shift) for u, v in other.edges])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)})"


# ------------------------------------------------------------------ builders


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


# ------------------------------------------------------------------ components


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        return True

    def component_sizes(self) -> list[int]:
        return [self.size[v] for v in range(len(self.parent)) if self.parent[v] == v]


def mask_edges(g: Graph, mask: int) -> list[tuple[int, int]]:
    return [e for i, e in enumerate(g.edges) if mask >> i & 1]


def components_type(g: Graph, mask: int) -> Partition:
    """Orders of the components of the spanning subgraph ``(V, A)``."""
    if mask >> g.m:
        raise ValueError("edge subset has bits beyond the edge count")
    uf = UnionFind(g.n)
    for u, v in mask_edges(g, mask):
        uf.union(u, v)
    return Partition(uf.component_sizes())


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    """Connected with exactly one cycle."""
    return g.n >= 3 and g.m == g.n and is_connected(g)


def girth_direct(g: Graph) -> float | int:
    """Shortest cycle length by BFS from every vertex; ``math.inf`` for forests."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def cycle_vertices(g: Graph) -> list[int]:
    """Vertices of the unique cycle of a unicyclic graph, in cyclic order."""
    deg = g.degrees()
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    ring = [v for v in range(g.n) if alive[v]]
    if not ring:
        return []
    order, prev = [ring[0]], -1
    while True:
        cur = order[-1]
        nxt = next(w for w in g.adj[cur] if alive[w] and w != prev)
        if nxt == order[0]:
            return order
        prev = cur
        order.append(nxt)


def cycle_edges(g: Graph) -> list[tuple[int, int]]:
    ring = cycle_vertices(g)
    return [(min(a, b), max(a, b)) for a, b in zip(ring, ring[1:] + ring[:1])]


# ------------------------------------------------------------------ trees


def _tree_distances(t: Graph, source: int) -> list[int]:
    dist = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in t.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(t: Graph) -> int:
    if t.n <= 1:
        return 0
    d0 = _tree_distances(t, 0)
    far = max(range(t.n), key=d0.__getitem__)
    return max(_tree_distances(t, far))


def path_counts(t: Graph) -> list[int]:
    """``pi[i-1]`` = number of paths with ``i`` edges."""
    counts: dict[int, int] = {}
    for s in range(t.n):
        for d in _tree_distances(t, s):
            if d > 0:
                counts[d] = counts.get(d, 0) + 1
    top = max(counts, default=0)
    return [counts.get(i, 0) // 2 for i in range(1, top + 1)]


def degree_counts(g: Graph) -> list[int]:
    """``delta[j-1]`` = number of vertices of degree ``j`` (j >= 1)."""
    degs = g.degrees()
    top = max(degs, default=0)
    return [sum(1 for d in degs if d == j) for j in range(1, top + 1)]


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise ValueError("input graph is not a tree")


def subtrees(t: Graph) -> Iterator[tuple[int, int]]:
    """Yield ``(mask, leaf_mask)`` for every subtree with at least one edge.

    Grows connected edge sets outward from each edge in index order, so every
    subtree is produced exactly once (rooted at its lowest edge index).
    """
    _require_tree(t)
    incident: list[list[int]] = [[] for _ in range(t.n)]
    for i, (u, v) in enumerate(t.edges):
        incident[u].append(i)
        incident[v].append(i)

    def leaf_mask(mask: int) -> int:
        deg = [0] * t.n
        for u, v in mask_edges(t, mask):
            deg[u] += 1
            deg[v] += 1
        out = 0
        for i, (u, v) in enumerate(t.edges):
            if mask >> i & 1 and (deg[u] == 1 or deg[v] == 1):
                out |= 1 << i
        return out

    def frontier_of(mask: int, low: int) -> int:
        out = 0
        for i, (u, v) in enumerate(t.edges):
            if mask >> i & 1:
                for w in (u, v):
                    for j in incident[w]:
                        if j > low and not mask >> j & 1:
                            out |= 1 << j
        return out

    def grow(mask: int, frontier: int, banned: int, low: int) -> Iterator[tuple[int, int]]:
        yield mask, leaf_mask(mask)
        avail = frontier & ~banned
        while avail:
            bit = avail & -avail
            avail ^= bit
            new = mask | bit
            yield from grow(new, frontier_of(new, low), banned, low)
            banned |= bit

    for low in range(t.m):
        start = 1 << low
        yield from grow(start, frontier_of(start, low), 0, low)


def connector(t: Graph, mask: int) -> int:
    """Minimal edge set ``K`` outside ``A`` such that ``A | K`` is a subtree."""
    _require_tree(t)
    if mask == 0:
        raise ValueError("connector of the empty edge set is undefined")
    terminals = set()
    for u, v in mask_edges(t, mask):
        terminals.update((u, v))
    # prune non-terminal leaves until the Steiner tree remains
    deg = t.degrees()
    alive = [True] * t.n
    queue = deque(v for v in range(t.n) if deg[v] <= 1 and v not in terminals)
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for w in t.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 1 and w not in terminals:
                    queue.append(w)
    steiner = 0
    for i, (u, v) in enumerate(t.edges):
        if alive[u] and alive[v]:
            steiner |= 1 << i
    return steiner & ~mask


# ------------------------------------------------------------------ canonical forms


def tree_centers(t: Graph) -> list[int]:
    if t.n <= 2:
        return list(range(t.n))
    deg = t.degrees()
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Graph, root: int) -> str:
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for u in order:
        for w in t.adj[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    codes: list[str] = [""] * t.n
    children: list[list[str]] = [[] for _ in range(t.n)]
    for u in reversed(order):
        codes[u] = "(" + "".join(sorted(children[u])) + ")"
        if u != root:
            children[parent[u]].append(codes[u])
    return codes[root]


def canonical_tree_code(t: Graph) -> str:
    """Nested-parenthesis encoding of the tree rooted at its center.

    For bicentral trees the smaller of the two rooted encodings is used.
    """
    _require_tree(t)
    return min(_rooted_code(t, c) for c in tree_centers(t))


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> np.ndarray:
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    top = len(pairs) - 1
    perms = list(permutations(range(n)))
    table = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for r, perm in enumerate(perms):
        for c, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            table[r, c] = top - index[(min(a, b), max(a, b))]
    return table


def canonical_graph_code(g: Graph) -> str:
    """Lexicographically smallest upper-triangle adjacency string over all relabelings."""
    if g.n > MAX_CANON_ORDER:
        raise ValueError(f"graph canonization is capped at n <= {MAX_CANON_ORDER}")
    npairs = g.n * (g.n - 1) // 2
    if g.n < 2:
        return f"{g.n}:"
    index = {p: i for i, p in enumerate(combinations(range(g.n), 2))}
    cols = [index[e] for e in g.edges]
    table = _perm_tables(g.n)
    if cols:
        value = int((np.int64(1) << table[:, cols]).sum(axis=1).min())
    else:
        value = 0
    return f"{g.n}:" + format(value, f"0{npairs}b")


def graph_from_code(code: str) -> Graph:
    n_text, bits = code.split(":")
    n = int(n_text)
    pairs = list(combinations(range(n), 2))
    return Graph(n, [p for p, b in zip(pairs, bits) if b == "1"])


# ------------------------------------------------------------------ enumeration


def _next_level_sequence(seq: list[int]) -> list[int] | None:
    """Successor of a canonical rooted-tree level sequence (root at level 0)."""
    p = len(seq) - 1
    while p > 0 and seq[p] == 1:
        p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = seq[:p]
    for i in range(p, len(seq)):
        out.append(out[i - (p - q)])
    return out


def rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """Every rooted tree on ``n`` vertices exactly once, as a level sequence."""
    if n < 1:
        return
    seq: list[int] | None = list(range(n))
    while seq is not None:
        yield seq
        seq = _next_level_sequence(seq)


def level_sequence_edges(seq: Sequence[int], offset: int = 0) -> list[tuple[int, int]]:
    stack: list[int] = []
    edges = []
    for i, level in enumerate(seq):
        del stack[level:]
        if stack:
            edges.append((stack[-1] + offset, i + offset))
        stack.append(i)
    return edges


def _root_branch_sizes(seq: Sequence[int]) -> list[int]:
    starts = [i for i, level in enumerate(seq) if level == 1]
    return [b - a for a, b in zip(starts, starts[1:] + [len(seq)])]


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices, in a fixed order.

    Unicentroidal trees are rooted level sequences whose root branches all
    have fewer than ``n/2`` vertices; bicentroidal trees are unordered pairs
    of rooted trees on ``n/2`` vertices joined at their roots.
    """
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree enumeration supports 1 <= n <= {MAX_TREE_ORDER}")
    for seq in rooted_level_sequences(n):
        if all(2 * b < n for b in _root_branch_sizes(seq)):
            yield Graph(n, level_sequence_edges(seq))
    if n % 2 == 0:
        half = n // 2
        halves = [list(s) for s in rooted_level_sequences(half)]
        for i, left in enumerate(halves):
            for right in halves[i:]:
                edges = level_sequence_edges(left) + level_sequence_edges(right, half) + [(0, half)]
                yield Graph(n, edges)


def tree_from_prufer(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph(n, edges)


def _mask_connected(n: int, pair_list, mask: int) -> bool:
    adj = [0] * n
    for i, (u, v) in enumerate(pair_list):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            nxt |= adj[bit.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One connected graph per isomorphism class, ordered by edge count then code."""
    if not 1 <= n <= MAX_GRAPH_ORDER:
        raise ValueError(f"connected-graph enumeration supports 1 <= n <= {MAX_GRAPH_ORDER}")
    pairs = list(combinations(range(n), 2))
    found: dict[str, Graph] = {}
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n - 1 or not _mask_connected(n, pairs, mask):
            continue
        g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        code = canonical_graph_code(g)
        if code not in found:
            found[code] = graph_from_code(code)
    for code in sorted(found, key=lambda c: (c.count("1"), c)):
        yield found[code]


# ------------------------------------------------------------------ families


def _necklace_min(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    g = len(seq)
    variants = []
    for s in (seq, seq[::-1]):
        variants.extend(s[i:] + s[:i] for i in range(g))
    return min(variants)


@dataclass(frozen=True)
class SpiderSpec:
    legs: Partition

    def __post_init__(self):
        object.__setattr__(self, "legs", Partition(self.legs))
        if len(self.legs) < 3:
            raise ValueError("a spider needs at least three legs")

    @property
    def order(self) -> int:
        return self.legs.weight() + 1

    def build(self) -> Graph:
        return spider_graph(self.legs)

    def __str__(self) -> str:
        return f"spider{self.legs}"


@dataclass(frozen=True)
class CaterpillarSpec:
    leaf_numbers: tuple[int, ...]

    def __post_init__(self):
        f = tuple(int(x) for x in self.leaf_numbers)
        if len(f) < 2 or f[0] < 1 or f[-1] < 1 or min(f) < 0:
            raise ValueError(f"invalid caterpillar leaf numbers {f}")
        object.__setattr__(self, "leaf_numbers", min(f, f[::-1]))

    @property
    def order(self) -> int:
        return len(self.leaf_numbers) + sum(self.leaf_numbers)

    def build(self) -> Graph:
        f = self.leaf_numbers
        s = len(f)
        edges = [(i, i + 1) for i in range(s - 1)]
        nxt = s
        for i, k in enumerate(f):
            for _ in range(k):
                edges.append((i, nxt))
                nxt += 1
        return Graph(nxt, edges)

    def __str__(self) -> str:
        return "caterpillar(" + ",".join(map(str, self.leaf_numbers)) + ")"


@dataclass(frozen=True)
class SquidSpec:
    girth: int
    tentacles: Partition

    def __post_init__(self):
        object.__setattr__(self, "tentacles", Partition(self.tentacles))
        if self.girth < 3 or len(self.tentacles) < 1:
            raise ValueError("a squid needs a cycle of length >= 3 and at least one tentacle")

    @property
    def order(self) -> int:
        return self.girth + self.tentacles.weight()

    def build(self) -> Graph:
        g = self.girth
        edges = [(i, (i + 1) % g) for i in range(g)]
        nxt = g
        for length in self.tentacles:
            prev = 0
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return Graph(nxt, edges)

    def __str__(self) -> str:
        return f"squid(g={self.girth};{self.tentacles})"


@dataclass(frozen=True)
class CrabSpec:
    leaf_counts: tuple[int, ...]

    def __post_init__(self):
        f = tuple(int(x) for x in self.leaf_counts)
        if len(f) < 3 or min(f) < 0:
            raise ValueError(f"invalid crab leaf counts {f}")
        object.__setattr__(self, "leaf_counts", _necklace_min(f))

    @property
    def girth(self) -> int:
        return len(self.leaf_counts)

    @property
    def order(self) -> int:
        return self.girth + sum(self.leaf_counts)

    def build(self) -> Graph:
        g = self.girth
        edges = [(i, (i + 1) % g) for i in range(g)]
        nxt = g
        for i, k in enumerate(self.leaf_counts):
            for _ in range(k):
                edges.append((i, nxt))
                nxt += 1
        return Graph(nxt, edges)

    def __str__(self) -> str:
        return f"crab(g={self.girth};(" + ",".join(map(str, self.leaf_counts)) + "))"


def spider_graph(legs: Sequence[int]) -> Graph:
    """Legs of the given lengths glued at vertex 0; zero-length legs are ignored."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


@dataclass(frozen=True)
class GraphClass:
    connected: bool
    tree: bool
    unicyclic: bool
    spider: bool
    caterpillar: bool
    squid: bool
    crab: bool
    star: bool
    path: bool


def _is_caterpillar(t: Graph) -> bool:
    if t.n < 4:
        return False
    deg = t.degrees()
    spine = [v for v in range(t.n) if deg[v] > 1]
    if len(spine) < 2:
        return False
    inside = set(spine)
    spine_deg = [sum(1 for w in t.adj[v] if w in inside) for v in spine]
    # a tree's induced subgraph on non-leaves is connected, so a path iff max degree <= 2
    return max(spine_deg) <= 2


def classify(g: Graph) -> GraphClass:
    connected = is_connected(g)
    tree = is_tree(g)
    uni = is_unicyclic(g)
    deg = g.degrees()
    big = sum(1 for d in deg if d >= 3)
    spider = tree and big == 1
    star = tree and g.n >= 3 and max(deg) == g.n - 1
    path = tree and max(deg, default=0) <= 2
    caterpillar = tree and _is_caterpillar(g)
    squid = crab = False
    if uni:
        squid = big == 1
        ring = set(cycle_vertices(g))
        crab = all(deg[v] == 1 for v in range(g.n) if v not in ring)
    return GraphClass(connected, tree, uni, spider, caterpillar, squid, crab, star, path)


def spider_spec_of(g: Graph) -> SpiderSpec:
    if not classify(g).spider:
        raise ValueError("graph is not a spider")
    deg = g.degrees()
    torso = next(v for v in range(g.n) if deg[v] >= 3)
    legs = []
    for w in g.adj[torso]:
        length, prev, cur = 1, torso, w
        while deg[cur] == 2:
            prev, cur = cur, next(x for x in g.adj[cur] if x != prev)
            length += 1
        legs.append(length)
    return SpiderSpec(Partition(legs))


def caterpillar_spec_of(g: Graph) -> CaterpillarSpec:
    if not classify(g).caterpillar:
        raise ValueError("graph is not a caterpillar")
    deg = g.degrees()
    spine = {v for v in range(g.n) if deg[v] > 1}
    ends = [v for v in spine if sum(1 for w in g.adj[v] if w in spine) == 1]
    order = [min(ends)]
    while len(order) < len(spine):
        order.append(next(w for w in g.adj[order[-1]] if w in spine and w not in order[-2:]))
    return CaterpillarSpec(tuple(sum(1 for w in g.adj[v] if deg[w] == 1) for v in order))


def squid_spec_of(g: Graph) -> SquidSpec:
    if not classify(g).squid:
        raise ValueError("graph is not a squid")
    deg = g.degrees()
    ring = set(cycle_vertices(g))
    tentacles = []
    for leaf in (v for v in range(g.n) if deg[v] == 1):
        length, prev, cur = 0, -1, leaf
        while cur not in ring:
            prev, cur = cur, next(x for x in g.adj[cur] if x != prev)
            length += 1
        tentacles.append(length)
    return SquidSpec(len(ring), Partition(tentacles))


def crab_spec_of(g: Graph) -> CrabSpec:
    if not classify(g).crab:
        raise ValueError("graph is not a crab")
    deg = g.degrees()
    ring = cycle_vertices(g)
    return CrabSpec(tuple(deg[v] - 2 for v in ring))


def _compositions(total: int, parts: int, first_min: int = 0) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for x in range(first_min, total + 1):
        for rest in _compositions(total - x, parts - 1):
            yield (x,) + rest


def enumerate_spiders(n: int) -> Iterator[SpiderSpec]:
    for lam in sorted(partitions_of(n - 1), key=lambda p: (len(p), tuple(-x for x in p))):
        if len(lam) >= 3:
            yield SpiderSpec(lam)


def enumerate_caterpillars(n: int) -> Iterator[CaterpillarSpec]:
    seen = set()
    for spine in range(2, n - 1):
        for f in _compositions(n - spine, spine):
            if f[0] < 1 or f[-1] < 1:
                continue
            spec = CaterpillarSpec(f)
            if spec not in seen:
                seen.add(spec)
                yield spec


def enumerate_squids(n: int) -> Iterator[SquidSpec]:
    for g in range(3, n):
        for mu in sorted(partitions_of(n - g), key=lambda p: (len(p), tuple(-x for x in p))):
            yield SquidSpec(g, mu)


def enumerate_crabs(n: int) -> Iterator[CrabSpec]:
    seen = set()
    for g in range(3, n + 1):
        for f in _compositions(n - g, g):
            spec = CrabSpec(f)
            if spec not in seen:
                seen.add(spec)
                yield spec


FAMILIES = {
    "spiders": enumerate_spiders,
    "caterpillars": enumerate_caterpillars,
    "squids": enumerate_squids,
    "crabs": enumerate_crabs,
}


def enumerate_family(kind: str, n: int) -> Iterator:
    try:
        return FAMILIES[kind](n)
    except KeyError:
        raise ValueError(f"unknown family {kind!r}") from None
