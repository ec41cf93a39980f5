"""Labeled undirected multigraphs with a deterministic edge order.

Vertices carry labels 1..n. Parallel edges are stored as per-pair
multiplicities on a strictly sorted list of endpoint pairs, and loops are
tracked separately so the pair list itself stays loop-free. Everything is
immutable; operations return new values.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal

from .errors import GraphError, GraphParseError

EdgeKind = Literal["bridge", "cycle-edge"]


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on vertex labels 1..n.

    ``edges`` is strictly sorted lexicographically with every pair (u, v)
    satisfying u < v; ``mult`` holds one positive multiplicity per pair and
    defaults to all ones; ``loops`` holds (vertex, count) pairs sorted by
    vertex.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    mult: tuple[int, ...] = ()
    loops: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        mult = tuple(int(k) for k in self.mult) if self.mult else (1,) * len(edges)
        loops = tuple((int(x), int(c)) for x, c in self.loops)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "loops", loops)
        if len(mult) != len(edges):
            raise GraphError("multiplicity list length must match edge list")
        prev = (0, 0)
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop {u}-{v} not allowed in the edge list")
            if not (1 <= u < v <= self.n):
                raise GraphError(f"edge {u}-{v} out of range for n={self.n}")
            if (u, v) <= prev:
                raise GraphError("edge list must be strictly sorted, no duplicates")
            prev = (u, v)
        if any(k < 1 for k in mult):
            raise GraphError("multiplicities must be positive")
        prev_x = 0
        for x, c in loops:
            if not 1 <= x <= self.n:
                raise GraphError(f"loop vertex {x} out of range")
            if x <= prev_x:
                raise GraphError("loop list must be strictly sorted by vertex")
            if c < 1:
                raise GraphError("loop counts must be positive")
            prev_x = x

    @property
    def m(self) -> int:
        """Number of distinct endpoint pairs (multiplicity not counted)."""
        return len(self.edges)

    def edge_units(self) -> int:
        """Number of edges counted with multiplicity, loops excluded."""
        return sum(self.mult)

    def is_simple(self) -> bool:
        return not self.loops and all(k == 1 for k in self.mult)


def make_graph(n: int, pairs: Iterable[tuple[int, int]],
               loops: Iterable[int] = ()) -> Graph:
    """Build a Graph from unordered endpoint pairs.

    Pairs are normalized to u < v and repeated pairs accumulate
    multiplicity. ``loops`` lists loop endpoints, one entry per loop.
    """
    counts: Counter[tuple[int, int]] = Counter()
    for u, v in pairs:
        if u == v:
            raise GraphError(f"loop {u}-{v} must be passed via the loops argument")
        counts[(min(u, v), max(u, v))] += 1
    loop_counts = Counter(loops)
    edges = tuple(sorted(counts))
    return Graph(
        n,
        edges,
        tuple(counts[e] for e in edges),
        tuple(sorted(loop_counts.items())),
    )


def parse_graph(text: str) -> Graph:
    """Parse graph file text.

    Format: optional ``#`` comment lines, a header line ``n m``, then m
    whitespace-separated lines ``u v`` with 1-based labels. A repeated pair
    increments that edge's multiplicity. LF and CRLF both accepted.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    if not lines:
        raise GraphParseError("no data lines in graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphParseError(f"non-integer header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphParseError("header counts must be nonnegative")
    if len(lines) - 1 != m:
        raise GraphParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    pairs = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer edge line {line!r}") from None
        if u == v:
            raise GraphParseError(f"loop edge {u} {v} not allowed")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"edge {u} {v} out of range for n={n}")
        pairs.append((u, v))
    return make_graph(n, pairs)


def fingerprint(g: Graph) -> str:
    """Short stable digest of the exact labeled edge data."""
    text = f"{g.n}|" + ";".join(
        f"{u},{v},{k}" for (u, v), k in zip(g.edges, g.mult)
    ) + "|" + ";".join(f"{x}:{c}" for x, c in g.loops)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def edge_index(g: Graph, u: int, v: int) -> int:
    """Index of edge {u, v} in the sorted edge list."""
    pair = (min(u, v), max(u, v))
    lo, hi = 0, g.m
    while lo < hi:
        mid = (lo + hi) // 2
        if g.edges[mid] < pair:
            lo = mid + 1
        else:
            hi = mid
    if lo < g.m and g.edges[lo] == pair:
        return lo
    raise GraphError(f"no edge {pair[0]}-{pair[1]} in graph")


def check_edge_ref(g: Graph, e: int) -> None:
    if not isinstance(e, int) or not 0 <= e < g.m:
        raise GraphError(f"edge index {e!r} out of range for m={g.m}")


@lru_cache(maxsize=None)
def adjacency(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Sorted neighbor lists, indexed 1..n (slot 0 unused). Parallel edges
    collapse; loops are excluded."""
    nbrs: list[list[int]] = [[] for _ in range(g.n + 1)]
    for u, v in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return tuple(tuple(sorted(b)) for b in nbrs)


def simplified(g: Graph) -> Graph:
    """Underlying simple graph: multiplicities collapse to 1, loops drop."""
    return Graph(g.n, g.edges)


def delete_edge(g: Graph, e: int) -> Graph:
    """Remove one unit of multiplicity of edge ``e``; same vertex set."""
    check_edge_ref(g, e)
    if g.mult[e] > 1:
        mult = g.mult[:e] + (g.mult[e] - 1,) + g.mult[e + 1:]
        return Graph(g.n, g.edges, mult, g.loops)
    return Graph(g.n, g.edges[:e] + g.edges[e + 1:],
                 g.mult[:e] + g.mult[e + 1:], g.loops)


def contract_vertices(g: Graph, vertices: Iterable[int],
                      simplify: bool = True) -> tuple[Graph, dict[int, int]]:
    """Merge a vertex set into its smallest member and compact labels.

    Returns the contracted graph and the old->new relabeling map. Edges
    internal to the set become loops at the merged vertex (dropped when
    ``simplify`` is true, along with all loops, and parallel classes
    collapse to multiplicity 1).
    """
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("cannot contract an empty vertex set")
    if vs[0] < 1 or vs[-1] > g.n:
        raise GraphError(f"vertex set {vs} out of range for n={g.n}")
    target = vs[0]
    removed = set(vs[1:])
    relabel: dict[int, int] = {}
    shift = 0
    for x in range(1, g.n + 1):
        if x in removed:
            relabel[x] = target
            shift += 1
        else:
            relabel[x] = x - shift
    # target keeps its own (possibly shifted) label; removed members map there
    for x in removed:
        relabel[x] = relabel[target]
    edge_units: Counter[tuple[int, int]] = Counter()
    loop_units: Counter[int] = Counter()
    for (u, v), k in zip(g.edges, g.mult):
        ru, rv = relabel[u], relabel[v]
        if ru == rv:
            loop_units[ru] += k
        else:
            edge_units[(min(ru, rv), max(ru, rv))] += k
    for x, c in g.loops:
        loop_units[relabel[x]] += c
    new_edges = tuple(sorted(edge_units))
    if simplify:
        new = Graph(g.n - len(removed), new_edges)
    else:
        new = Graph(
            g.n - len(removed),
            new_edges,
            tuple(edge_units[e] for e in new_edges),
            tuple(sorted(loop_units.items())),
        )
    return new, relabel


def contract_edge(g: Graph, e: int,
                  simplify: bool = True) -> tuple[Graph, dict[int, int]]:
    """Contract edge ``e``: one multiplicity unit is consumed, the endpoints
    merge into the smaller label, labels above the larger endpoint shift
    down by one. Remaining parallel units of ``e`` become loops.

    Returns the contracted graph plus the old->new relabeling map.
    """
    check_edge_ref(g, e)
    u, v = g.edges[e]
    return contract_vertices(delete_edge(g, e), (u, v), simplify=simplify)


def classify_edges(g: Graph) -> tuple[EdgeKind, ...]:
    """Tag each edge as ``bridge`` or ``cycle-edge``.

    A pair with multiplicity >= 2 is never a bridge. Bridges are found by a
    depth-first low-link pass over the underlying simple graph.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n + 1)]
    for i, (u, v) in enumerate(g.edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    disc = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    is_bridge = [False] * g.m
    timer = 1
    for root in range(1, g.n + 1):
        if disc[root]:
            continue
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            x, via, ptr = stack[-1]
            if ptr < len(adj[x]):
                stack[-1] = (x, via, ptr + 1)
                y, ei = adj[x][ptr]
                if ei == via:
                    continue
                if disc[y]:
                    low[x] = min(low[x], disc[y])
                else:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, ei, 0))
            else:
                stack.pop()
                if via >= 0:
                    if low[x] > disc[g.edges[via][0] if g.edges[via][1] == x
                                     else g.edges[via][1]]:
                        is_bridge[via] = True
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[x])
    return tuple(
        "bridge" if is_bridge[i] and g.mult[i] == 1 else "cycle-edge"
        for i in range(g.m)
    )


@dataclass(frozen=True)
class SpanningStructure:
    """Deterministic spanning forest data for a connected graph.

    ``tree_edges`` is the sorted depth-first tree; ``chords`` lists the
    non-tree edge units in sorted order, and ``cycles`` holds one closed
    walk per chord: for chord {a, b} with a < b the walk runs a, ..., b, a
    along the tree path and closes over the chord.
    """

    tree_edges: tuple[tuple[int, int], ...]
    chords: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def spanning_structure(g: Graph) -> SpanningStructure:
    """Depth-first spanning tree rooted at vertex 1 (neighbors in ascending
    label order) plus the fundamental cycle of every non-tree edge unit.

    Raises GraphError when the graph is disconnected.
    """
    if g.n == 0:
        raise GraphError("spanning structure needs at least one vertex")
    adj = adjacency(g)
    parent = {1: 0}
    depth = {1: 0}
    tree: set[tuple[int, int]] = set()
    stack = [(1, iter(adj[1]))]
    while stack:
        x, it = stack[-1]
        advanced = False
        for y in it:
            if y not in parent:
                parent[y] = x
                depth[y] = depth[x] + 1
                tree.add((min(x, y), max(x, y)))
                stack.append((y, iter(adj[y])))
                advanced = True
                break
        if not advanced:
            stack.pop()
    if len(parent) != g.n:
        raise GraphError("graph is disconnected")

    def tree_path(a: int, b: int) -> list[int]:
        up_a, up_b = [a], [b]
        x, y = a, b
        while depth[x] > depth[y]:
            x = parent[x]
            up_a.append(x)
        while depth[y] > depth[x]:
            y = parent[y]
            up_b.append(y)
        while x != y:
            x, y = parent[x], parent[y]
            up_a.append(x)
            up_b.append(y)
        return up_a + up_b[-2::-1]

    chords: list[tuple[int, int]] = []
    cycles: list[tuple[int, ...]] = []
    for (u, v), k in zip(g.edges, g.mult):
        extra = k - 1 if (u, v) in tree else k
        for _ in range(extra):
            chords.append((u, v))
            if (u, v) in tree:
                cycles.append((u, v, u))
            else:
                cycles.append(tuple(tree_path(u, v)) + (u,))
    return SpanningStructure(tuple(sorted(tree)), tuple(chords), tuple(cycles))


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of the connected components, ordered by minimum label."""
    adj = adjacency(g)
    seen = [False] * (g.n + 1)
    comps = []
    for start in range(1, g.n + 1):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        comp = []
        while queue:
            x = queue.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def component_subgraphs(g: Graph) -> list[tuple[Graph, dict[int, int]]]:
    """Induced subgraph of each component, relabeled 1..k order-preservingly.

    Returns (subgraph, old->new map) pairs in component order.
    """
    out = []
    for comp in connected_components(g):
        relabel = {x: i + 1 for i, x in enumerate(comp)}
        members = set(comp)
        edges = []
        mult = []
        for (u, v), k in zip(g.edges, g.mult):
            if u in members:
                edges.append((relabel[u], relabel[v]))
                mult.append(k)
        loops = tuple((relabel[x], c) for x, c in g.loops if x in members)
        out.append((Graph(len(comp), tuple(edges), tuple(mult), loops), relabel))
    return out
