"""Edge orientations of simple graphs and source-to-sink click dynamics.

An orientation assigns one direction bit per edge of the sorted edge list:
bit 0 directs the edge from its lower to its higher endpoint, bit 1 the
other way. The textual form is the bit string read in edge-list order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterator, Literal, Sequence

from .errors import CapExceededError, ClickError, GraphError, OrientationError
from .graphs import (
    Graph,
    check_edge_ref,
    classify_edges,
    component_subgraphs,
    contract_edge,
    delete_edge,
    edge_index,
    simplified,
)

ClickSequence = tuple[int, ...]


@dataclass(frozen=True)
class Orientation:
    """One direction flag per edge of a simple graph."""

    graph: Graph
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.graph.is_simple():
            raise OrientationError(
                "orientations are defined over simple graphs "
                "(no loops, all multiplicities 1)"
            )
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if len(bits) != self.graph.m:
            raise OrientationError(
                f"expected {self.graph.m} direction bits, got {len(bits)}"
            )
        if any(b not in (0, 1) for b in bits):
            raise OrientationError("direction bits must be 0 or 1")


def orientation_from_bits(g: Graph, text: str) -> Orientation:
    """Parse the textual bit-string form."""
    if len(text) != g.m or any(ch not in "01" for ch in text):
        raise OrientationError(
            f"orientation text must be {g.m} characters over 0/1, got {text!r}"
        )
    return Orientation(g, tuple(int(ch) for ch in text))


def bits_text(o: Orientation) -> str:
    return "".join(str(b) for b in o.bits)


def directed_edge(o: Orientation, e: int) -> tuple[int, int]:
    """The edge ``e`` as its directed pair (tail, head)."""
    u, v = o.graph.edges[e]
    return (u, v) if o.bits[e] == 0 else (v, u)


def directed_edges(o: Orientation) -> tuple[tuple[int, int], ...]:
    return tuple(directed_edge(o, e) for e in range(o.graph.m))


# Internal mask form: edge i maps to bit position m-1-i, so ascending
# integers agree with ascending bit-string text.

@lru_cache(maxsize=None)
def _tables(g: Graph):
    m = g.m
    incident: list[list[int]] = [[] for _ in range(g.n + 1)]
    inc_mask = [0] * (g.n + 1)
    high_mask = [0] * (g.n + 1)
    for i, (u, v) in enumerate(g.edges):
        pos = 1 << (m - 1 - i)
        incident[u].append(i)
        incident[v].append(i)
        inc_mask[u] |= pos
        inc_mask[v] |= pos
        high_mask[v] |= pos
    return tuple(map(tuple, incident)), tuple(inc_mask), tuple(high_mask)


def mask_of(bits: Sequence[int], m: int) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | b
    return out


def bits_of(mask: int, m: int) -> tuple[int, ...]:
    return tuple((mask >> (m - 1 - i)) & 1 for i in range(m))


def _is_source_mask(g: Graph, mask: int, v: int) -> bool:
    _, inc, high = _tables(g)
    return mask & inc[v] == high[v]


def _sources_mask(g: Graph, mask: int) -> list[int]:
    _, inc, high = _tables(g)
    return [v for v in range(1, g.n + 1) if mask & inc[v] == high[v]]


def _click_mask(g: Graph, mask: int, v: int) -> int:
    _, inc, _ = _tables(g)
    return mask ^ inc[v]


def _acyclic_mask(g: Graph, mask: int) -> bool:
    m = g.m
    indeg = [0] * (g.n + 1)
    out_adj: list[list[int]] = [[] for _ in range(g.n + 1)]
    for i, (u, v) in enumerate(g.edges):
        if (mask >> (m - 1 - i)) & 1:
            u, v = v, u
        out_adj[u].append(v)
        indeg[v] += 1
    queue = [x for x in range(1, g.n + 1) if indeg[x] == 0]
    removed = 0
    while queue:
        x = queue.pop()
        removed += 1
        for y in out_adj[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return removed == g.n


def out_adjacency(o: Orientation) -> tuple[tuple[int, ...], ...]:
    """Directed successor lists, indexed 1..n."""
    out: list[list[int]] = [[] for _ in range(o.graph.n + 1)]
    for e in range(o.graph.m):
        a, b = directed_edge(o, e)
        out[a].append(b)
    return tuple(tuple(sorted(x)) for x in out)


def orientation_from_permutation(g: Graph, pi: Sequence[int]) -> Orientation:
    """Orient every edge from its earlier endpoint in ``pi`` to its later one.

    The result is acyclic and ``pi`` is one of its linear extensions.
    """
    order = tuple(int(x) for x in pi)
    if sorted(order) != list(range(1, g.n + 1)):
        raise OrientationError(f"{order} is not a permutation of 1..{g.n}")
    position = {x: i for i, x in enumerate(order)}
    bits = tuple(
        0 if position[u] < position[v] else 1 for u, v in g.edges
    )
    return Orientation(g, bits)


def is_acyclic(o: Orientation) -> bool:
    """True when the induced digraph has no directed cycle."""
    return _acyclic_mask(o.graph, mask_of(o.bits, o.graph.m))


def sources(o: Orientation) -> tuple[int, ...]:
    """Vertices of in-degree zero; isolated vertices count."""
    g = o.graph
    mask = mask_of(o.bits, g.m)
    return tuple(_sources_mask(g, mask))


def sinks(o: Orientation) -> tuple[int, ...]:
    """Vertices of out-degree zero; isolated vertices count."""
    g = o.graph
    _, inc, high = _tables(g)
    mask = mask_of(o.bits, g.m)
    return tuple(
        v for v in range(1, g.n + 1) if mask & inc[v] == inc[v] ^ high[v]
    )


def click(o: Orientation, v: int) -> Orientation:
    """Reverse every edge at the source ``v``, turning it into a sink."""
    g = o.graph
    if not 1 <= v <= g.n:
        raise ClickError(f"vertex {v} out of range")
    mask = mask_of(o.bits, g.m)
    if not _is_source_mask(g, mask, v):
        raise ClickError(f"vertex {v} is not a source")
    return Orientation(g, bits_of(_click_mask(g, mask, v), g.m))


def apply_click_sequence(o: Orientation, seq: Sequence[int]) -> Orientation:
    """Apply clicks left to right; reports the first illegal position."""
    g = o.graph
    mask = mask_of(o.bits, g.m)
    for idx, v in enumerate(seq):
        if not (1 <= v <= g.n and _is_source_mask(g, mask, v)):
            raise ClickError(
                f"click {v} at position {idx} is not a source", position=idx
            )
        mask = _click_mask(g, mask, v)
    return Orientation(g, bits_of(mask, g.m))


def linear_extension(o: Orientation) -> tuple[int, ...]:
    """Deterministic linear extension: repeatedly remove the smallest-label
    current source."""
    return linear_extension_from(o, None)


def linear_extension_from(o: Orientation, first: int | None) -> tuple[int, ...]:
    """Linear extension forced to start at source ``first`` (when given),
    then following the smallest-label-source rule."""
    g = o.graph
    indeg = [0] * (g.n + 1)
    out_adj: list[list[int]] = [[] for _ in range(g.n + 1)]
    for e in range(g.m):
        a, b = directed_edge(o, e)
        out_adj[a].append(b)
        indeg[b] += 1
    heap = [x for x in range(1, g.n + 1) if indeg[x] == 0]
    heapq.heapify(heap)
    order = []
    if first is not None:
        if indeg[first] != 0:
            raise OrientationError(f"vertex {first} is not a source")
        heap.remove(first)
        heapq.heapify(heap)
        order.append(first)
        for y in out_adj[first]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, y)
    while heap:
        x = heapq.heappop(heap)
        order.append(x)
        for y in out_adj[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, y)
    if len(order) != g.n:
        raise OrientationError("orientation is not acyclic")
    return tuple(order)


def rotate_to_source(o: Orientation, v: int) -> tuple[Orientation, ClickSequence]:
    """A click-equivalent orientation with ``v`` as a source.

    Takes the deterministic linear extension, rotates it to start at ``v``
    and clicks the skipped prefix; returns the result and that prefix.
    """
    if not 1 <= v <= o.graph.n:
        raise OrientationError(f"vertex {v} out of range")
    ext = linear_extension(o)
    k = ext.index(v)
    prefix = ext[:k]
    return apply_click_sequence(o, prefix), prefix


def nu(o: Orientation, path: Sequence[int]) -> int:
    """Forward-minus-backward edge count along a walk.

    Each consecutive pair of ``path`` must be an edge; the walk may be open
    or closed. Traversing a step along its orientation counts +1, against
    it -1.
    """
    g = o.graph
    walk = [int(x) for x in path]
    if len(walk) < 2:
        raise OrientationError("walk needs at least two vertices")
    total = 0
    for x, y in zip(walk, walk[1:]):
        e = edge_index(g, x, y)  # GraphError on a non-edge step
        total += 1 if directed_edge(o, e) == (x, y) else -1
    return total


def enumerate_acyclic(g: Graph, max_edges: int = 30) -> Iterator[Orientation]:
    """Every acyclic orientation exactly once, in ascending bit-string order.

    Brute force over all 2^m direction patterns; refuses graphs with more
    than ``max_edges`` edges or with multiplicities.
    """
    if not g.is_simple():
        raise GraphError("enumeration needs a simple graph")
    if g.m > max_edges:
        raise CapExceededError(
            f"graph has {g.m} edges, enumeration cap is {max_edges}"
        )

    def gen() -> Iterator[Orientation]:
        for mask in range(1 << g.m):
            if _acyclic_mask(g, mask):
                yield Orientation(g, bits_of(mask, g.m))

    return gen()


def count_acyclic(g: Graph, memo: dict | None = None) -> int:
    """Number of acyclic orientations, by memoized deletion-contraction.

    Works per connected component (counts multiply); every bridge doubles
    the count; otherwise recurse on the first cycle-edge. Parallel edges
    collapse first (they must share a direction), and any loop forces 0.
    A caller may pass a shared ``memo`` dict to reuse work across calls.
    """
    if g.loops:
        return 0
    if memo is None:
        memo = {}
    return _alpha(simplified(g), memo)


def _alpha(g: Graph, memo: dict) -> int:
    if not g.edges:
        return 1
    key = (g.n, g.edges)
    cached = memo.get(key)
    if cached is not None:
        return cached
    comps = component_subgraphs(g)
    if len(comps) > 1:
        val = prod(_alpha(sub, memo) for sub, _ in comps)
    else:
        kinds = classify_edges(g)
        bridges = [i for i, k in enumerate(kinds) if k == "bridge"]
        if bridges:
            stripped = g
            for i in reversed(bridges):
                stripped = delete_edge(stripped, i)
            val = (1 << len(bridges)) * _alpha(stripped, memo)
        else:
            deleted = delete_edge(g, 0)
            contracted, _ = contract_edge(g, 0, simplify=True)
            val = _alpha(deleted, memo) + _alpha(contracted, memo)
    memo[key] = val
    return val


BetaKind = Literal["deleted", "contracted"]


@dataclass(frozen=True)
class BetaImage:
    """Image of one acyclic orientation under the per-orientation
    deletion/contraction split at a fixed edge."""

    kind: BetaKind
    orientation: Orientation


def transport_bits(o: Orientation, target: Graph,
                   relabel: dict[int, int]) -> tuple[int, ...]:
    """Push orientation bits through a vertex relabeling onto ``target``.

    Edges whose endpoints merge are dropped; parallel classes that collapse
    must agree in direction or the transport fails.
    """
    out: list[int | None] = [None] * target.m
    for e in range(o.graph.m):
        a, b = directed_edge(o, e)
        ra, rb = relabel[a], relabel[b]
        if ra == rb:
            continue
        j = edge_index(target, ra, rb)
        bit = 0 if ra < rb else 1
        if out[j] is None:
            out[j] = bit
        elif out[j] != bit:
            raise OrientationError(
                "orientation does not descend through this contraction"
            )
    if any(bit is None for bit in out):
        raise OrientationError("target graph has edges with no preimage")
    return tuple(out)  # type: ignore[arg-type]


def beta(o: Orientation, e: int) -> BetaImage:
    """Split an acyclic orientation across deletion/contraction of edge ``e``.

    With the edge written (v, w), v < w: when reversing ``e`` breaks
    acyclicity, or when the edge points v -> w, the image is the restriction
    to the deleted graph; otherwise it is the induced orientation of the
    contracted (simplified) graph.
    """
    g = o.graph
    check_edge_ref(g, e)
    if not is_acyclic(o):
        raise OrientationError("orientation must be acyclic")
    mask = mask_of(o.bits, g.m)
    flipped = mask ^ (1 << (g.m - 1 - e))
    if not _acyclic_mask(g, flipped) or o.bits[e] == 0:
        deleted = delete_edge(g, e)
        bits = o.bits[:e] + o.bits[e + 1:]
        return BetaImage("deleted", Orientation(deleted, bits))
    contracted, relabel = contract_edge(g, e, simplify=True)
    return BetaImage(
        "contracted", Orientation(contracted, transport_bits(o, contracted, relabel))
    )
