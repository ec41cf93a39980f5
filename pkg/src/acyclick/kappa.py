"""Click-equivalence machinery for acyclic orientations.

Two acyclic orientations are click-equivalent when a sequence of
source-to-sink clicks turns one into the other. This module computes the
classes both ways: exhaustively (breadth-first closure over clicks, the
oracle route) and structurally (deletion/contraction recursion, interval
analysis, and a complete signature of flow values over the canonical
fundamental cycle basis).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Literal, Sequence

from .errors import CapExceededError, ClickError, GraphError, OrientationError
from .graphs import (
    Graph,
    check_edge_ref,
    classify_edges,
    component_subgraphs,
    contract_edge,
    contract_vertices,
    delete_edge,
    fingerprint,
    is_connected,
    adjacency,
    simplified,
    spanning_structure,
)
from .orientations import (
    Orientation,
    _acyclic_mask,
    _click_mask,
    _is_source_mask,
    _sources_mask,
    apply_click_sequence,
    bits_of,
    directed_edge,
    is_acyclic,
    linear_extension_from,
    mask_of,
    nu,
    orientation_from_permutation,
    rotate_to_source,
    transport_bits,
)


@dataclass(frozen=True)
class NuSignature:
    """Flow values over the canonical fundamental cycle basis.

    One integer per basis cycle of ``spanning_structure``, in sorted
    non-tree-edge order. For a connected graph, two acyclic orientations
    are click-equivalent exactly when their signatures agree.
    """

    values: tuple[int, ...]
    graph_fingerprint: str


@dataclass(frozen=True)
class Interval:
    """Vertices on directed low-to-high paths across a fixed edge, with the
    induced relations; empty when the edge points high-to-low."""

    vertices: tuple[int, ...] = ()
    relations: tuple[tuple[int, int], ...] = ()

    @property
    def empty(self) -> bool:
        return not self.vertices


@dataclass(frozen=True)
class KappaClass:
    """A click-equivalence class, keyed by its signature.

    ``representative`` is the lexicographically minimal member in oracle
    mode (``size``/``members`` filled in); other constructors supply some
    member and leave those fields None.
    """

    graph: Graph
    representative: Orientation
    signature: NuSignature
    size: int | None = None
    members: tuple[Orientation, ...] | None = None


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not is_connected(g):
        raise GraphError("operation requires a connected graph")


def _require_acyclic(o: Orientation) -> None:
    if not is_acyclic(o):
        raise OrientationError("orientation must be acyclic")


def nu_signature(o: Orientation) -> NuSignature:
    """Signature of an acyclic orientation of a connected graph."""
    g = o.graph
    _require_connected(g)
    _require_acyclic(o)
    cycles = spanning_structure(g).cycles
    return NuSignature(tuple(nu(o, c) for c in cycles), fingerprint(g))


def same_kappa_class(o1: Orientation, o2: Orientation) -> bool:
    """Whether two acyclic orientations of one connected graph are
    click-equivalent, decided by signature equality."""
    if o1.graph != o2.graph:
        raise GraphError("orientations live on different graphs")
    return nu_signature(o1) == nu_signature(o2)


@lru_cache(maxsize=None)
def _class_closure(g: Graph, start: int) -> tuple[int, ...]:
    """All orientation masks click-reachable from ``start``, sorted.

    Click moves are invertible (finish the sweep of any linear extension),
    so forward reachability already yields the equivalence class.
    """
    seen = {start}
    stack = [start]
    while stack:
        mask = stack.pop()
        for v in _sources_mask(g, mask):
            nxt = _click_mask(g, mask, v)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return tuple(sorted(seen))


def kappa_classes_bfs(g: Graph, max_edges: int = 30) -> list[KappaClass]:
    """Partition all acyclic orientations into click classes (oracle route).

    Exhaustive: enumerates every direction pattern, then floods click
    moves. Classes come back sorted by their minimal bit pattern, each with
    full membership and size.
    """
    if not g.is_simple():
        raise GraphError("click classes are computed over simple graphs")
    _require_connected(g)
    if g.m > max_edges:
        raise CapExceededError(
            f"graph has {g.m} edges, enumeration cap is {max_edges}"
        )
    classes = []
    visited: set[int] = set()
    for mask in range(1 << g.m):
        if mask in visited or not _acyclic_mask(g, mask):
            continue
        members = _class_closure(g, mask)
        visited.update(members)
        rep = Orientation(g, bits_of(mask, g.m))
        classes.append(
            KappaClass(
                graph=g,
                representative=rep,
                signature=nu_signature(rep),
                size=len(members),
                members=tuple(Orientation(g, bits_of(x, g.m)) for x in members),
            )
        )
    return classes


def kappa_count(g: Graph, memo: dict | None = None) -> int:
    """Number of click classes, by memoized deletion-contraction.

    Bridges never change the count (the count is the product over the two
    sides); otherwise recurse on the first cycle-edge in sorted order,
    adding the deleted and the contracted (simplified) counts. Parallel
    edges collapse first; a loop leaves no acyclic orientation at all, so
    the count is 0. A shared ``memo`` dict may be passed to reuse work.
    """
    if g.loops:
        return 0
    if memo is None:
        memo = {}
    return _kappa(simplified(g), memo)


def _kappa(g: Graph, memo: dict) -> int:
    if not g.edges:
        return 1
    key = (g.n, g.edges)
    cached = memo.get(key)
    if cached is not None:
        return cached
    comps = component_subgraphs(g)
    if len(comps) > 1:
        val = prod(_kappa(sub, memo) for sub, _ in comps)
    else:
        kinds = classify_edges(g)
        bridges = [i for i, k in enumerate(kinds) if k == "bridge"]
        if bridges:
            stripped = g
            for i in reversed(bridges):
                stripped = delete_edge(stripped, i)
            val = _kappa(stripped, memo)
        else:
            deleted = delete_edge(g, 0)
            contracted, _ = contract_edge(g, 0, simplify=True)
            val = _kappa(deleted, memo) + _kappa(contracted, memo)
    memo[key] = val
    return val


def interval(o: Orientation, e: int) -> Interval:
    """Vertices on directed v-to-w paths for edge e = {v, w}, v < w.

    Nonempty exactly when the edge is oriented v -> w; the vertex set is
    then the forward-reachable set of v intersected with the
    backward-reachable set of w, with relations induced from ``o``.
    """
    g = o.graph
    check_edge_ref(g, e)
    _require_acyclic(o)
    if o.bits[e] != 0:
        return Interval()
    v, w = g.edges[e]
    fwd: list[list[int]] = [[] for _ in range(g.n + 1)]
    bwd: list[list[int]] = [[] for _ in range(g.n + 1)]
    for i in range(g.m):
        a, b = directed_edge(o, i)
        fwd[a].append(b)
        bwd[b].append(a)

    def reach(start: int, adj: list[list[int]]) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    vertices = reach(v, fwd) & reach(w, bwd)
    relations = tuple(
        directed_edge(o, i)
        for i in range(g.m)
        if g.edges[i][0] in vertices and g.edges[i][1] in vertices
    )
    return Interval(tuple(sorted(vertices)), relations)


def interval_of_class(o: Orientation, e: int) -> Interval:
    """Interval of the click class of ``o``: rotate ``v`` to a source first,
    then read the interval there. Independent of the chosen member."""
    g = o.graph
    check_edge_ref(g, e)
    _require_connected(g)
    v, _ = g.edges[e]
    rotated, _ = rotate_to_source(o, v)
    return interval(rotated, e)


def contract_interval(o: Orientation, iv: Interval) -> Orientation:
    """Collapse all interval vertices to one (the smallest label) and carry
    the orientation along; the result is acyclic."""
    if iv.empty:
        raise GraphError("cannot contract an empty interval")
    _require_acyclic(o)
    contracted, relabel = contract_vertices(o.graph, iv.vertices, simplify=True)
    return Orientation(contracted, transport_bits(o, contracted, relabel))


def normalize_click_sequence(o: Orientation, seq: Sequence[int],
                             e: int) -> tuple[int, ...]:
    """Reorder a legal click sequence so interval vertices run in blocks.

    Requires edge e = {v, w} oriented v -> w in ``o`` and ``seq`` legal from
    ``o``. The result applies the same clicks (same multiset), reaches the
    same orientation, and every vertex of the interval of ``o`` appears
    inside disjoint consecutive blocks: one complete block per full sweep
    of the interval (each ending at an occurrence of w), plus at most one
    trailing partial block when the input stops mid-sweep.

    The reordering only ever swaps clicks that commute at their moment of
    use, so legality is preserved step by step.
    """
    g = o.graph
    check_edge_ref(g, e)
    _require_acyclic(o)
    if o.bits[e] != 0:
        v, w = g.edges[e]
        raise OrientationError(
            f"edge {v}-{w} must be oriented {v} -> {w} before normalizing"
        )
    final = apply_click_sequence(o, seq)  # validates; reports first offender
    inside = set(interval(o, e).vertices)

    positions: dict[int, list[int]] = {}
    for idx, x in enumerate(seq):
        positions.setdefault(int(x), []).append(idx)
    next_pos = {x: 0 for x in positions}
    rem = Counter(int(x) for x in seq)
    fired: Counter[int] = Counter()
    mask = mask_of(o.bits, g.m)
    out: list[int] = []

    def ready(x: int) -> bool:
        return rem[x] > 0 and _is_source_mask(g, mask, x)

    def emit(x: int) -> None:
        nonlocal mask
        out.append(x)
        rem[x] -= 1
        fired[x] += 1
        next_pos[x] += 1
        mask = _click_mask(g, mask, x)

    def pick(candidates: list[int]) -> int | None:
        best = None
        for x in candidates:
            if ready(x):
                pos = positions[x][next_pos[x]]
                if best is None or pos < best[0]:
                    best = (pos, x)
        return None if best is None else best[1]

    outside = [x for x in positions if x not in inside]
    interior = [x for x in positions if x in inside]
    blocks_done = 0
    while sum(rem.values()):
        x = pick(outside)
        if x is not None:
            emit(x)
            continue
        # run one sweep of the interval as a contiguous block
        round_no = blocks_done
        progressed = False
        while True:
            z = pick([z for z in interior if fired[z] == round_no])
            if z is None:
                break
            emit(z)
            progressed = True
        blocks_done += 1
        if not progressed:
            raise ClickError("click sequence cannot be reordered")  # unreachable
    assert mask == mask_of(final.bits, g.m), "reordering changed the endpoint"
    return tuple(out)


ThetaKind = Literal["deleted", "contracted"]


@dataclass(frozen=True)
class ThetaImage:
    """Image of a click class across deletion/contraction of a cycle-edge."""

    kind: ThetaKind
    kappa_class: KappaClass


def theta(o: Orientation, e: int) -> ThetaImage:
    """Map the click class of ``o`` to a class of the deleted or contracted
    graph at cycle-edge e = {v, w}.

    When the class interval is exactly {v, w}: pick the member whose
    extension starts v, w, contract the edge, and return the resulting
    class of the contracted graph. Otherwise restrict a member with the
    edge oriented v -> w to the deleted graph. The returned class is keyed
    by its signature; this map is a bijection onto the disjoint union of
    the two target class sets.
    """
    g = o.graph
    check_edge_ref(g, e)
    _require_connected(g)
    if not g.is_simple():
        raise GraphError("click classes are computed over simple graphs")
    if classify_edges(g)[e] == "bridge":
        raise GraphError("the chosen edge is a bridge; a cycle-edge is required")
    v, w = g.edges[e]
    rotated, _ = rotate_to_source(o, v)
    iv = interval(rotated, e)
    if iv.vertices == (v, w):
        contracted, relabel = contract_edge(g, e, simplify=True)
        image = Orientation(
            contracted, transport_bits(rotated, contracted, relabel)
        )
        return ThetaImage(
            "contracted",
            KappaClass(contracted, image, nu_signature(image)),
        )
    deleted = delete_edge(g, e)
    image = Orientation(deleted, rotated.bits[:e] + rotated.bits[e + 1:])
    return ThetaImage("deleted", KappaClass(deleted, image, nu_signature(image)))


def _fixed_vw_path(g: Graph, v: int, w: int) -> tuple[int, ...]:
    """Deterministic simple v-w path: breadth-first shortest path with
    neighbors scanned in ascending order."""
    adj = adjacency(g)
    parent = {v: 0}
    queue = [v]
    while queue:
        frontier = []
        for x in queue:
            for y in adj[x]:
                if y not in parent:
                    parent[y] = x
                    frontier.append(y)
        if w in parent:
            break
        queue = frontier
    if w not in parent:
        raise GraphError(f"no path between {v} and {w}")
    path = [w]
    while path[-1] != v:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def _has_directed_path(g: Graph, mask: int, src: int, dst: int) -> bool:
    m = g.m
    out: list[list[int]] = [[] for _ in range(g.n + 1)]
    for i, (u, v) in enumerate(g.edges):
        if (mask >> (m - 1 - i)) & 1:
            u, v = v, u
        out[u].append(v)
    seen = {src}
    stack = [src]
    while stack:
        x = stack.pop()
        if x == dst:
            return True
        for y in out[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def theta_inverse(g: Graph, e: int, image: ThetaImage) -> KappaClass:
    """The unique preimage class of ``image`` under ``theta`` at edge ``e``.

    Contracted side: rotate the merged vertex to a source, read off an
    extension starting there, and expand that vertex to v, w at the front.
    Deleted side: prefer a member with a directed v-to-w path (insert the
    edge as v -> w); otherwise take the member maximizing the flow value
    along a fixed v-w path and insert the edge as w -> v. The member search
    floods the target class, so this stays a desk-scale operation.
    """
    check_edge_ref(g, e)
    _require_connected(g)
    if classify_edges(g)[e] == "bridge":
        raise GraphError("the chosen edge is a bridge; a cycle-edge is required")
    v, w = g.edges[e]
    target = image.kappa_class
    if image.kind == "contracted":
        expected, relabel = contract_edge(g, e, simplify=True)
        if target.graph != expected:
            raise GraphError("inconsistent target graph for the contracted side")
        merged = relabel[v]
        rotated, _ = rotate_to_source(target.representative, merged)
        ext = linear_extension_from(rotated, merged)
        back = {new: old for old, new in relabel.items() if old not in (v, w)}
        pi = (v, w) + tuple(back[x] for x in ext[1:])
        lifted = orientation_from_permutation(g, pi)
        return KappaClass(g, lifted, nu_signature(lifted))
    expected = delete_edge(g, e)
    if target.graph != expected:
        raise GraphError("inconsistent target graph for the deleted side")
    g2 = target.graph
    rep_mask = mask_of(target.representative.bits, g2.m)
    members = _class_closure(g2, rep_mask)
    with_path = [x for x in members if _has_directed_path(g2, x, v, w)]
    if with_path:
        chosen = min(with_path)
        bit = 0
    else:
        path = _fixed_vw_path(g2, v, w)
        scored = [
            (nu(Orientation(g2, bits_of(x, g2.m)), path), -x) for x in members
        ]
        best = max(range(len(members)), key=lambda i: scored[i])
        chosen = members[best]
        bit = 1
    bits2 = bits_of(chosen, g2.m)
    lifted = Orientation(g, bits2[:e] + (bit,) + bits2[e:])
    return KappaClass(g, lifted, nu_signature(lifted))
