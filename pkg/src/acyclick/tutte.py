"""Tutte polynomial of a multigraph by deletion-contraction.

Coefficients are exact Python integers (arbitrary precision, so overflow
cannot occur). At x=2, y=0 the polynomial counts acyclic orientations; at
x=1, y=0 it counts click classes; at x=1, y=1 it counts spanning trees of a
connected graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graphs import (
    Graph,
    classify_edges,
    component_subgraphs,
    contract_edge,
    delete_edge,
)


@dataclass(frozen=True)
class TuttePolynomial:
    """Sparse two-variable polynomial: (i, j) -> coefficient of x^i y^j."""

    coeffs: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self) -> None:
        cleaned = tuple(sorted(
            ((int(i), int(j)), int(c)) for (i, j), c in self.coeffs if c
        ))
        object.__setattr__(self, "coeffs", cleaned)
        if any(c < 0 for _, c in cleaned):
            raise GraphError("Tutte coefficients must be nonnegative")

    def coefficient(self, i: int, j: int) -> int:
        for (a, b), c in self.coeffs:
            if (a, b) == (i, j):
                return c
        return 0

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self.coeffs)

    def terms(self) -> tuple[tuple[int, int, int], ...]:
        """Sorted (i, j, coefficient) triples."""
        return tuple((i, j, c) for (i, j), c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), c in sorted(self.coeffs, key=lambda t: (-t[0][0], -t[0][1])):
            bits = [] if c == 1 and (i or j) else [str(c)]
            if i:
                bits.append("x" if i == 1 else f"x^{i}")
            if j:
                bits.append("y" if j == 1 else f"y^{j}")
            parts.append("*".join(bits))
        return " + ".join(parts)


_ONE = (((0, 0), 1),)


def _add(p: dict, q: dict) -> dict:
    out = dict(p)
    for key, c in q.items():
        out[key] = out.get(key, 0) + c
    return out


def _mul(p: dict, q: dict) -> dict:
    out: dict[tuple[int, int], int] = {}
    for (a, b), c in p.items():
        for (i, j), d in q.items():
            key = (a + i, b + j)
            out[key] = out.get(key, 0) + c * d
    return out


def _shift(p: dict, di: int, dj: int) -> dict:
    return {(i + di, j + dj): c for (i, j), c in p.items()}


def tutte(g: Graph, memo: dict | None = None) -> TuttePolynomial:
    """Tutte polynomial via deletion-contraction on the faithful multigraph.

    Loops peel off as y factors and bridges as x factors (a bridge is
    contracted); otherwise the first edge in sorted order is split into its
    deleted and contracted terms. Disconnected graphs multiply over
    components. A shared ``memo`` dict may be passed to reuse work.
    """
    if memo is None:
        memo = {}
    return TuttePolynomial(tuple(_tutte(g, memo).items()))


def _tutte(g: Graph, memo: dict) -> dict:
    if not g.edges and not g.loops:
        return dict(_ONE)
    key = (g.n, g.edges, g.mult, g.loops)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if g.loops:
        total = sum(c for _, c in g.loops)
        bare = Graph(g.n, g.edges, g.mult)
        val = _shift(_tutte(bare, memo), 0, total)
    else:
        comps = component_subgraphs(g)
        if len(comps) > 1:
            val = dict(_ONE)
            for sub, _ in comps:
                val = _mul(val, _tutte(sub, memo))
        else:
            kinds = classify_edges(g)
            try:
                b = kinds.index("bridge")
            except ValueError:
                b = -1
            if b >= 0:
                contracted, _ = contract_edge(g, b, simplify=False)
                val = _shift(_tutte(contracted, memo), 1, 0)
            else:
                deleted = delete_edge(g, 0)
                contracted, _ = contract_edge(g, 0, simplify=False)
                val = _add(_tutte(deleted, memo), _tutte(contracted, memo))
    memo[key] = val
    return val
