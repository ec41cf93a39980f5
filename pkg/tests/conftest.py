import itertools

import pytest
from hypothesis import settings, strategies as st

from acyclick import Graph, make_graph
from acyclick.graphs import is_connected

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def complete_graph(n: int) -> Graph:
    return make_graph(n, itertools.combinations(range(1, n + 1), 2))


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(1, n)])


# -- independent oracles ---------------------------------------------------

def digraph_has_cycle(n: int, arcs) -> bool:
    """Plain recursive three-color DFS, independent of the library's
    topological-sort route."""
    out = {x: [] for x in range(1, n + 1)}
    for a, b in arcs:
        out[a].append(b)
    color = {x: 0 for x in range(1, n + 1)}

    def visit(x):
        color[x] = 1
        for y in out[x]:
            if color[y] == 1:
                return True
            if color[y] == 0 and visit(y):
                return True
        color[x] = 2
        return False

    return any(color[x] == 0 and visit(x) for x in range(1, n + 1))


def count_spanning_trees_bruteforce(g: Graph) -> int:
    """Choose n-1 edge units in every way and count the acyclic connected
    ones. Parallel units count separately."""
    units = []
    for (u, v), k in zip(g.edges, g.mult):
        units.extend([(u, v)] * k)
    total = 0
    for combo in itertools.combinations(range(len(units)), g.n - 1):
        parent = list(range(g.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i in combo:
            u, v = units[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            total += 1
    return total


# -- strategies ------------------------------------------------------------

@st.composite
def graphs(draw, min_n=1, max_n=5, connected=False, min_edges=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = [p for p in pairs if draw(st.booleans())]
    if len(chosen) < min_edges:
        chosen = pairs[:min_edges]
    g = make_graph(n, chosen)
    if connected and not is_connected(g):
        extra = [(i, i + 1) for i in range(1, n)]
        g = make_graph(n, sorted(set(chosen) | set(extra)))
    return g


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(list(range(1, n + 1)))))


@st.composite
def oriented_graphs(draw, min_n=1, max_n=5, connected=False, min_edges=0):
    """A graph together with an acyclic orientation induced by a random
    vertex order."""
    from acyclick import orientation_from_permutation

    g = draw(graphs(min_n=min_n, max_n=max_n, connected=connected,
                    min_edges=min_edges))
    pi = draw(st.permutations(list(range(1, g.n + 1))))
    return g, orientation_from_permutation(g, tuple(pi))


@pytest.fixture(scope="session")
def k3():
    return complete_graph(3)


@pytest.fixture(scope="session")
def k4():
    return complete_graph(4)
