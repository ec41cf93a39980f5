"""Cross-validation harness over generated graph corpora.

Checks that the independent computation routes agree with each other:
exhaustive class enumeration, the deletion-contraction recursions, the
Tutte evaluations, the class bijection across a cycle-edge, and the
signature invariant. Used by the CLI ``selftest`` subcommand and by the
acceptance test suite.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .graphs import Graph, classify_edges, contract_edge, delete_edge, is_connected, make_graph
from .kappa import kappa_classes_bfs, kappa_count, nu_signature, theta, theta_inverse
from .orientations import beta, bits_text, count_acyclic, enumerate_acyclic
from .tutte import tutte


@dataclass(frozen=True)
class SelftestConfig:
    """Scope of a cross-validation run."""

    max_n: int = 4
    random_n6: int = 0
    random_max_edges: int = 12
    seed: int = 61803
    max_edges: int = 30


@dataclass
class CheckOutcome:
    name: str
    ok: bool
    checked: int = 0
    detail: str = ""


def all_connected_graphs(n: int) -> list[Graph]:
    """Every labeled connected simple graph on vertices 1..n."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    out = []
    for bits in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
        g = make_graph(n, edges)
        if is_connected(g):
            out.append(g)
    return out


def random_connected_graphs(n: int, count: int, max_edges: int,
                            seed: int) -> list[Graph]:
    """Distinct random labeled connected graphs on 1..n with at most
    ``max_edges`` edges, deterministically seeded."""
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    seen: set[tuple[tuple[int, int], ...]] = set()
    out: list[Graph] = []
    lo = n - 1
    while len(out) < count:
        m = rng.randint(lo, min(max_edges, len(pairs)))
        edges = tuple(sorted(rng.sample(pairs, m)))
        if edges in seen:
            continue
        g = Graph(n, edges)
        if is_connected(g):
            seen.add(edges)
            out.append(g)
    return out


def corpus(config: SelftestConfig) -> list[Graph]:
    graphs: list[Graph] = []
    for n in range(1, config.max_n + 1):
        graphs.extend(all_connected_graphs(n))
    if config.random_n6:
        graphs.extend(
            random_connected_graphs(
                6, config.random_n6, config.random_max_edges, config.seed
            )
        )
    return graphs


def check_kappa_three_way(graphs: list[Graph],
                          max_edges: int = 30) -> CheckOutcome:
    """Class count: exhaustive flood == recursion == Tutte at (1, 0)."""
    kmemo: dict = {}
    tmemo: dict = {}
    for g in graphs:
        by_bfs = len(kappa_classes_bfs(g, max_edges=max_edges))
        by_rec = kappa_count(g, memo=kmemo)
        by_tutte = tutte(g, memo=tmemo).evaluate(1, 0)
        if not by_bfs == by_rec == by_tutte:
            return CheckOutcome(
                "kappa-three-way", False, len(graphs),
                f"{g.edges}: flood={by_bfs} recursion={by_rec} tutte={by_tutte}",
            )
    return CheckOutcome("kappa-three-way", True, len(graphs))


def check_alpha_three_way(graphs: list[Graph],
                          max_edges: int = 30) -> CheckOutcome:
    """Orientation count: enumeration == recursion == Tutte at (2, 0)."""
    amemo: dict = {}
    tmemo: dict = {}
    for g in graphs:
        by_enum = sum(1 for _ in enumerate_acyclic(g, max_edges=max_edges))
        by_rec = count_acyclic(g, memo=amemo)
        by_tutte = tutte(g, memo=tmemo).evaluate(2, 0)
        if not by_enum == by_rec == by_tutte:
            return CheckOutcome(
                "alpha-three-way", False, len(graphs),
                f"{g.edges}: enum={by_enum} recursion={by_rec} tutte={by_tutte}",
            )
    return CheckOutcome("alpha-three-way", True, len(graphs))


def check_recursion_identities(graphs: list[Graph]) -> CheckOutcome:
    """Per cycle-edge: count(G) = count(G - e) + count(G / e), for both the
    class count and the orientation count."""
    kmemo: dict = {}
    amemo: dict = {}
    checked = 0
    for g in graphs:
        kinds = classify_edges(g)
        kg = kappa_count(g, memo=kmemo)
        ag = count_acyclic(g, memo=amemo)
        for e, kind in enumerate(kinds):
            if kind != "cycle-edge":
                continue
            checked += 1
            deleted = delete_edge(g, e)
            contracted, _ = contract_edge(g, e, simplify=True)
            ks = kappa_count(deleted, memo=kmemo) + kappa_count(contracted, memo=kmemo)
            als = count_acyclic(deleted, memo=amemo) + count_acyclic(contracted, memo=amemo)
            if kg != ks or ag != als:
                return CheckOutcome(
                    "recursion-identities", False, checked,
                    f"{g.edges} edge {g.edges[e]}: kappa {kg} vs {ks}, alpha {ag} vs {als}",
                )
    return CheckOutcome("recursion-identities", True, checked)


def check_theta_bijection(graphs: list[Graph],
                          max_edges: int = 30) -> CheckOutcome:
    """Per cycle-edge: the class map is total, injective, surjective, and
    undone by its inverse."""
    checked = 0
    for g in graphs:
        if g.m == 0:
            continue
        classes = kappa_classes_bfs(g, max_edges=max_edges)
        for e, kind in enumerate(classify_edges(g)):
            if kind != "cycle-edge":
                continue
            checked += 1
            deleted = delete_edge(g, e)
            contracted, _ = contract_edge(g, e, simplify=True)
            image_keys = set()
            for cls in classes:
                img = theta(cls.representative, e)
                key = (img.kind, img.kappa_class.signature)
                if key in image_keys:
                    return CheckOutcome(
                        "theta-bijection", False, checked,
                        f"{g.edges} edge {g.edges[e]}: image collision {key}",
                    )
                image_keys.add(key)
                back = theta_inverse(g, e, img)
                if back.signature != cls.signature:
                    return CheckOutcome(
                        "theta-bijection", False, checked,
                        f"{g.edges} edge {g.edges[e]}: round trip moved "
                        f"{bits_text(cls.representative)}",
                    )
            targets = {
                ("deleted", c.signature)
                for c in kappa_classes_bfs(deleted, max_edges=max_edges)
            } | {
                ("contracted", c.signature)
                for c in kappa_classes_bfs(contracted, max_edges=max_edges)
            }
            if image_keys != targets:
                return CheckOutcome(
                    "theta-bijection", False, checked,
                    f"{g.edges} edge {g.edges[e]}: image misses "
                    f"{len(targets - image_keys)} classes",
                )
    return CheckOutcome("theta-bijection", True, checked)


def check_beta_bijection(graphs: list[Graph],
                         max_edges: int = 30) -> CheckOutcome:
    """Per edge: the per-orientation split is injective with image size
    alpha(G - e) + alpha(G / e)."""
    amemo: dict = {}
    checked = 0
    for g in graphs:
        orientations = list(enumerate_acyclic(g, max_edges=max_edges))
        for e in range(g.m):
            checked += 1
            images = {
                (img.kind, img.orientation.bits)
                for img in (beta(o, e) for o in orientations)
            }
            if len(images) != len(orientations):
                return CheckOutcome(
                    "beta-bijection", False, checked,
                    f"{g.edges} edge {g.edges[e]}: split not injective",
                )
            deleted = delete_edge(g, e)
            contracted, _ = contract_edge(g, e, simplify=True)
            expected = count_acyclic(deleted, memo=amemo) + count_acyclic(
                contracted, memo=amemo
            )
            if len(images) != expected:
                return CheckOutcome(
                    "beta-bijection", False, checked,
                    f"{g.edges} edge {g.edges[e]}: image {len(images)} != {expected}",
                )
    return CheckOutcome("beta-bijection", True, checked)


def check_signature_complete(graphs: list[Graph],
                             max_edges: int = 30) -> CheckOutcome:
    """The signature partition equals the click-flood partition."""
    checked = 0
    for g in graphs:
        classes = kappa_classes_bfs(g, max_edges=max_edges)
        by_signature: dict = {}
        for cls in classes:
            assert cls.members is not None
            for member in cls.members:
                key = nu_signature(member).values
                by_signature.setdefault(key, set()).add(member.bits)
                checked += 1
        flood = {frozenset(m.bits for m in cls.members) for cls in classes}
        sig = {frozenset(v) for v in by_signature.values()}
        if flood != sig:
            return CheckOutcome(
                "signature-complete", False, checked,
                f"{g.edges}: partitions disagree",
            )
    return CheckOutcome("signature-complete", True, checked)


def run_selftest(config: SelftestConfig) -> list[CheckOutcome]:
    graphs = corpus(config)
    small = [g for g in graphs if g.n <= 5]
    return [
        check_alpha_three_way(graphs, config.max_edges),
        check_kappa_three_way(graphs, config.max_edges),
        check_recursion_identities(graphs),
        check_signature_complete(graphs, config.max_edges),
        check_theta_bijection(small, config.max_edges),
        check_beta_bijection(small, config.max_edges),
    ]
