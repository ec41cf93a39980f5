"""Coxeter elements of simply-laced Coxeter systems over a graph.

The input graph is the unweighted Coxeter graph of a simply-laced system:
vertices are generators, edges join non-commuting pairs. A Coxeter element
is a product of all generators in some order; orders that induce the same
acyclic orientation are equal as group elements, and conjugacy is decided
combinatorially from cycle-basis flow values, with no group arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError, OrientationError
from .graphs import Graph, is_connected
from .kappa import NuSignature, nu_signature
from .orientations import Orientation, orientation_from_permutation


@dataclass(frozen=True)
class CoxeterWord:
    """A Coxeter element as the order its generators are multiplied in."""

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        order = tuple(int(x) for x in self.order)
        object.__setattr__(self, "order", order)
        if sorted(order) != list(range(1, len(order) + 1)):
            raise OrientationError(
                f"{order} is not a permutation of 1..{len(order)}"
            )


def word_from_text(text: str) -> CoxeterWord:
    """Parse a word given as whitespace-separated generator indices."""
    try:
        parts = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise OrientationError(f"malformed word {text!r}") from None
    return CoxeterWord(parts)


def _check_system(g: Graph) -> None:
    if not g.is_simple():
        raise GraphError("a Coxeter graph must be simple")
    if not is_connected(g) or g.n == 0:
        raise GraphError("the Coxeter graph must be connected")


def word_to_orientation(g: Graph, word: CoxeterWord) -> Orientation:
    """The acyclic orientation induced by the multiplication order."""
    _check_system(g)
    if len(word.order) != g.n:
        raise OrientationError(
            f"word has {len(word.order)} generators, graph has {g.n}"
        )
    return orientation_from_permutation(g, word.order)


def commutation_equivalent(g: Graph, w1: CoxeterWord, w2: CoxeterWord) -> bool:
    """Whether two orders are equal as group elements, i.e. related by
    swapping adjacent generators that do not share an edge."""
    return word_to_orientation(g, w1) == word_to_orientation(g, w2)


def cyclic_shift(word: CoxeterWord) -> CoxeterWord:
    """Conjugate by the leading generator: rotate the order left by one."""
    return CoxeterWord(word.order[1:] + word.order[:1])


@dataclass(frozen=True)
class ConjugacyCheck:
    """Conjugacy verdict plus the two signatures that witnessed it."""

    conjugate: bool
    left_signature: NuSignature
    right_signature: NuSignature


def conjugate_elements(g: Graph, w1: CoxeterWord, w2: CoxeterWord) -> ConjugacyCheck:
    """Decide conjugacy of two Coxeter elements of a simply-laced system.

    Linear in the graph size: compare the cycle-basis flow signatures of
    the induced orientations.
    """
    s1 = nu_signature(word_to_orientation(g, w1))
    s2 = nu_signature(word_to_orientation(g, w2))
    return ConjugacyCheck(s1 == s2, s1, s2)
