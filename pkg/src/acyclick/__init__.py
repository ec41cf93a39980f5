"""Acyclic orientations, source-to-sink click dynamics, class counting,
Tutte evaluation, and conjugacy of Coxeter elements."""

from .errors import (
    AcyclickError,
    CapExceededError,
    ClickError,
    GraphError,
    GraphParseError,
    OrientationError,
)
from .graphs import (
    Graph,
    SpanningStructure,
    classify_edges,
    connected_components,
    contract_edge,
    contract_vertices,
    delete_edge,
    edge_index,
    fingerprint,
    is_connected,
    make_graph,
    parse_graph,
    simplified,
    spanning_structure,
)
from .orientations import (
    BetaImage,
    Orientation,
    apply_click_sequence,
    beta,
    bits_text,
    click,
    count_acyclic,
    directed_edge,
    directed_edges,
    enumerate_acyclic,
    is_acyclic,
    linear_extension,
    nu,
    orientation_from_bits,
    orientation_from_permutation,
    rotate_to_source,
    sinks,
    sources,
)
from .kappa import (
    Interval,
    KappaClass,
    NuSignature,
    ThetaImage,
    contract_interval,
    interval,
    interval_of_class,
    kappa_classes_bfs,
    kappa_count,
    normalize_click_sequence,
    nu_signature,
    same_kappa_class,
    theta,
    theta_inverse,
)
from .tutte import TuttePolynomial, tutte
from .coxeter import (
    ConjugacyCheck,
    CoxeterWord,
    commutation_equivalent,
    conjugate_elements,
    cyclic_shift,
    word_from_text,
    word_to_orientation,
)

__version__ = "0.1.0"
