"""Hurwitz equivalence of quasipositive factorizations of 3-strand braids.

Exact band-generator arithmetic, the vertex graph whose weight-0
components classify factorizations up to Hurwitz moves, and a brute-force
orbit search used to cross-check the graph decision.
"""

from ._backend import KERNEL_NAME
from .braid import (
    Braid,
    ConsistencyError,
    TokenError,
    evaluate,
    is_delta_pair,
    normalize_positive,
    parse_plain_word,
    parse_signed_word,
    positive_words_equal_to,
    tau_atom,
    tau_plain,
)
from .factorizations import (
    Factor,
    Factorization,
    apply_moves,
    edge_to_moves,
    factorization_of_word,
    hurwitz_orbit,
    sigma_move,
    to_vertex,
    validate,
)
from .graph import (
    Components,
    Decision,
    Edge,
    Vertex,
    base_components,
    base_vertices,
    decide_equivalence,
    descend,
    vertex_for,
    vertices_of_weight,
)
from .words import (
    cyclic_shift,
    format_hatted_word,
    hat_word,
    matches,
    parenthesize,
    parse_hatted_word,
    plain_subword,
    positivize,
    unhat_word,
)

__version__ = "0.1.0"

__all__ = [
    "Braid", "Components", "ConsistencyError", "Decision", "Edge", "Factor",
    "Factorization", "KERNEL_NAME", "TokenError", "Vertex", "apply_moves",
    "base_components", "base_vertices", "cyclic_shift", "decide_equivalence",
    "descend", "edge_to_moves", "evaluate", "factorization_of_word",
    "format_hatted_word", "hat_word", "hurwitz_orbit", "is_delta_pair",
    "matches", "normalize_positive", "parenthesize", "parse_hatted_word",
    "parse_plain_word", "parse_signed_word", "plain_subword",
    "positive_words_equal_to", "positivize", "sigma_move", "tau_atom",
    "tau_plain", "to_vertex", "unhat_word", "validate", "vertex_for",
    "vertices_of_weight",
]
