"""Hypergraph rewriting for symmetric monoidal terms.

Terms compose with ``>>`` and stack with ``*``::

    from diagrw import Term, terms_iso
    f = Term.generator("f", 1, 1)
    assert terms_iso(f * Term.id(1) >> Term.swap(1, 1), Term.swap(1, 1) >> Term.id(1) * f)
"""

import json

from ._core import (
    Graph,
    Term,
    cap_graph,
    check_theory,
    clean,
    compose,
    cup_graph,
    find_isomorphism,
    find_matches,
    graph_from_json,
    graph_to_term,
    id_graph,
    isomorphic,
    oracle_check,
    parse_term,
    random_semantics,
    rewrite,
    stack,
    swap_graph,
    term_to_graph,
    terms_iso,
    zx,
)

__all__ = [
    "Graph",
    "Term",
    "cap_graph",
    "check_theory",
    "clean",
    "compose",
    "cup_graph",
    "find_isomorphism",
    "find_matches",
    "graph_dict",
    "graph_from_json",
    "graph_to_term",
    "id_graph",
    "isomorphic",
    "oracle_check",
    "parse_term",
    "random_semantics",
    "rewrite",
    "stack",
    "swap_graph",
    "term_to_graph",
    "terms_iso",
    "zx",
]


def graph_dict(graph):
    """The graph's JSON dump as a Python dict."""
    return json.loads(graph.to_json())
