"""Strong cliques, CIS and localizable graphs, with vertex-transitive corpus checks."""

import json

from ._core import (
    CapacityExceeded,
    Graph,
    InvalidArgument,
    MethodMismatch,
    ParseError,
    PreconditionFailed,
    are_isomorphic,
    automorphism_group_order,
    build_graph,
    cartesian_product,
    chromatic_number,
    clique_cover_number,
    clique_number,
    complement,
    from_dimacs,
    from_graph6,
    has_strong_clique,
    independence_number,
    is_cis,
    is_connected,
    is_localizable,
    is_strong_clique,
    is_vertex_transitive,
    is_well_covered,
    lexicographic_product,
    line_graph,
    local_graph,
    maximal_cliques,
    maximal_independent_sets,
    suite_ids,
    to_dimacs,
    to_graph6,
    valency,
)
from ._core import analyze_json as _analyze_json
from ._core import verify as _verify


def analyze(graph, graph_id=None):
    """Property report as a dict; `graph` may be a Graph or a graph id string."""
    if isinstance(graph, str):
        graph_id = graph_id or graph
        graph = build_graph(graph)
    return json.loads(_analyze_json(graph_id or to_graph6(graph), graph))


def verify(suite, corpus_max=None):
    """Runs a verification suite; reports come back parsed, one dict per graph."""
    result = _verify(suite, corpus_max)
    result["reports"] = [json.loads(line) for line in result["reports"].splitlines()]
    return result
