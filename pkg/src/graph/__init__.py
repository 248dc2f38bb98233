from .canonical import are_isomorphic, canonical_code, enumerate_graphs, graph_from_code
from .io import parse_graph, serialize_graph, to_graph6
from .minors import MinorStep, find_minor, is_minor, one_step_minors, verify_minor_model
from .model import Graph, MinorModel, VertexSet
from .primitives import (
    augmented_component_sets,
    augmented_components,
    connected_components,
    disjoint_paths,
    is_biconnected,
    is_chordal,
    is_connected_set,
    lexicographic_product,
    maximal_cliques,
    minimal_separators,
)

__all__ = [
    "Graph",
    "MinorModel",
    "MinorStep",
    "VertexSet",
    "are_isomorphic",
    "augmented_component_sets",
    "augmented_components",
    "canonical_code",
    "connected_components",
    "disjoint_paths",
    "enumerate_graphs",
    "find_minor",
    "graph_from_code",
    "is_biconnected",
    "is_chordal",
    "is_connected_set",
    "is_minor",
    "lexicographic_product",
    "maximal_cliques",
    "minimal_separators",
    "one_step_minors",
    "parse_graph",
    "serialize_graph",
    "to_graph6",
    "verify_minor_model",
]
