"""Exact graph minors, internal 4-connectivity and chain-theorem growth."""

from .canonical import are_isomorphic, canonical_form, dedup
from .connectivity import (
    enumerate_3_separations,
    is_internally_4_connected,
    is_k_connected,
    is_quasi_4_connected,
    vertex_connectivity,
)
from .families import build_family, parse_family
from .formats import decode_graph6, encode_graph6, parse_graph_text
from .graph import Graph, GraphError
from .growth import Bounds, GrowthReport, grow
from .minor import MinorEmbedding, find_minor, forbidden_edges, has_minor, is_planar, verify_embedding

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "Graph",
    "GraphError",
    "GrowthReport",
    "MinorEmbedding",
    "are_isomorphic",
    "build_family",
    "canonical_form",
    "decode_graph6",
    "dedup",
    "encode_graph6",
    "enumerate_3_separations",
    "find_minor",
    "forbidden_edges",
    "grow",
    "has_minor",
    "is_internally_4_connected",
    "is_k_connected",
    "is_planar",
    "is_quasi_4_connected",
    "parse_family",
    "parse_graph_text",
    "vertex_connectivity",
    "verify_embedding",
]
