"""Degree-power Turan numbers by exhaustive search over isomorphism classes."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    CanonicalKey,
    DegreeSequence,
    Graph,
    canonical_form,
    degree_sequence,
    disjoint_union,
    ep,
    graph6_decode,
    graph6_encode,
    is_graphic,
    realize_sequence,
)
from .patterns import Pattern, parse_pattern  # noqa: E402

__all__ = [
    "CanonicalKey",
    "DegreeSequence",
    "Graph",
    "Pattern",
    "canonical_form",
    "degree_sequence",
    "disjoint_union",
    "ep",
    "graph6_decode",
    "graph6_encode",
    "is_graphic",
    "parse_pattern",
    "realize_sequence",
]
