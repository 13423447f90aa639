"""Containment tests for forbidden patterns.

Each specialized detector has the same meaning as ``contains_subgraph`` on the
pattern's representative graph; the test-suite checks this exhaustively on
small graphs.
"""

from __future__ import annotations

from . import _kernels as K
from .graph import Graph
from .patterns import Pattern, embedding_plan


def contains_subgraph(G: Graph, P: Graph) -> bool:
    """Generic oracle: does ``G`` have a (not necessarily induced) copy of ``P``?"""
    if P.n < 1:
        raise ValueError("pattern must have at least one vertex")
    if P.n > G.n or P.edge_count > G.edge_count:
        return False
    padj, pn, orders, pdeg = embedding_plan(P)
    return bool(K.has_embedding(G.adj, G.n, padj, pn, orders[pn], pdeg, -1))


def contains_clique(G: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > G.n:
        return False
    return bool(K.has_clique(G.adj, G.n, k))


def contains_path(G: Graph, k: int) -> bool:
    if k < 2:
        raise ValueError("k must be >= 2")
    if k > G.n:
        return False
    return bool(K.has_path(G.adj, G.n, k))


def contains_cycle(G: Graph, k: int) -> bool:
    if k < 3:
        raise ValueError("k must be >= 3")
    if k > G.n:
        return False
    return bool(K.has_cycle(G.adj, G.n, k))


def contains_even_cycle(G: Graph) -> bool:
    if G.n < 4:
        return False
    return bool(K.has_even_cycle(G.adj, G.n))


def contains_complete_bipartite(G: Graph, a: int, b: int) -> bool:
    if not 1 <= a <= b:
        raise ValueError("need 1 <= a <= b")
    if a + b > G.n:
        return False
    return bool(K.has_bipartite(G.adj, G.n, a, b))


def max_matching_size(G: Graph) -> int:
    if G.n == 0:
        return 0
    return int(K.matching_bb(G.adj, G.n, G.n))


def is_pattern_free(G: Graph, P: Pattern) -> bool:
    if G.n == 0:
        return True
    kind, ip, padj, pn, orders, pdeg = P.kernel_args
    return not bool(K.contains_kind(G.adj, G.n, kind, ip, padj, pn, orders, pdeg))
