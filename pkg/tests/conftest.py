from itertools import combinations, permutations

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from degturan.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_contains(g: Graph, p: Graph) -> bool:
    """Non-induced subgraph containment via networkx monomorphisms."""
    if p.n > g.n:
        return False
    gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(p))
    return gm.subgraph_is_monomorphic()


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (e for e, b in zip(pairs, bits) if b))


def random_graph(rng: np.random.Generator, n: int, density: float = 0.5) -> Graph:
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if rng.random() < density))


# ---------------------------------------------------------------------------
# labeled-copy oracle: a graph on K_n's edge set is P-free iff it contains no
# edge mask of a labeled copy of P.


def edge_index(n):
    return {e: i for i, e in enumerate(combinations(range(n), 2))}


def copy_masks(n: int, P: Graph) -> list[int]:
    idx = edge_index(n)
    pe = P.edges()
    out = set()
    for image in permutations(range(n), P.n):
        m = 0
        for u, v in pe:
            a, b = sorted((image[u], image[v]))
            m |= 1 << idx[(a, b)]
        out.add(m)
    return sorted(out)


def free_mask_table(n: int, masks_of_copies) -> np.ndarray:
    """Boolean over all ``2**C(n,2)`` labeled graphs: True when free of every copy."""
    m = n * (n - 1) // 2
    allg = np.arange(1 << m, dtype=np.int64)
    free = np.ones(1 << m, bool)
    for c in masks_of_copies:
        free &= (allg & c) != c
    return free


def degree_table(n: int) -> np.ndarray:
    m = n * (n - 1) // 2
    allg = np.arange(1 << m, dtype=np.int64)
    deg = np.zeros((1 << m, n), np.int64)
    for i, (u, v) in enumerate(combinations(range(n), 2)):
        bit = (allg >> i) & 1
        deg[:, u] += bit
        deg[:, v] += bit
    return deg


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
