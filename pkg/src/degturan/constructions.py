"""Named graph families: extremal witnesses and forbidden patterns."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import GraphSizeError, PatternError
from .graph import MAX_VERTICES, Graph, disjoint_union, realize_sequence


def complete_graph(k: int) -> Graph:
    if k < 0:
        raise PatternError("clique order must be nonnegative")
    return Graph.from_edges(k, combinations(range(k), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(k: int) -> Graph:
    if k < 1:
        raise PatternError("path needs at least one vertex")
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise PatternError("cycle needs at least three vertices")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def star_graph(k: int) -> Graph:
    """``S_k``: a center joined to ``k - 1`` leaves (``k`` vertices in total)."""
    if k < 1:
        raise PatternError("star needs at least one vertex")
    return Graph.from_edges(k, ((0, i) for i in range(1, k)))


def near_star(k: int) -> Graph:
    """``S*_k``: the star ``S_{k-1}`` with a pendant vertex hung on one leaf."""
    if k < 4:
        raise PatternError("near star S*_k needs k >= 4")
    edges = [(0, i) for i in range(1, k - 1)] + [(1, k - 1)]
    return Graph.from_edges(k, edges)


def double_star(k: int) -> Graph:
    """``S_{k,k}``: two copies of ``S_k`` with their centers joined."""
    if k < 2:
        raise PatternError("double star S_{k,k} needs k >= 2")
    edges = [(0, k)]
    edges += [(0, i) for i in range(1, k)]
    edges += [(k, k + i) for i in range(1, k)]
    return Graph.from_edges(2 * k, edges)


def matching_graph(k: int) -> Graph:
    """``M_k``: ``k`` disjoint edges on ``2k`` vertices, no padding."""
    if k < 1:
        raise PatternError("matching needs k >= 1")
    return Graph.from_edges(2 * k, ((2 * i, 2 * i + 1) for i in range(k)))


def even_linear_forest(orders: Sequence[int]) -> Graph:
    if not orders:
        raise PatternError("forest needs at least one component")
    if any(o < 2 or o % 2 for o in orders):
        raise PatternError(f"even linear forest components must be even paths, got {list(orders)}")
    return disjoint_union(*(path_graph(o) for o in orders))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Vertices are numbered class by class in the given order."""
    parts = list(parts)
    if not parts:
        raise PatternError("empty partition")
    if any(s < 1 for s in parts):
        raise PatternError(f"class sizes must be positive, got {parts}")
    n = sum(parts)
    if n > MAX_VERTICES:
        raise GraphSizeError(f"partition has {n} vertices, more than {MAX_VERTICES}")
    cls = []
    for c, s in enumerate(parts):
        cls.extend([c] * s)
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if cls[u] != cls[v]))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise PatternError("K_{a,b} needs a, b >= 1")
    return complete_multipartite([a, b])


def turan_parts(n: int, k: int) -> list[int]:
    """Balanced class sizes of ``T(n, k)``, largest first, empty classes dropped."""
    r = k - 1
    q, s = divmod(n, r)
    return [q + 1] * s + [q] * (r - s) if q else [1] * s


def turan_graph(n: int, k: int) -> Graph:
    """Complete ``(k-1)``-partite graph with class sizes differing by at most one."""
    if n < 1 or k < 2:
        raise PatternError("turan graph needs n >= 1, k >= 2")
    return complete_multipartite(turan_parts(n, k))


def h_graph(n: int, k: int) -> Graph:
    """``H(n, k)``: clique ``B`` of size ``k//2 - 1`` joined to everything in ``A``.

    ``A`` is independent for even ``k``; for odd ``k`` it carries one edge,
    between its two lowest-numbered vertices. ``B`` is ``0..b-1``.
    For ``k = 5`` every ``n >= 1`` is accepted, giving ``H(1,5) = S_1`` and
    ``H(2,5) = S_2``.
    """
    if k < 4:
        raise PatternError("H(n,k) needs k >= 4")
    if n < 1 or (n < k and k != 5):
        raise PatternError(f"H(n,k) needs n >= k, got n={n}, k={k}")
    b = k // 2 - 1
    edges = list(combinations(range(b), 2))
    edges += [(i, j) for i in range(b) for j in range(b, n)]
    if k % 2 and n - b >= 2:
        edges.append((b, b + 1))
    return Graph.from_edges(n, edges)


def friendship_graph(n: int) -> Graph:
    """``F_n``: the star on ``n`` vertices plus a maximum matching on its leaves."""
    if n < 1:
        raise PatternError("friendship graph needs n >= 1")
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1, 2)]
    return Graph.from_edges(n, edges)


def near_regular(n: int, d: int) -> Graph:
    """``d``-regular graph when ``n*d`` is even, else one vertex of degree ``d-1``."""
    if n < 1 or d < 0 or d > n - 1:
        raise PatternError(f"near_regular needs 0 <= d <= n-1, got n={n}, d={d}")
    seq = [d] * n
    if (n * d) % 2:
        seq[-1] = d - 1
    return realize_sequence(seq)


def pendant_extension(base: Graph, at: int = 0) -> Graph:
    """Add a new vertex of degree one attached to vertex ``at``."""
    if not 0 <= at < base.n:
        raise PatternError(f"attachment vertex {at} out of range")
    rows = list(base.rows) + [1 << at]
    rows[at] |= 1 << base.n
    return Graph(base.n + 1, rows)


def paw() -> Graph:
    return pendant_extension(complete_graph(3))


@dataclass(frozen=True)
class FamilySpec:
    """Family tag plus integer parameters, e.g. ``FamilySpec("near_star", (5,))``."""

    tag: str
    params: tuple[int, ...] = ()
    base: Graph | None = field(default=None, compare=False)


def build_family(spec: FamilySpec) -> Graph:
    tag, ps = spec.tag, spec.params
    builders = {
        "path": path_graph,
        "cycle": cycle_graph,
        "clique": complete_graph,
        "star": star_graph,
        "near_star": near_star,
        "double_star": double_star,
        "matching": matching_graph,
        "complete_bipartite": complete_bipartite,
        "near_regular": near_regular,
    }
    if tag == "even_linear_forest":
        return even_linear_forest(ps)
    if tag == "pendant_extension":
        if spec.base is None:
            raise PatternError("pendant_extension needs a base graph")
        return pendant_extension(spec.base, *ps)
    if tag not in builders:
        raise PatternError(f"unknown family {tag!r}")
    try:
        return builders[tag](*ps)
    except TypeError as exc:
        raise PatternError(f"bad parameters {ps} for family {tag!r}") from exc
