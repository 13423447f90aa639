"""Graph values with their canonical keys and graph6 text, plus degree sequences."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import Graph6Error, GraphSizeError, NotGraphicError

MAX_VERTICES = 64


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Adjacency is held as one integer bitmask per vertex, so edge queries are a
    shift and a mask.
    """

    __slots__ = ("n", "rows", "__dict__")

    def __init__(self, n: int, rows: Sequence[int] | None = None):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if rows is None:
            rows = (0,) * n
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full or (r >> i) & 1:
                raise ValueError(f"row {i} has loops or out-of-range bits")
            probe = r
            while probe:
                j = (probe & -probe).bit_length() - 1
                probe &= probe - 1
                if not (rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at {i},{j}")
        self.n = n
        self.rows = rows

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_array(cls, adj: np.ndarray, n: int | None = None) -> Graph:
        n = len(adj) if n is None else n
        return cls(n, [int(x) for x in adj[:n]])

    @cached_property
    def adj(self) -> np.ndarray:
        """Adjacency rows as a ``uint64`` array for the kernels."""
        return np.array(self.rows, dtype=np.uint64)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        r = self.rows[v]
        return [j for j in range(self.n) if (r >> j) & 1]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if (self.rows[i] >> j) & 1]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if not (self.rows[i] >> j) & 1]

    def with_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def add_isolated(self, count: int = 1) -> Graph:
        return Graph(self.n + count, list(self.rows) + [0] * count)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, [full & ~r & ~(1 << i) for i, r in enumerate(self.rows)])

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for v in range(self.n):
            if (seen >> v) & 1:
                continue
            reach = 1 << v
            frontier = reach
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    u = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= self.rows[u]
                nxt &= ~reach
                reach |= nxt
                frontier = nxt
            seen |= reach
            comps.append([u for u in range(self.n) if (reach >> u) & 1])
        return comps

    def to_graph6(self) -> str:
        return graph6_encode(self)


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Isomorphism-class identifier: graph6 bytes of the canonical relabeling."""

    data: bytes

    @property
    def graph6(self) -> str:
        return self.data.decode("ascii")

    def to_graph(self) -> Graph:
        return graph6_decode(self.graph6)

    def __str__(self):
        return self.graph6


@dataclass(frozen=True)
class DegreeSequence:
    """Degree multiset, stored nonincreasing."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = tuple(sorted((int(v) for v in values), reverse=True))
        if any(v < 0 for v in vals):
            raise ValueError("degrees must be nonnegative")
        object.__setattr__(self, "values", vals)

    @classmethod
    def parse(cls, text: str) -> DegreeSequence:
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls(int(tok) for tok in text.split(","))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return ",".join(map(str, self.values))

    def power_sum(self, p: int) -> int:
        return sum(d**p for d in self.values)


# ---------------------------------------------------------------------------
# degree-power arithmetic


def ep(G: Graph, p: int) -> int:
    """Sum over vertices of ``deg(v) ** p``, exact."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    return sum(d**p for d in G.degrees())


def ep_from_histogram(hist: Sequence[int], p: int) -> int:
    """``ep`` from counts ``hist[d]`` of vertices with degree ``d``."""
    return sum(int(c) * d**p for d, c in enumerate(hist) if c)


def degree_sequence(G: Graph) -> DegreeSequence:
    return DegreeSequence(G.degrees())


# ---------------------------------------------------------------------------
# canonical forms


def canonical_labeling(G: Graph) -> list[int]:
    """``lab[i]`` is the vertex of ``G`` placed at position ``i``."""
    if G.n == 0:
        return []
    return [int(x) for x in K.canon_label(G.adj, G.n)]


def canonical_graph(G: Graph) -> Graph:
    if G.n == 0:
        return G
    return Graph(G.n, [int(r) for r in K.canon_rows(G.adj, G.n)])


def canonical_form(G: Graph) -> CanonicalKey:
    return CanonicalKey(graph6_encode(canonical_graph(G)).encode("ascii"))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.edge_count == H.edge_count and canonical_form(G) == canonical_form(H)


# ---------------------------------------------------------------------------
# graph6


def _size_header(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))


def graph6_encode(G: Graph) -> str:
    n = G.n
    bits = [(G.rows[i] >> j) & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        body.append(chr(63 + v))
    return _size_header(n) + "".join(body)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) for c in s]
    if any(c < 63 or c > 126 for c in codes):
        raise Graph6Error("graph6 byte out of range 63..126")
    if codes[0] == 126:
        if len(codes) < 4 or codes[1] == 126:
            raise Graph6Error("unsupported or truncated graph6 size header")
        n = ((codes[1] - 63) << 12) | ((codes[2] - 63) << 6) | (codes[3] - 63)
        body = codes[4:]
    else:
        n = codes[0] - 63
        body = codes[1:]
    if n > MAX_VERTICES:
        raise GraphSizeError(f"graph6 graph has {n} vertices, more than {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise Graph6Error(f"graph6 body has {len(body)} bytes, expected {-(-nbits // 6)} for n={n}")
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero graph6 padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


# ---------------------------------------------------------------------------
# degree sequences


def is_graphic(seq: DegreeSequence | Iterable[int]) -> bool:
    """Erdos-Gallai test."""
    d = list(DegreeSequence(seq)) if not isinstance(seq, DegreeSequence) else list(seq)
    n = len(d)
    if sum(d) % 2:
        return False
    if d and d[0] > n - 1:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(x, k) for x in d[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def realize_sequence(seq: DegreeSequence | Iterable[int]) -> Graph:
    """Havel-Hakimi realization; vertex ``i`` gets the ``i``-th largest degree."""
    d = DegreeSequence(seq) if not isinstance(seq, DegreeSequence) else seq
    if not is_graphic(d):
        raise NotGraphicError(f"sequence ({d}) is not graphic")
    n = len(d)
    if n > MAX_VERTICES:
        raise GraphSizeError(f"sequence of length {n} exceeds {MAX_VERTICES}")
    rows = [0] * n
    # max-heap on (residual degree, -vertex) for deterministic ties
    heap = [(-x, v) for v, x in enumerate(d.values)]
    heapq.heapify(heap)
    while heap:
        negx, v = heapq.heappop(heap)
        x = -negx
        if x == 0:
            break
        if len(heap) < x:
            raise NotGraphicError(f"sequence ({d}) is not graphic")
        taken = [heapq.heappop(heap) for _ in range(x)]
        for negy, u in taken:
            if negy == 0:
                raise NotGraphicError(f"sequence ({d}) is not graphic")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        for negy, u in taken:
            heapq.heappush(heap, (negy + 1, u))
    return Graph(n, rows)


def disjoint_union(*graphs: Graph) -> Graph:
    total = sum(g.n for g in graphs)
    if total > MAX_VERTICES:
        raise GraphSizeError(f"union has {total} vertices, more than {MAX_VERTICES}")
    rows = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph(total, rows)


def all_graphs(n: int) -> Iterable[Graph]:
    """Every labeled graph on ``n`` vertices (2**(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[k] for k in range(len(pairs)) if (mask >> k) & 1))
