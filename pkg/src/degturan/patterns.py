"""Forbidden-pattern descriptions and their text grammar.

Grammar (shared with the CLI)::

    Kk          clique K_k              Pk        path on k vertices
    Ck          cycle C_k               Cstar     family of all even cycles
    Sk          star on k vertices      Sstar:k   near star S*_k
    Dstar:k     double star S_{k,k}     Mk        matching with k edges
    Kab:a,b     complete bipartite      forest:a,b,...  even linear forest
    g6:<str>    custom graph given in graph6
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels as K
from . import constructions as C
from .errors import Graph6Error, PatternError
from .graph import Graph, canonical_graph, graph6_decode, graph6_encode

_MIN_PARAM = {
    "clique": 2,
    "path": 2,
    "cycle": 3,
    "star": 2,
    "near_star": 4,
    "double_star": 2,
    "matching": 1,
}


@dataclass(frozen=True)
class Pattern:
    kind: str
    params: tuple[int, ...] = ()
    custom: Graph | None = field(default=None)

    def __post_init__(self):
        kind, ps = self.kind, self.params
        if kind in _MIN_PARAM:
            if len(ps) != 1 or ps[0] < _MIN_PARAM[kind]:
                raise PatternError(f"{kind} needs one parameter >= {_MIN_PARAM[kind]}, got {ps}")
        elif kind == "bipartite":
            if len(ps) != 2 or not 1 <= ps[0] <= ps[1]:
                raise PatternError(f"complete bipartite needs 1 <= a <= b, got {ps}")
        elif kind == "forest":
            if not ps or any(o < 2 or o % 2 for o in ps):
                raise PatternError(f"even linear forest needs even path orders, got {ps}")
        elif kind == "even_cycles":
            if ps:
                raise PatternError("even cycle family takes no parameters")
        elif kind == "custom":
            if self.custom is None or self.custom.edge_count < 1:
                raise PatternError("custom pattern needs a graph with at least one edge")
            # relabelings of one graph must share a text form and a store key
            object.__setattr__(self, "custom", canonical_graph(self.custom))
        else:
            raise PatternError(f"unknown pattern kind {kind!r}")

    # constructors -----------------------------------------------------------
    @classmethod
    def clique(cls, k):
        return cls("clique", (k,))

    @classmethod
    def path(cls, k):
        return cls("path", (k,))

    @classmethod
    def cycle(cls, k):
        return cls("cycle", (k,))

    @classmethod
    def even_cycles(cls):
        return cls("even_cycles")

    @classmethod
    def bipartite(cls, a, b):
        a, b = min(a, b), max(a, b)
        return cls("bipartite", (a, b))

    @classmethod
    def matching(cls, k):
        return cls("matching", (k,))

    @classmethod
    def star(cls, k):
        return cls("star", (k,))

    @classmethod
    def near_star(cls, k):
        return cls("near_star", (k,))

    @classmethod
    def double_star(cls, k):
        return cls("double_star", (k,))

    @classmethod
    def forest(cls, *orders):
        return cls("forest", tuple(orders))

    @classmethod
    def from_graph(cls, G: Graph):
        return cls("custom", (), G)

    # ----------------------------------------------------------------------
    def __str__(self):
        return format_pattern(self)

    def __hash__(self):
        return hash(str(self))

    def __eq__(self, other):
        return isinstance(other, Pattern) and str(self) == str(other)

    def graph(self) -> Graph | None:
        """Representative graph; ``None`` for the even cycle family."""
        k = self.params[0] if self.params else None
        return {
            "clique": lambda: C.complete_graph(k),
            "path": lambda: C.path_graph(k),
            "cycle": lambda: C.cycle_graph(k),
            "even_cycles": lambda: None,
            "bipartite": lambda: C.complete_bipartite(*self.params),
            "matching": lambda: C.matching_graph(k),
            "star": lambda: C.star_graph(k),
            "near_star": lambda: C.near_star(k),
            "double_star": lambda: C.double_star(k),
            "forest": lambda: C.even_linear_forest(self.params),
            "custom": lambda: self.custom,
        }[self.kind]()

    @cached_property
    def kernel_args(self):
        """``(kind, ip, padj, pn, orders, pdeg)`` for the numba kernels."""
        ip = np.zeros(2, np.int64)
        no_adj = np.zeros(1, np.uint64)
        no_orders = np.zeros((1, 1), np.int64)
        no_deg = np.zeros(1, np.int64)
        simple = {
            "clique": K.K_CLIQUE,
            "path": K.K_PATH,
            "cycle": K.K_CYCLE,
            "matching": K.K_MATCHING,
            "star": K.K_STAR,
        }
        if self.kind in simple:
            ip[0] = self.params[0]
            return simple[self.kind], ip, no_adj, 0, no_orders, no_deg
        if self.kind == "even_cycles":
            return K.K_EVEN_CYCLE, ip, no_adj, 0, no_orders, no_deg
        if self.kind == "bipartite":
            ip[0], ip[1] = self.params
            return K.K_BIPARTITE, ip, no_adj, 0, no_orders, no_deg
        P = self.graph()
        return (K.K_CUSTOM, ip) + embedding_plan(P)


def embedding_plan(P: Graph):
    """``(padj, pn, orders, pdeg)``; row ``q`` of ``orders`` starts at ``q``,
    row ``pn`` is the unrooted order. Orders place the vertex with most
    already-placed neighbours next, ties broken by degree then index.
    """
    pn = P.n
    deg = P.degrees()

    def order_from(first):
        placed = [first]
        mask = 1 << first
        while len(placed) < pn:
            best = None
            for q in range(pn):
                if (mask >> q) & 1:
                    continue
                key = ((P.rows[q] & mask).bit_count(), deg[q], -q)
                if best is None or key > best[0]:
                    best = (key, q)
            placed.append(best[1])
            mask |= 1 << best[1]
        return placed

    start = max(range(pn), key=lambda q: (deg[q], -q))
    orders = np.array([order_from(q) for q in range(pn)] + [order_from(start)], np.int64)
    return P.adj, pn, orders, np.array(deg, np.int64)


_SIMPLE = [
    (re.compile(r"^Kab:(\d+),(\d+)$"), lambda m: Pattern.bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"^Cstar$"), lambda m: Pattern.even_cycles()),
    (re.compile(r"^Sstar:(\d+)$"), lambda m: Pattern.near_star(int(m[1]))),
    (re.compile(r"^Dstar:(\d+)$"), lambda m: Pattern.double_star(int(m[1]))),
    (re.compile(r"^forest:(\d+(?:,\d+)*)$"), lambda m: Pattern.forest(*map(int, m[1].split(",")))),
    (re.compile(r"^K(\d+)$"), lambda m: Pattern.clique(int(m[1]))),
    (re.compile(r"^P(\d+)$"), lambda m: Pattern.path(int(m[1]))),
    (re.compile(r"^C(\d+)$"), lambda m: Pattern.cycle(int(m[1]))),
    (re.compile(r"^S(\d+)$"), lambda m: Pattern.star(int(m[1]))),
    (re.compile(r"^M(\d+)$"), lambda m: Pattern.matching(int(m[1]))),
]


def parse_pattern(text: str) -> Pattern:
    s = text.strip()
    if s.startswith("g6:"):
        try:
            return Pattern.from_graph(graph6_decode(s[3:]))
        except Graph6Error as exc:
            raise PatternError(f"bad graph6 in pattern {text!r}: {exc}") from exc
    for rx, make in _SIMPLE:
        m = rx.match(s)
        if m:
            return make(m)
    raise PatternError(f"cannot parse pattern {text!r}")


def format_pattern(P: Pattern) -> str:
    ps = P.params
    return {
        "clique": lambda: f"K{ps[0]}",
        "path": lambda: f"P{ps[0]}",
        "cycle": lambda: f"C{ps[0]}",
        "even_cycles": lambda: "Cstar",
        "bipartite": lambda: f"Kab:{ps[0]},{ps[1]}",
        "matching": lambda: f"M{ps[0]}",
        "star": lambda: f"S{ps[0]}",
        "near_star": lambda: f"Sstar:{ps[0]}",
        "double_star": lambda: f"Dstar:{ps[0]}",
        "forest": lambda: "forest:" + ",".join(map(str, ps)),
        "custom": lambda: "g6:" + graph6_encode(P.custom),
    }[P.kind]()
