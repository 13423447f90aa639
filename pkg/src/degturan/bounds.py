"""Closed-form values and certificates for degree-power sums."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from . import constructions as C
from .detectors import contains_clique
from .errors import EnvelopeError, NoPredictionError
from .graph import Graph, ep
from .patterns import Pattern


def turan_path_number(n: int, k: int) -> int:
    """Maximum edge count of a ``P_k``-free graph on ``n`` vertices (disjoint cliques)."""
    if n < 0 or k < 2:
        raise ValueError("need n >= 0 and k >= 2")
    r, s = divmod(n, k - 1)
    return r * comb(k - 1, 2) + comb(s, 2)


@dataclass(frozen=True)
class PowerSumConstraint:
    n: int
    S: int
    D: int
    p: int

    def __post_init__(self):
        if min(self.n, self.S, self.D) < 0 or self.p < 1:
            raise ValueError("constraint fields must be nonnegative and p >= 1")


def power_sum_max(c: PowerSumConstraint) -> int:
    """Max of ``sum x_i**p`` over ``n`` integers in ``[0, D]`` summing to at most ``S``.

    By convexity the optimum fills as many terms as possible up to ``D`` and
    puts the remainder in one more term.
    """
    if c.D == 0 or c.n == 0:
        return 0
    total = min(c.S, c.n * c.D)
    q, r = divmod(total, c.D)
    return q * c.D**c.p + r**c.p


class PigeonholeCheck(NamedTuple):
    lhs: int
    rhs: int
    certifies_containment: bool


def pigeonhole_check(G: Graph, a: int, k: int) -> PigeonholeCheck:
    """``sum C(d_i, k)`` against ``(a-1) C(n, k)``; exceeding it forces a ``K_{a,k}``."""
    if a < 2 or k < 1:
        raise ValueError("need a >= 2 and k >= 1")
    lhs = sum(comb(d, k) for d in G.degrees())
    rhs = (a - 1) * comb(G.n, k)
    return PigeonholeCheck(lhs, rhs, lhs > rhs)


def erdos_envelope_classes(G: Graph, k: int) -> list[list[int]]:
    """Vertex classes of a complete multipartite graph dominating ``G`` degree-wise.

    The highest-degree vertex of the current set and its non-neighbours form
    one class; the rest is its neighbourhood, handled with ``k - 1``.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if G.n and contains_clique(G, k):
        raise EnvelopeError(f"graph contains K_{k}")
    classes = []
    current = (1 << G.n) - 1
    level = k
    while current:
        members = [v for v in range(G.n) if (current >> v) & 1]
        if level == 2:
            classes.append(members)
            break
        v1 = max(members, key=lambda v: ((G.rows[v] & current).bit_count(), -v))
        nbrs = G.rows[v1] & current
        classes.append([v for v in members if not (nbrs >> v) & 1])
        current = nbrs
        level -= 1
    return classes


def erdos_envelope(G: Graph, k: int) -> Graph:
    """Complete multipartite graph on the same vertices with ``d_G(v) <= d(v)`` for all ``v``."""
    classes = erdos_envelope_classes(G, k)
    cls = [0] * G.n
    for c, members in enumerate(classes):
        for v in members:
            cls[v] = c
    return Graph.from_edges(
        G.n, ((u, v) for u in range(G.n) for v in range(u + 1, G.n) if cls[u] != cls[v])
    )


# ---------------------------------------------------------------------------
# predictions


@dataclass(frozen=True)
class Prediction:
    """Claimed value of ``t_p(n, P)``.

    ``kind`` is ``exact``, ``lower_bound`` or ``asymptotic_leading_term``.
    For the asymptotic kind the claim is ``coefficient * n**exponent``.
    ``caveat`` records validity conditions such as "n sufficiently large".
    """

    kind: str
    value: int | None
    source: str
    coefficient: int | None = None
    exponent: int | None = None
    caveat: str | None = None

    @property
    def exact(self) -> bool:
        return self.kind == "exact"


LARGE_N = "claimed for n sufficiently large; threshold not explicit"


def _multipartite_best(n: int, k: int, p: int) -> int:
    from .search import multipartite_tp

    return multipartite_tp(n, k, p).value


def predicted_tp(P: Pattern, n: int, p: int) -> Prediction:
    if n < 0 or p < 1:
        raise ValueError("need n >= 0 and p >= 1")
    kind, ps = P.kind, P.params
    if kind == "clique":
        k = ps[0]
        if k == 2:
            return Prediction("exact", 0, "definition")
        if p <= 3:
            return Prediction("exact", ep(C.turan_graph(n, k), p) if n else 0, "Theorem 1.1")
        return Prediction("exact", _multipartite_best(n, k, p), "Corollary 2.1")

    if kind == "path":
        k = ps[0]
        if k == 2:
            return Prediction("exact", 0, "Section 1")
        if n <= k - 1:
            return Prediction("exact", n * max(n - 1, 0) ** p, "Section 1")
        if k == 3:
            return Prediction("exact", n if n % 2 == 0 else n - 1, "Section 1")
        if p == 1:
            return Prediction("exact", 2 * turan_path_number(n, k), "Lemma 3.1")
        if k == 5 and n >= 12:
            return Prediction("exact", ep(C.h_graph(n, 5), p), "Lemma l340")
        return Prediction("exact", ep(C.h_graph(n, k), p), "Theorem 1.2", caveat=LARGE_N)

    if kind in ("matching", "forest"):
        order = 2 * ps[0] if kind == "matching" else sum(ps)
        if p < 2:
            raise NoPredictionError(f"no prediction for {P} with p={p}")
        if n < order:
            return Prediction("exact", n * max(n - 1, 0) ** p, "trivial (K_n)")
        return Prediction("exact", ep(C.h_graph(n, order), p), "Prop 4.1", caveat=LARGE_N)

    if kind == "star" or (kind == "bipartite" and ps[0] == 1):
        k = ps[0] if kind == "star" else ps[1] + 1
        if n <= k - 2:
            return Prediction("exact", n * max(n - 1, 0) ** p, "Prop 4.2")
        if (n * k) % 2 == 0:
            return Prediction("exact", n * (k - 2) ** p, "Prop 4.2")
        return Prediction("exact", (n - 1) * (k - 2) ** p + (k - 3) ** p, "Prop 4.2")

    if kind == "near_star":
        k = ps[0]
        val = (n - 1) ** p + (n - 1) if n >= 1 else 0
        if n > 2 * k:
            return Prediction("exact", val, "Prop 4.3")
        return Prediction("lower_bound", val, "Prop 4.3 witness S_n", caveat="requires n > 2k for exactness")

    if kind == "double_star":
        k = ps[0]
        return Prediction(
            "asymptotic_leading_term", None, "Prop 4.4", coefficient=k - 1, exponent=p, caveat="up to o(n^p)"
        )

    if kind == "bipartite":
        a, b = ps
        if p == b:
            return Prediction(
                "asymptotic_leading_term", None, "Prop 5.2", coefficient=a - 1, exponent=p, caveat="up to (1+o(1))"
            )
        if a == 2 and p > b:
            return Prediction(
                "asymptotic_leading_term", None, "Prop 5.2", coefficient=1, exponent=p, caveat="up to (1+o(1))"
            )
        g = C.complete_bipartite(a - 1, n - a + 1) if n > a - 1 else None
        return Prediction("lower_bound", ep(g, p) if g else 0, "Prop 5.2 witness K_{a-1,n-a+1}")

    if kind == "even_cycles":
        if n == 0:
            return Prediction("exact", 0, "definition")
        if p == 1:
            return Prediction("exact", 2 * ((3 * (n - 1)) // 2), "Section 1")
        caveat = LARGE_N if p == 2 else LARGE_N + "; stated without proof for p > 2"
        return Prediction("exact", ep(C.friendship_graph(n), p), "Theorem 1.3", caveat=caveat)

    if kind == "cycle" and ps[0] % 2 == 0:
        k = ps[0] // 2
        if p == k:
            return Prediction(
                "asymptotic_leading_term", None, "Prop 5.2", coefficient=k - 1, exponent=p, caveat="up to (1+o(1))"
            )
        return Prediction(
            "asymptotic_leading_term",
            None,
            "Conjecture 6.4",
            coefficient=k - 1,
            exponent=p,
            caveat="conjectured, up to (1+o(1))",
        )

    if kind == "cycle" and ps[0] == 3:
        return predicted_tp(Pattern.clique(3), n, p)

    raise NoPredictionError(f"no known prediction for pattern {P}")


def known_witnesses(P: Pattern, n: int) -> list[Graph]:
    """Constructions that are natural extremal candidates for ``P`` on ``n`` vertices.

    Callers must still verify pattern-freeness; some candidates only work
    for large ``n``.
    """
    if n < 1:
        return []
    kind, ps = P.kind, P.params
    out: list[Graph] = []
    if kind == "clique" and ps[0] > 2:
        out.append(C.turan_graph(n, ps[0]))
        if ps[0] - 1 >= 2:
            # unbalanced optima for p >= 4 live among multipartite graphs too
            out.append(C.complete_multipartite([1] * min(ps[0] - 2, n - 1) + [n - min(ps[0] - 2, n - 1)]))
    elif kind == "path" and ps[0] >= 3:
        k = ps[0]
        if n <= k - 1:
            out.append(C.complete_graph(n))
        elif k >= 4 and (n >= k or k == 5):
            out.append(C.h_graph(n, k))
        if k == 3:
            out.append(C.matching_graph(n // 2).add_isolated(n % 2) if n >= 2 else Graph(n))
    elif kind in ("matching", "forest"):
        order = 2 * ps[0] if kind == "matching" else sum(ps)
        if n >= order:
            out.append(C.h_graph(n, order))
        else:
            out.append(C.complete_graph(n))
    elif kind == "star" or (kind == "bipartite" and ps[0] == 1):
        k = ps[0] if kind == "star" else ps[1] + 1
        out.append(C.complete_graph(n) if n <= k - 2 else C.near_regular(n, k - 2))
    elif kind == "near_star":
        out.append(C.star_graph(n))
    elif kind == "double_star":
        k = ps[0]
        if n > k - 1 >= 1:
            out.append(C.complete_bipartite(k - 1, n - k + 1))
        out.append(C.star_graph(n))
    elif kind == "bipartite":
        a = ps[0]
        if n > a - 1 >= 1:
            out.append(C.complete_bipartite(a - 1, n - a + 1))
        out.append(C.friendship_graph(n))
    elif kind == "even_cycles":
        out.append(C.friendship_graph(n))
    elif kind == "cycle":
        k = ps[0]
        out.append(C.friendship_graph(n))
        if k % 2 == 0 and n >= k:
            out.append(C.h_graph(n, k))
        if k % 2 == 0 and n > k // 2 - 1 >= 1:
            out.append(C.complete_bipartite(k // 2 - 1, n - k // 2 + 1))
        if k % 2 == 1:
            out.append(C.complete_bipartite(n // 2, n - n // 2) if n >= 2 else Graph(n))
    elif kind == "custom":
        out.append(C.star_graph(n))
    return out
