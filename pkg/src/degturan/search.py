"""Exact and heuristic computation of ``t_p(n, H)``.

Exhaustive search grows graphs one vertex at a time. A level holds one packed
canonical code per isomorphism class; children are produced by the
``extend_parents`` kernel and deduplicated with ``np.unique``. Pattern-freeness
is hereditary, so discarding a child that contains the pattern never loses a
class at a later level.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _kernels as K
from .constructions import complete_multipartite
from .errors import BudgetExceeded
from .graph import CanonicalKey, Graph, canonical_form, ep, ep_from_histogram, graph6_encode
from .patterns import Pattern

log = logging.getLogger(__name__)

MAX_ENUM_N = 16  # two 64-bit words hold the upper triangle
DEFAULT_BUDGET = 5_000_000
_CHUNK_ROWS = 1 << 18
_UNRESTRICTED = (
    K.K_NONE,
    np.zeros(2, np.int64),
    np.zeros(1, np.uint64),
    0,
    np.zeros((1, 1), np.int64),
    np.zeros(1, np.int64),
)


@dataclass
class SearchResult:
    value: int
    witnesses: list[CanonicalKey]
    exhaustive: bool
    enumerated_count: int
    elapsed: float
    pattern: str = ""
    n: int = 0
    p: int = 1
    details: dict = field(default_factory=dict)

    def witness_graphs(self) -> list[Graph]:
        return [w.to_graph() for w in self.witnesses]

    @property
    def unique(self) -> bool:
        return len(self.witnesses) == 1


@dataclass(frozen=True)
class LocalSearchConfig:
    seed: int = 0
    restarts: int = 8
    step_budget: int = 4000
    moves: tuple[str, ...] = ("add", "delete", "rewire")

    def __post_init__(self):
        if self.restarts < 1 or self.step_budget < 1:
            raise ValueError("restarts and step_budget must be positive")
        bad = set(self.moves) - {"add", "delete", "rewire"}
        if bad or not self.moves:
            raise ValueError(f"unknown moves {sorted(bad)}")


# ---------------------------------------------------------------------------
# enumeration


def _extend_chunk(codes: np.ndarray, n: int, kargs) -> tuple[np.ndarray, int]:
    kind, ip, padj, pn, orders, pdeg = kargs
    cap = max(_CHUNK_ROWS, 2 << n)
    out = np.empty((cap, 2), np.uint64)
    pieces = []
    tested = 0
    start = 0
    while start < len(codes):
        start, nout, t = K.extend_parents(codes, start, n, kind, ip, padj, pn, orders, pdeg, out)
        tested += int(t)
        if nout:
            pieces.append(np.unique(out[:nout], axis=0))
    if not pieces:
        return np.empty((0, 2), np.uint64), tested
    return np.unique(np.concatenate(pieces), axis=0), tested


def _extend_worker(args):
    codes, n, pattern_text = args
    from .patterns import parse_pattern

    kargs = parse_pattern(pattern_text).kernel_args if pattern_text else _UNRESTRICTED
    return _extend_chunk(codes, n, kargs)


def _check_size(n: int):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_ENUM_N:
        raise BudgetExceeded(f"exhaustive enumeration is limited to n <= {MAX_ENUM_N}, got n={n}")


def enumerate_codes(
    n: int, P: Pattern | None, *, budget: int | None = DEFAULT_BUDGET, jobs: int = 1
) -> tuple[np.ndarray, dict]:
    """Packed canonical codes of all ``P``-free classes on ``n`` vertices, sorted.

    ``P=None`` enumerates every graph.
    """
    _check_size(n)
    kargs = P.kernel_args if P is not None else _UNRESTRICTED
    level = np.zeros((1, 2), np.uint64)  # the graph on 0 vertices
    counts = [1]
    tested_total = 0
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for m in range(n):
            if pool is not None and len(level) >= 4 * jobs:
                parts = np.array_split(level, jobs)
                text = str(P) if P is not None else ""
                res = list(pool.map(_extend_worker, [(part, m, text) for part in parts]))
                tested_total += sum(t for _, t in res)
                level = np.unique(np.concatenate([c for c, _ in res]), axis=0)
            else:
                level, tested = _extend_chunk(level, m, kargs)
                tested_total += tested
            counts.append(len(level))
            log.debug("level %d: %d classes", m + 1, len(level))
            if budget is not None and len(level) > budget:
                raise BudgetExceeded(
                    f"{P} on {m + 1} vertices has {len(level)} classes, over budget {budget}"
                )
    finally:
        if pool is not None:
            pool.shutdown()
    return level, {"level_counts": counts, "extensions_tested": tested_total}


def code_to_graph(code, n: int) -> Graph:
    rows = np.zeros(n, np.uint64)
    K.unpack_rows(np.uint64(code[0]), np.uint64(code[1]), n, rows)
    return Graph(n, [int(r) for r in rows])


def code_key(code, n: int) -> CanonicalKey:
    return CanonicalKey(graph6_encode(code_to_graph(code, n)).encode("ascii"))


def enumerate_pattern_free(
    n: int, P: Pattern, *, budget: int | None = DEFAULT_BUDGET, jobs: int = 1
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of ``P``-free graphs."""
    codes, _ = enumerate_codes(n, P, budget=budget, jobs=jobs)
    for code in codes:
        yield code_to_graph(code, n)


def _ep_values(codes: np.ndarray, n: int, p: int) -> list[int]:
    if n == 0:
        return [0] * len(codes)
    hist = K.degree_histograms(codes, n)
    uniq, inverse = np.unique(hist, axis=0, return_inverse=True)
    vals = [ep_from_histogram(h, p) for h in uniq]
    return [vals[i] for i in np.asarray(inverse).ravel()]


def exhaustive_tp(
    n: int, P: Pattern, p: int, *, budget: int | None = DEFAULT_BUDGET, jobs: int = 1
) -> SearchResult:
    """Maximum of ``ep`` over all ``P``-free graphs on ``n`` vertices, with every extremal class."""
    if p < 1:
        raise ValueError("p must be >= 1")
    t0 = time.perf_counter()
    codes, stats = enumerate_codes(n, P, budget=budget, jobs=jobs)
    values = _ep_values(codes, n, p)
    best = max(values)
    witnesses = sorted(code_key(codes[i], n) for i, v in enumerate(values) if v == best)
    return SearchResult(
        value=best,
        witnesses=witnesses,
        exhaustive=True,
        enumerated_count=len(codes),
        elapsed=time.perf_counter() - t0,
        pattern=str(P),
        n=n,
        p=p,
        details=stats,
    )


def exhaustive_tp_many(
    n: int, P: Pattern, ps, *, budget: int | None = DEFAULT_BUDGET, jobs: int = 1
) -> dict[int, SearchResult]:
    """``exhaustive_tp`` for several exponents sharing one enumeration."""
    t0 = time.perf_counter()
    codes, stats = enumerate_codes(n, P, budget=budget, jobs=jobs)
    elapsed = time.perf_counter() - t0
    out = {}
    for p in ps:
        values = _ep_values(codes, n, p)
        best = max(values)
        witnesses = sorted(code_key(codes[i], n) for i, v in enumerate(values) if v == best)
        out[p] = SearchResult(best, witnesses, True, len(codes), elapsed, str(P), n, p, dict(stats))
    return out


# ---------------------------------------------------------------------------
# complete multipartite optimisation


def partitions(n: int, max_parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nonincreasing partitions of ``n`` into at most ``max_parts`` positive parts."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        if first * max_parts < n:
            break
        for rest in partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def multipartite_value(parts, p: int) -> int:
    n = sum(parts)
    return sum(s * (n - s) ** p for s in parts)


def multipartite_tp(n: int, k: int, p: int) -> SearchResult:
    """Best complete ``(k-1)``-partite graph on ``n`` vertices for ``ep``."""
    if k < 2 or p < 1 or n < 0:
        raise ValueError("need n >= 0, k >= 2, p >= 1")
    t0 = time.perf_counter()
    best = -1
    best_parts: list[tuple[int, ...]] = []
    count = 0
    for parts in partitions(n, k - 1):
        count += 1
        v = multipartite_value(parts, p)
        if v > best:
            best, best_parts = v, [parts]
        elif v == best:
            best_parts.append(parts)
    if n == 0:
        witnesses = [canonical_form(Graph(0))]
    else:
        witnesses = sorted({canonical_form(complete_multipartite(pt)) for pt in best_parts})
    return SearchResult(
        value=best,
        witnesses=witnesses,
        exhaustive=True,
        enumerated_count=count,
        elapsed=time.perf_counter() - t0,
        pattern=f"K{k}",
        n=n,
        p=p,
        details={"parts": [list(pt) for pt in best_parts]},
    )


# ---------------------------------------------------------------------------
# local search


def _ep_rows(rows: np.ndarray, n: int, p: int) -> int:
    return sum(int(d) ** p for d in K.degrees(rows, n))


def _greedy_fill(rows, n, kargs, rng, order=None):
    kind, ip, padj, pn, orders, pdeg = kargs
    if order is None:
        order = [(u, v) for u in range(n) for v in range(u + 1, n)]
        order = [order[i] for i in rng.permutation(len(order))]
    for u, v in order:
        if (int(rows[u]) >> v) & 1:
            continue
        rows[u] |= np.uint64(1 << v)
        rows[v] |= np.uint64(1 << u)
        if K.contains_kind(rows, n, kind, ip, padj, pn, orders, pdeg):
            rows[u] &= ~np.uint64(1 << v)
            rows[v] &= ~np.uint64(1 << u)


def _edges_of(rows, n):
    return [(u, v) for u in range(n) for v in range(u + 1, n) if (int(rows[u]) >> v) & 1]


def local_search_tp(
    n: int, P: Pattern, p: int, cfg: LocalSearchConfig | None = None, seed_graphs=None
) -> SearchResult:
    """Hill climbing over ``P``-free graphs; a certified lower bound on ``t_p``.

    Restart 0 starts from the best known construction for ``P`` (when one is
    pattern-free at this ``n``) and the remaining restarts from random maximal
    ``P``-free graphs. Only strict improvements are accepted.
    """
    from .bounds import known_witnesses
    from .detectors import is_pattern_free

    cfg = cfg or LocalSearchConfig()
    if n > 64:
        raise ValueError("n must be <= 64")
    t0 = time.perf_counter()
    kargs = P.kernel_args
    kind, ip, padj, pn, orders, pdeg = kargs
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    starts = list(seed_graphs or [])
    starts += [g for g in known_witnesses(P, n) if g.n == n and is_pattern_free(g, P)]
    best_val, best_rows = -1, None
    evaluated = 0
    for r in range(cfg.restarts):
        rng = np.random.default_rng(seeds[r])
        if r < len(starts):
            rows = starts[r].adj.copy()
        else:
            rows = np.zeros(max(n, 1), np.uint64)[:n].copy()
            _greedy_fill(rows, n, kargs, rng)
        cur = _ep_rows(rows, n, p)
        for _ in range(cfg.step_budget):
            if n < 2:
                break
            move = cfg.moves[int(rng.integers(len(cfg.moves)))]
            trial = rows.copy()
            if move == "add":
                u, v = (int(x) for x in rng.choice(n, 2, replace=False))
                if (int(trial[u]) >> v) & 1:
                    continue
                trial[u] |= np.uint64(1 << v)
                trial[v] |= np.uint64(1 << u)
                evaluated += 1
                if K.contains_kind(trial, n, kind, ip, padj, pn, orders, pdeg):
                    continue
            else:
                edges = _edges_of(trial, n)
                if not edges:
                    continue
                a, b = edges[int(rng.integers(len(edges)))]
                trial[a] &= ~np.uint64(1 << b)
                trial[b] &= ~np.uint64(1 << a)
                if move == "rewire":
                    keep = a if rng.random() < 0.5 else b
                    c = int(rng.integers(n))
                    if c in (a, b) or (int(trial[keep]) >> c) & 1:
                        continue
                    trial[keep] |= np.uint64(1 << c)
                    trial[c] |= np.uint64(1 << keep)
                    evaluated += 1
                    if K.contains_kind(trial, n, kind, ip, padj, pn, orders, pdeg):
                        continue
                else:
                    evaluated += 1
                    _greedy_fill(trial, n, kargs, rng)
            val = _ep_rows(trial, n, p)
            if val > cur:
                rows, cur = trial, val
        if cur > best_val:
            best_val, best_rows = cur, rows
    best = Graph(n, [int(x) for x in best_rows])
    if not is_pattern_free(best, P):  # pragma: no cover - guarded by construction
        raise AssertionError("local search produced a graph containing the pattern")
    return SearchResult(
        value=best_val,
        witnesses=[canonical_form(best)],
        exhaustive=False,
        enumerated_count=evaluated,
        elapsed=time.perf_counter() - t0,
        pattern=str(P),
        n=n,
        p=p,
        details={"restarts": cfg.restarts, "seed": cfg.seed, "start_graphs": len(starts)},
    )


def best_known(n: int, P: Pattern, p: int) -> int:
    """Largest ``ep`` among the pattern-free constructions known for ``P``."""
    from .bounds import known_witnesses
    from .detectors import is_pattern_free

    vals = [ep(g, p) for g in known_witnesses(P, n) if g.n == n and is_pattern_free(g, P)]
    return max(vals, default=0)
