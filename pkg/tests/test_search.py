from itertools import combinations, permutations

import numpy as np
import pytest

from degturan import constructions as C
from degturan.detectors import is_pattern_free
from degturan.errors import BudgetExceeded
from degturan.graph import Graph, canonical_form, ep, is_isomorphic
from degturan.patterns import Pattern, parse_pattern
from degturan.search import (
    LocalSearchConfig,
    best_known,
    enumerate_codes,
    enumerate_pattern_free,
    exhaustive_tp,
    exhaustive_tp_many,
    local_search_tp,
    multipartite_tp,
    partitions,
)

from conftest import copy_masks, degree_table, edge_index, free_mask_table


def _cycle_type_reps(n):
    """One permutation per cycle type with the number of permutations of that type."""
    reps = {}
    for perm in permutations(range(n)):
        seen, lens = set(), []
        for s in range(n):
            if s in seen:
                continue
            c, x = 0, s
            while x not in seen:
                seen.add(x)
                x = perm[x]
                c += 1
            lens.append(c)
        key = tuple(sorted(lens))
        if key in reps:
            reps[key][1] += 1
        else:
            reps[key] = [perm, 1]
    return reps.values()


def burnside_count(n, P):
    """Isomorphism classes of P-free graphs on n vertices, by orbit counting."""
    if n < 2:
        return 1
    idx = edge_index(n)
    edges = list(idx)
    copies = copy_masks(n, P) if P is not None and P.n <= n else []
    total = 0
    for perm, mult in _cycle_type_reps(n):
        img = [idx[tuple(sorted((perm[u], perm[v])))] for u, v in edges]
        orbits, seen = [], set()
        for e in range(len(edges)):
            if e in seen:
                continue
            m, x = 0, e
            while x not in seen:
                seen.add(x)
                m |= 1 << x
                x = img[x]
            orbits.append(m)
        sel = np.arange(1 << len(orbits), dtype=np.int64)
        masks = np.zeros(len(sel), np.int64)
        for i, om in enumerate(orbits):
            masks |= ((sel >> i) & 1) * om
        free = np.ones(len(masks), bool)
        for c in copies:
            free &= (masks & c) != c
        total += mult * int(free.sum())
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    assert total % fact == 0
    return total // fact


@pytest.mark.parametrize("n", range(1, 9))
def test_unrestricted_class_counts(n):
    codes, stats = enumerate_codes(n, None, budget=None)
    assert len(codes) == [1, 2, 4, 11, 34, 156, 1044, 12346][n - 1]
    assert stats["level_counts"][-1] == len(codes)


@pytest.mark.parametrize("text", ["K3", "K4", "P4", "P5", "C4", "C5", "S4", "M2", "Kab:2,3", "Sstar:5", "Dstar:2"])
@pytest.mark.parametrize("n", range(2, 8))
def test_class_counts_match_burnside(text, n):
    P = parse_pattern(text)
    codes, _ = enumerate_codes(n, P, budget=None)
    assert len(codes) == burnside_count(n, P.graph())


@pytest.mark.parametrize("n", range(2, 8))
def test_even_cycle_class_counts_match_labeled_dedup(n):
    # C*-free means missing every even cycle up to length n
    idx = edge_index(n)
    total_copies = []
    for L in range(4, n + 1, 2):
        total_copies += copy_masks(n, C.cycle_graph(L))
    codes, _ = enumerate_codes(n, Pattern.even_cycles(), budget=None)
    labeled = free_mask_table(n, total_copies)
    keys = set()
    pairs = list(idx)
    for mask in np.flatnonzero(labeled):
        keys.add(canonical_form(Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if (int(mask) >> i) & 1])))
    assert len(codes) == len(keys)


def _labeled_max(n, P, p):
    copies = copy_masks(n, P) if P.n <= n else []
    free = free_mask_table(n, copies)
    deg = degree_table(n)
    vals = (deg**p).sum(axis=1)
    vals = np.where(free, vals, -1)
    best = int(vals.max())
    pairs = list(edge_index(n))
    wit = {canonical_form(Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if (int(m) >> i) & 1]))
           for m in np.flatnonzero(vals == best)}
    return best, sorted(wit)


@pytest.mark.parametrize("text", ["K3", "P4", "P5", "C4", "S4", "M2", "Kab:2,3", "Sstar:4"])
@pytest.mark.parametrize("n,p", [(5, 2), (6, 2), (6, 3), (7, 2)])
def test_exhaustive_matches_labeled_brute_force(text, n, p):
    P = parse_pattern(text)
    r = exhaustive_tp(n, P, p)
    best, wit = _labeled_max(n, P.graph(), p)
    assert r.value == best
    assert r.witnesses == wit


def test_spec_examples():
    assert sum(1 for _ in enumerate_pattern_free(4, Pattern.path(4))) == 6
    assert exhaustive_tp(4, Pattern.path(4), 2).value == 12
    assert len(enumerate_codes(7, Pattern.clique(3))[0]) == 107
    assert len(enumerate_codes(2, Pattern.path(2))[0]) == 1
    r = exhaustive_tp(5, Pattern.clique(3), 2)
    assert r.value == 30 and r.unique and r.enumerated_count == 14
    assert is_isomorphic(r.witness_graphs()[0], C.complete_bipartite(2, 3))
    r = exhaustive_tp(6, Pattern.path(4), 2)
    assert r.value == 30 and r.witnesses == [canonical_form(C.star_graph(6))]
    r = exhaustive_tp(7, Pattern.even_cycles(), 2)
    assert r.value == 60 and r.witnesses == [canonical_form(C.friendship_graph(7))]


def test_every_enumerated_graph_is_free_and_witnesses_reverify():
    for text, n in [("K3", 7), ("P5", 8), ("Cstar", 8), ("Kab:2,3", 7), ("g6:CN", 6), ("Dstar:3", 8)]:
        P = parse_pattern(text)
        for g in enumerate_pattern_free(n, P):
            assert is_pattern_free(g, P)
        r = exhaustive_tp(n, P, 2)
        for w in r.witness_graphs():
            assert is_pattern_free(w, P) and ep(w, 2) == r.value


@pytest.mark.parametrize("k", [3, 4])
def test_clique_search_matches_multipartite(k):
    for n in range(k, 9):
        res = exhaustive_tp_many(n, Pattern.clique(k), (1, 2, 3, 4))
        for p, r in res.items():
            assert r.value == multipartite_tp(n, k, p).value


def test_multipartite_examples():
    r = multipartite_tp(10, 3, 4)
    assert r.value == 8320 and [sorted(pt) for pt in r.details["parts"]] == [[2, 8]]
    r = multipartite_tp(10, 3, 2)
    assert r.value == 250 and r.details["parts"] == [[5, 5]]
    r = multipartite_tp(7, 4, 2)
    assert r.value == 148 and r.details["parts"] == [[3, 2, 2]]
    assert list(partitions(4, 2)) == [(4,), (3, 1), (2, 2)]
    assert sum(1 for _ in partitions(10, 10)) == 42


def test_monotone_in_n():
    for text in ("K3", "P4", "P5", "Cstar", "C4", "S5"):
        P = parse_pattern(text)
        vals = [exhaustive_tp(n, P, 2).value for n in range(1, 10)]
        assert vals == sorted(vals)


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        exhaustive_tp(17, Pattern.clique(3), 2)
    with pytest.raises(BudgetExceeded):
        exhaustive_tp(9, Pattern.clique(3), 2, budget=100)
    with pytest.raises(ValueError):
        exhaustive_tp(5, Pattern.clique(3), 0)


def test_parallel_matches_serial():
    for text, n in [("K3", 9), ("C4", 9), ("g6:CN", 8)]:
        P = parse_pattern(text)
        a, _ = enumerate_codes(n, P)
        b, _ = enumerate_codes(n, P, jobs=2)
        assert np.array_equal(a, b)
        ra, rb = exhaustive_tp(n, P, 2), exhaustive_tp(n, P, 2, jobs=2)
        assert (ra.value, ra.witnesses, ra.enumerated_count) == (rb.value, rb.witnesses, rb.enumerated_count)


def test_local_search_examples():
    r = local_search_tp(20, Pattern.even_cycles(), 2)
    assert r.value >= 434 and not r.exhaustive
    r = local_search_tp(9, Pattern.clique(3), 2)
    assert r.value == 180 == exhaustive_tp(9, Pattern.clique(3), 2).value


def test_local_search_deterministic_and_bounded():
    cfg = LocalSearchConfig(seed=7, restarts=3, step_budget=300)
    for text, n in [("C4", 9), ("P6", 10), ("Kab:2,3", 8), ("g6:CN", 7)]:
        P = parse_pattern(text)
        a = local_search_tp(n, P, 2, cfg)
        b = local_search_tp(n, P, 2, cfg)
        assert (a.value, a.witnesses) == (b.value, b.witnesses)
        assert best_known(n, P, 2) <= a.value <= exhaustive_tp(n, P, 2).value
        assert is_pattern_free(a.witness_graphs()[0], P)


def test_local_search_without_seeds_finds_lower_bound():
    cfg = LocalSearchConfig(seed=1, restarts=2, step_budget=500)
    r = local_search_tp(8, Pattern.path(5), 2, cfg, seed_graphs=None)
    assert 0 < r.value <= exhaustive_tp(8, Pattern.path(5), 2).value


def test_local_search_config_validation():
    with pytest.raises(ValueError):
        LocalSearchConfig(restarts=0)
    with pytest.raises(ValueError):
        LocalSearchConfig(moves=("teleport",))
