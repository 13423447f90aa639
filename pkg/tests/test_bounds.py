from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from degturan import constructions as C
from degturan.bounds import (
    PowerSumConstraint,
    erdos_envelope,
    erdos_envelope_classes,
    known_witnesses,
    pigeonhole_check,
    power_sum_max,
    predicted_tp,
    turan_path_number,
)
from degturan.detectors import contains_clique, contains_complete_bipartite, is_pattern_free
from degturan.errors import EnvelopeError, NoPredictionError
from degturan.graph import Graph, all_graphs, ep, is_isomorphic
from degturan.patterns import Pattern, parse_pattern

from conftest import random_graph


def test_turan_path_number_examples():
    assert turan_path_number(10, 4) == 9
    assert turan_path_number(7, 5) == 9
    assert turan_path_number(4, 5) == 6
    with pytest.raises(ValueError):
        turan_path_number(3, 1)


def _brute(n, S, D, p):
    return max((sum(x**p for x in xs) for xs in product(range(D + 1), repeat=n) if sum(xs) <= S), default=0)


def test_power_sum_max_examples():
    assert power_sum_max(PowerSumConstraint(5, 10, 4, 2)) == 36
    assert power_sum_max(PowerSumConstraint(3, 100, 2, 2)) == 12
    assert power_sum_max(PowerSumConstraint(4, 7, 7, 2)) == 49
    with pytest.raises(ValueError):
        PowerSumConstraint(-1, 0, 0, 2)


@given(st.integers(0, 4), st.integers(0, 12), st.integers(0, 5), st.integers(1, 4))
def test_power_sum_max_brute_force(n, S, D, p):
    assert power_sum_max(PowerSumConstraint(n, S, D, p)) == _brute(n, S, D, p)


def test_pigeonhole_examples():
    assert pigeonhole_check(C.complete_graph(5), 2, 3) == (20, 10, True)
    chk = pigeonhole_check(C.star_graph(6), 2, 2)
    assert (chk.lhs, chk.rhs, chk.certifies_containment) == (10, 15, False)
    chk = pigeonhole_check(Graph(5), 3, 2)
    assert chk.lhs == 0 and not chk.certifies_containment


@pytest.mark.parametrize("a,k", [(2, 2), (2, 3), (3, 3)])
def test_pigeonhole_soundness_labeled(a, k):
    # every labeled graph on 6 vertices
    for g in all_graphs(6):
        if pigeonhole_check(g, a, k).certifies_containment:
            assert contains_complete_bipartite(g, min(a, k), max(a, k))


def test_envelope_examples():
    c5 = C.cycle_graph(5)
    env = erdos_envelope(c5, 3)
    assert is_isomorphic(env, C.complete_bipartite(2, 3))
    classes = erdos_envelope_classes(c5, 3)
    assert sorted(len(c) for c in classes) == [2, 3]
    v1 = classes[0][0]
    assert set(classes[1]) == set(c5.neighbors(v1))
    k23 = C.complete_bipartite(2, 3)
    assert erdos_envelope(k23, 3) == k23
    assert erdos_envelope(Graph(4), 3).edge_count == 0
    with pytest.raises(EnvelopeError):
        erdos_envelope(C.complete_graph(3), 3)


def test_envelope_dominance_random(rng):
    for _ in range(300):
        k = int(rng.integers(3, 6))
        g = random_graph(rng, int(rng.integers(1, 14)), float(rng.uniform(0.1, 0.6)))
        if contains_clique(g, k):
            continue
        env = erdos_envelope(g, k)
        assert all(a <= b for a, b in zip(g.degrees(), env.degrees()))
        assert len(erdos_envelope_classes(g, k)) <= k - 1
        assert not contains_clique(env, k)


def test_predictions_examples():
    assert predicted_tp(Pattern.star(4), 8, 2).value == 32
    pr = predicted_tp(Pattern.near_star(5), 11, 2)
    assert pr.exact and pr.value == 110
    assert predicted_tp(Pattern.even_cycles(), 9, 2).value == 96
    assert predicted_tp(Pattern.path(5), 4, 3).value == 108
    pr = predicted_tp(Pattern.bipartite(2, 3), 20, 3)
    assert pr.kind == "asymptotic_leading_term" and (pr.coefficient, pr.exponent) == (1, 3)
    assert predicted_tp(Pattern.clique(3), 10, 4).value == 8320
    assert predicted_tp(Pattern.clique(3), 10, 2).value == 250
    assert predicted_tp(Pattern.path(5), 12, 2).value == 138
    assert predicted_tp(Pattern.path(6), 12, 2).caveat is not None
    with pytest.raises(NoPredictionError):
        predicted_tp(Pattern.from_graph(C.paw()), 6, 2)
    with pytest.raises(NoPredictionError):
        predicted_tp(Pattern.cycle(5), 6, 2)


@pytest.mark.parametrize("text", ["K3", "K4", "P4", "P5", "P6", "M2", "S4", "S5", "Sstar:5", "Cstar", "C4", "C6",
                                  "Kab:2,3", "Dstar:3", "forest:2,2"])
def test_known_witnesses_are_valid_graphs(text):
    P = parse_pattern(text)
    for n in range(1, 14):
        for g in known_witnesses(P, n):
            assert g.n == n


def test_exact_predictions_are_realized_by_witnesses():
    # where a prediction is exact and a witness is pattern-free, the witness attains it
    for text, ns in [("K3", range(3, 12)), ("P4", range(4, 14)), ("P5", range(12, 16)), ("S4", range(4, 12)),
                     ("Cstar", range(1, 20)), ("Sstar:5", range(11, 15))]:
        P = parse_pattern(text)
        for n in ns:
            pr = predicted_tp(P, n, 2)
            best = max(ep(g, 2) for g in known_witnesses(P, n) if is_pattern_free(g, P))
            assert best == pr.value
