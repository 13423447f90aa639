import pytest
from hypothesis import given
from hypothesis import strategies as st

from degturan import constructions as C
from degturan.detectors import contains_clique, contains_even_cycle, contains_path, max_matching_size
from degturan.errors import GraphSizeError, NotGraphicError, PatternError
from degturan.graph import degree_sequence, ep, is_isomorphic


def test_basic_families():
    assert C.complete_graph(5).edge_count == 10
    assert C.path_graph(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert C.cycle_graph(5).degrees() == [2] * 5
    assert C.star_graph(6).degrees() == [5, 1, 1, 1, 1, 1]
    assert C.star_graph(1).n == 1
    assert C.matching_graph(3).edge_count == 3
    assert degree_sequence(C.even_linear_forest([2, 4])).values == (2, 2, 1, 1, 1, 1)


def test_near_star_and_double_star():
    s5 = C.near_star(5)
    assert s5.n == 5 and s5.edge_count == 4
    assert degree_sequence(s5).values == (3, 2, 1, 1, 1)
    d3 = C.double_star(3)
    assert d3.n == 6 and d3.edge_count == 5
    assert degree_sequence(d3).values == (3, 3, 1, 1, 1, 1)


def test_multipartite_examples():
    assert ep(C.complete_multipartite([5, 5]), 2) == 250
    assert is_isomorphic(C.complete_multipartite([1, 6]), C.star_graph(7))
    assert C.complete_multipartite([1, 1, 1]) == C.complete_graph(3)
    with pytest.raises(PatternError):
        C.complete_multipartite([])
    with pytest.raises(PatternError):
        C.complete_multipartite([2, 0])
    with pytest.raises(GraphSizeError):
        C.complete_multipartite([40, 30])


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5))
def test_multipartite_degrees(parts):
    g = C.complete_multipartite(parts)
    n = sum(parts)
    expect = sorted((n - s for s in parts for _ in range(s)), reverse=True)
    assert degree_sequence(g).values == tuple(expect)
    assert not contains_clique(g, len(parts) + 1)


def test_turan_examples():
    t73 = C.turan_graph(7, 3)
    assert is_isomorphic(t73, C.complete_bipartite(4, 3))
    assert ep(t73, 2) == 84
    assert sorted(C.turan_parts(10, 4)) == [3, 3, 4]
    assert is_isomorphic(C.turan_graph(10, 3), C.complete_bipartite(5, 5))
    assert ep(C.turan_graph(10, 3), 4) == 6250
    assert C.turan_graph(2, 4) == C.complete_graph(2)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 15) for k in range(2, 7)])
def test_turan_balanced_and_clique_free(n, k):
    parts = C.turan_parts(n, k)
    assert sum(parts) == n and max(parts) - min(parts) <= 1
    assert len(parts) == min(k - 1, n)
    if n >= k:
        assert not contains_clique(C.turan_graph(n, k), k)


def test_h_graph_examples():
    for p in (1, 2, 3, 4):
        assert ep(C.h_graph(12, 5), p) == 11**p + 2 ** (p + 1) + 9
    for n in range(4, 12):
        assert is_isomorphic(C.h_graph(n, 4), C.star_graph(n))
    h86 = C.h_graph(8, 6)
    assert h86.degrees() == [7, 7, 2, 2, 2, 2, 2, 2]
    assert ep(h86, 2) == 122
    assert C.h_graph(1, 5) == C.star_graph(1)
    assert C.h_graph(2, 5) == C.star_graph(2)
    with pytest.raises(PatternError):
        C.h_graph(5, 6)
    with pytest.raises(PatternError):
        C.h_graph(5, 3)


@pytest.mark.parametrize("k", range(4, 10))
def test_h_graph_is_path_free(k):
    for n in range(k, 16):
        h = C.h_graph(n, k)
        assert not contains_path(h, k)
        b = k // 2 - 1
        assert h.edge_count == b * (b - 1) // 2 + b * (n - b) + (k % 2)


def test_friendship_examples():
    assert ep(C.friendship_graph(7), 2) == 60
    assert ep(C.friendship_graph(6), 2) == 42
    assert C.friendship_graph(9).edge_count == 12
    for n in range(1, 30):
        f = C.friendship_graph(n)
        assert f.edge_count == (3 * (n - 1)) // 2
        assert not contains_even_cycle(f)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 12) for d in range(n)])
def test_near_regular(n, d):
    g = C.near_regular(n, d)
    degs = sorted(g.degrees())
    if n * d % 2 == 0:
        assert degs == [d] * n
    else:
        assert degs == [d - 1] + [d] * (n - 1)


def test_near_regular_rejects():
    with pytest.raises(PatternError):
        C.near_regular(4, 4)


def test_pendant_and_paw():
    paw = C.paw()
    assert degree_sequence(paw).values == (3, 2, 2, 1)
    assert is_isomorphic(C.pendant_extension(C.complete_graph(3)), paw)
    with pytest.raises(PatternError):
        C.pendant_extension(C.complete_graph(3), at=5)


def test_build_family():
    assert C.build_family(C.FamilySpec("matching", (3,))).edge_count == 3
    assert max_matching_size(C.build_family(C.FamilySpec("matching", (3,)))) == 3
    assert C.build_family(C.FamilySpec("near_regular", (6, 3))).degrees() == [3] * 6
    assert C.build_family(C.FamilySpec("even_linear_forest", (2, 2))).edge_count == 2
    base = C.complete_graph(3)
    assert C.build_family(C.FamilySpec("pendant_extension", (), base)).n == 4
    with pytest.raises(PatternError):
        C.build_family(C.FamilySpec("pendant_extension"))
    with pytest.raises(PatternError):
        C.build_family(C.FamilySpec("wheel", (5,)))
    with pytest.raises(PatternError):
        C.build_family(C.FamilySpec("clique", (1, 2)))


@pytest.mark.parametrize(
    "call",
    [
        lambda: C.path_graph(0),
        lambda: C.cycle_graph(2),
        lambda: C.star_graph(0),
        lambda: C.near_star(3),
        lambda: C.double_star(1),
        lambda: C.matching_graph(0),
        lambda: C.even_linear_forest([3]),
        lambda: C.even_linear_forest([]),
        lambda: C.complete_bipartite(0, 3),
        lambda: C.turan_graph(0, 3),
        lambda: C.friendship_graph(0),
    ],
)
def test_invalid_parameters(call):
    with pytest.raises(PatternError):
        call()


def test_not_graphic_error_type():
    assert issubclass(NotGraphicError, ValueError)
