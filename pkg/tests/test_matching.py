import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from regweight import Graph, SaturationFailure, saturating_matching
from regweight.matching import HopcroftKarp, Matching


def test_saturating_matching(k33):
    m = saturating_matching(k33, [0, 1, 2], [3, 4, 5])
    assert set(m.pairs) == {3, 4, 5}
    assert set(m.pairs.values()) == {0, 1, 2}
    assert len(m) == 3
    assert all(k33.has_edge(u, v) for u, v in m.edges)

    # Only the edges between the two sides count.
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    m = saturating_matching(g, [0, 2], [1])
    assert m.pairs[1] == 0


def test_saturation_failure():
    # Vertices 2 and 3 only see vertex 0.
    g = Graph(5, [(0, 2), (0, 3), (1, 4)])
    with pytest.raises(SaturationFailure) as info:
        saturating_matching(g, [0, 1], [2, 3, 4])
    e = info.value
    assert e.violator == frozenset({2, 3})
    assert e.neighborhood == frozenset({0})
    assert len(e.neighborhood) < len(e.violator)

    with pytest.raises(SaturationFailure) as info:
        saturating_matching(Graph(2, []), [0], [1])
    assert info.value.violator == frozenset({1})
    assert info.value.neighborhood == frozenset()

    with pytest.raises(ValueError):
        saturating_matching(g, [0, 1], [1, 2])


def test_matching_validation():
    with pytest.raises(ValueError):
        Matching({1: 0, 2: 0}, [1, 2])
    with pytest.raises(ValueError):
        Matching({1: 0}, [1, 2])


def test_deterministic(k33):
    a = saturating_matching(k33, [0, 1, 2], [3, 4, 5]).pairs
    b = saturating_matching(k33, [0, 1, 2], [3, 4, 5]).pairs
    assert a == b


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 7), st.integers(8, 15)), max_size=30))
def test_hopcroft_karp_is_maximum(pairs):
    left: dict[int, list[int]] = {u: [] for u in range(8)}
    for u, v in sorted(set(pairs)):
        left[u].append(v)
    hk = HopcroftKarp(left)
    size = hk.run()
    h = nx.Graph()
    h.add_nodes_from(range(16))
    h.add_edges_from(set(pairs))
    expected = len(nx.bipartite.hopcroft_karp_matching(h, top_nodes=range(8))) // 2
    assert size == expected
    assert len(hk.pair_left) == size
    assert all(hk.pair_right[r] == u for u, r in hk.pair_left.items())
    assert all(r in left[u] for u, r in hk.pair_left.items())


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(6, 11)), max_size=20))
def test_violator_when_hall_fails(pairs):
    g = Graph(12, set(pairs))
    side_a, side_b = range(6), range(6, 12)
    try:
        m = saturating_matching(g, side_a, side_b)
    except SaturationFailure as e:
        neighbors = {u for v in e.violator for u in g.neighbors(v) if u in side_a}
        assert neighbors == set(e.neighborhood)
        assert len(neighbors) < len(e.violator)
    else:
        assert set(m.pairs) == set(side_b)
