from fractions import Fraction
import pytest
from hypothesis import given, settings, strategies as st
from regweight import Graph, Stage, audit, verify_proper, weight_bipartite, WeightSet


def test_k33(k33):
    state = weight_bipartite(k33, [0, 1, 2], [3, 4, 5], 1, 2)
    assert state.dw[3:] == [-3, -3, 2]
    assert state.dw[:3] == [0, -2, -2]
    assert all(state.touched[k33.edge_id(x, y)] for x in (3, 4) for y in (0, 1, 2))
    assert audit(state, Stage.BIPARTITE).passed
    assert verify_proper(k33, state.w, WeightSet([-1, 0, 2])).is_proper


def test_star():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    state = weight_bipartite(star, [1, 2, 3], [0], 1, 5)
    assert state.dw == [-3, -1, -1, -1]
    assert audit(state, Stage.BIPARTITE).passed


def test_preconditions(k33):
    with pytest.raises(ValueError):
        weight_bipartite(Graph(3, [(0, 1), (0, 2)]), [1, 2], [0], 1, 2)
    with pytest.raises(ValueError):
        weight_bipartite(k33, [0, 1, 3], [2, 4, 5], 1, 2)
    with pytest.raises(ValueError):
        weight_bipartite(k33, [0, 1], [3, 4, 5], 1, 2)
    with pytest.raises(ValueError):
        weight_bipartite(k33, [0, 1, 2], [3, 4, 5], 2, 1)


@st.composite
def bipartite_instances(draw):
    left = draw(st.integers(min_value=3, max_value=8))
    right = draw(st.integers(min_value=1, max_value=6))
    edges = set()
    for x in range(left, left + right):
        ys = draw(st.sets(st.integers(0, left - 1), min_size=3, max_size=left))
        edges |= {(y, x) for y in ys}
    d1 = draw(st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=12))
    gap = draw(st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=12))
    return Graph(left + right, edges), range(left), range(left, left + right), d1, d1 + gap


@settings(max_examples=100, deadline=None)
@given(bipartite_instances())
def test_random_bipartite(instance):
    g, i0, i1, d1, d2 = instance
    state = weight_bipartite(g, i0, i1, d1, d2)
    report = audit(state, Stage.BIPARTITE)
    assert report.passed, report
    assert verify_proper(g, state.w, WeightSet([-d1, 0, d2])).is_proper
    assert set(state.w) <= {-d1, 0, d2}
