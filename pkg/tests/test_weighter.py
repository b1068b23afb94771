from fractions import Fraction
import networkx as nx
import pytest
from regweight import (FallbackExhausted, Graph, NotNiceError, NotRegularError, WeighterConfig,
                       WeightSet, gen_random_regular, verify_proper, weight_regular,
                       weight_with_set)
from regweight.weighter import build_regular_state
from tests.conftest import cubic_corpus, cycle, from_nx

D_PAIRS = [(1, 2), (1, 3), (2, 3), (Fraction(1, 2), 3), (1, 100)]


@pytest.mark.parametrize("d1, d2", D_PAIRS)
def test_small_graphs(k4, k33, petersen, prism, d1, d2):
    q = WeightSet([-d1, 0, d2])
    for g in (k4, k33, petersen, prism):
        cert = weight_regular(g, d1, d2, WeighterConfig(audit=True))
        assert cert.proper
        assert cert.branch == "regular"
        assert set(cert.weights) <= set(q)
        assert verify_proper(g, cert.weights, q).is_proper


@pytest.mark.slow
@pytest.mark.parametrize("d1, d2", D_PAIRS)
def test_cubic_corpus(d1, d2):
    config = WeighterConfig(audit=True)
    for g in cubic_corpus():
        assert weight_regular(g, d1, d2, config).proper, g


@pytest.mark.slow
@pytest.mark.parametrize("n, k", [(12, 4), (16, 4), (14, 5), (12, 6), (16, 7), (10, 9)])
def test_higher_degree(n, k):
    config = WeighterConfig(audit=True)
    for seed in range(5):
        g = gen_random_regular(n, k, seed)
        assert weight_regular(g, 1, 2, config).proper
        assert weight_regular(g, 2, 3, config).proper


def test_complete_graphs():
    for n in range(4, 10):
        g = from_nx(nx.complete_graph(n))
        assert weight_regular(g, 1, 2, WeighterConfig(audit=True)).proper


def test_bipartite_branch(k33):
    state = build_regular_state(k33, 1, 2)
    assert state.partition.ell == 1
    assert state.milestones[-1].startswith("bipartite construction finished")


def test_optimistic_mode(petersen):
    exact = WeighterConfig()
    optimistic = WeighterConfig(mode="optimistic", audit=True)
    for g in [petersen] + [gen_random_regular(14, 4, seed) for seed in range(5)]:
        assert weight_regular(g, 1, 2, optimistic).proper
        assert weight_regular(g, 1, 2, exact).proper


def test_preconditions(k4):
    with pytest.raises(ValueError):
        weight_regular(k4, 2, 1)
    with pytest.raises(ValueError):
        weight_regular(k4, 0, 1)
    with pytest.raises(ValueError):
        weight_regular(cycle(5), 1, 2)
    with pytest.raises(NotRegularError):
        weight_regular(Graph(4, [(0, 1), (1, 2), (2, 3)]), 1, 2)


@pytest.mark.parametrize("values, branch", [("5,7,8", "descending"), ("0,1,3", "ascending"),
                                            ("-3,-1,0", "descending"), ("1,2,3", "arithmetic"),
                                            ("-1,0,2", "ascending"), ("1/3,1/2,7", "ascending")])
def test_weight_sets(k4, petersen, prism, values, branch):
    q = WeightSet.parse(values)
    for g in (k4, petersen, prism):
        cert = weight_with_set(g, q)
        assert cert.branch == branch
        assert cert.proper
        assert all(w in q for w in cert.weights)


def test_low_degree():
    q = WeightSet.parse("1,2,3")
    cert = weight_with_set(Graph(5, []), q)
    assert cert.branch == "edgeless"
    assert cert.weights == []
    cert = weight_with_set(cycle(9), q)
    assert cert.branch == "cycles"
    assert cert.proper

    with pytest.raises(NotNiceError):
        weight_with_set(Graph(2, [(0, 1)]), q)
    with pytest.raises(NotNiceError):
        weight_with_set(Graph(7, list(cycle(5).edges) + [(5, 6)]), q)
    with pytest.raises(NotRegularError):
        weight_with_set(Graph(4, [(0, 1), (1, 2), (2, 3)]), q)


def test_arithmetic_local_search():
    # Above the exhaustive cap, so local search is used.
    g = gen_random_regular(16, 3, 1)
    cert = weight_with_set(g, WeightSet.parse("1,2,3"), WeighterConfig(exhaustive_cap=10))
    assert cert.branch == "arithmetic"
    assert cert.proper

    starved = WeighterConfig(exhaustive_cap=0, local_search_budget=1, local_search_restarts=1)
    with pytest.raises(FallbackExhausted):
        weight_with_set(from_nx(nx.complete_graph(10)), WeightSet.parse("0,1,2"), starved)


def test_config():
    with pytest.raises(ValueError):
        WeighterConfig(mode="fast")
    with pytest.raises(ValueError):
        WeighterConfig(exhaustive_cap=-1)
    with pytest.raises(ValueError):
        WeighterConfig(local_search_budget=0)
    config = WeighterConfig(mode="optimistic", seed=4)
    copy = config.copy()
    assert copy is not config
    assert (copy.mode, copy.seed) == ("optimistic", 4)
    assert str(config) == "WeighterConfig(mode=optimistic, audit=False, exhaustive_cap=20)"


def test_deterministic(petersen):
    q = WeightSet.parse("-1,0,2")
    assert weight_with_set(petersen, q).dumps() == weight_with_set(petersen, q).dumps()
