import pytest
from regweight import (Graph, OracleCapExceeded, SearchMode, WeightSet, brute_force_search,
                       local_search, verify_proper)
from tests.conftest import cycle


def test_single_edge():
    g = Graph(2, [(0, 1)])
    q = WeightSet.parse("1,2,3")
    assert brute_force_search(g, q) is None
    assert brute_force_search(g, q, SearchMode.COUNT) == 0


def test_empty_graph():
    assert brute_force_search(Graph(3, []), WeightSet.parse("1,2,3")) == []
    assert brute_force_search(Graph(3, []), WeightSet.parse("1,2,3"), SearchMode.COUNT) == 1


def test_triangle_count():
    assert brute_force_search(cycle(3), WeightSet.parse("1,2,3"), SearchMode.COUNT) == 6
    assert brute_force_search(cycle(3), WeightSet.parse("-1,0,2"), SearchMode.COUNT) == 6


def test_first(k4, petersen):
    q = WeightSet.parse("1,2,3")
    w = brute_force_search(k4, q)
    assert w is not None
    assert verify_proper(k4, w, q).is_proper
    assert brute_force_search(k4, q) == w

    with pytest.raises(OracleCapExceeded):
        brute_force_search(petersen, q, cap=14)
    with pytest.raises(ValueError):
        brute_force_search(k4, q, jobs=0)


def test_parallel_matches_sequential(k4, prism):
    q = WeightSet.parse("1,2,3")
    for g in (k4, prism, cycle(5)):
        assert brute_force_search(g, q, jobs=2) == brute_force_search(g, q)
        assert (brute_force_search(g, q, SearchMode.COUNT, jobs=3)
                == brute_force_search(g, q, SearchMode.COUNT))


def test_local_search(petersen):
    q = WeightSet.parse("1,2,3")
    w = local_search(petersen, q, seed=3)
    assert w is not None
    assert verify_proper(petersen, w, q).is_proper
    assert local_search(petersen, q, seed=3) == w

    assert local_search(Graph(2, [(0, 1)]), q, budget=100, restarts=2) is None
    with pytest.raises(ValueError):
        local_search(petersen, q, restarts=0)


class CyclingRandom:
    """Picks sequence elements round-robin and never adds noise."""

    def __init__(self, seed):
        self.calls = 0

    def choice(self, seq):
        item = seq[self.calls % len(seq)]
        self.calls += 1
        return item

    def random(self):
        return 1.0


def test_local_search_last_change_is_checked(monkeypatch):
    monkeypatch.setattr("regweight.search.random.Random", CyclingRandom)
    q = WeightSet.parse("-1,0,1")
    path = Graph(3, [(0, 1), (1, 2)])
    # Starts from (-1, 0), which conflicts on edge 0; one change fixes it.
    w = local_search(path, q, budget=1, restarts=1)
    assert w == [-1, 1]
    assert verify_proper(path, w, q).is_proper
