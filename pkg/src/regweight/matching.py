from collections import deque
from typing import Iterable
from regweight.errors import SaturationFailure
from regweight.graph import Graph

_INFINITY = -1


class Matching():
    """
    A matching of a bipartite graph together with the side it saturates.
    `pairs` maps every saturated vertex to its partner.
    """
    def __init__(self, pairs: dict[int, int], saturated: Iterable[int]):
        self.pairs = dict(pairs)
        self.saturated = frozenset(saturated)
        partners = list(self.pairs.values())
        if len(set(partners)) != len(partners) or set(partners) & set(self.pairs):
            raise ValueError("Matching edges must be vertex-disjoint")
        missing = self.saturated - set(self.pairs)
        if missing:
            raise ValueError(f"Vertices {sorted(missing)} are not covered")

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted((min(u, v), max(u, v)) for u, v in self.pairs.items())

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self):
        return f"Matching({self.edges})"

    def __repr__(self):
        return self.__str__()


class HopcroftKarp():
    """
    Maximum matching of a bipartite graph given as a dict from left vertices
    to their right neighbors. Left vertices and neighbor lists are scanned in
    the given order, which makes the result deterministic.
    """
    def __init__(self, graph_left: dict[int, list[int]]):
        self._graph_left = graph_left
        self._left = list(graph_left)
        self.pair_left: dict[int, int] = {}
        self.pair_right: dict[int, int] = {}
        self._dist: dict[int, int] = {}
        self._found = _INFINITY

    def run(self) -> int:
        """
        Computes a maximum matching and returns its size.
        """
        size = 0
        while self._bfs():
            for left in self._left:
                if left not in self.pair_left and self._dfs(left):
                    size += 1
        return size

    def _bfs(self) -> bool:
        queue: deque[int] = deque()
        for left in self._left:
            if left in self.pair_left:
                self._dist[left] = _INFINITY
            else:
                self._dist[left] = 0
                queue.append(left)
        self._found = _INFINITY
        while queue:
            left = queue.popleft()
            if self._found != _INFINITY and self._dist[left] >= self._found:
                continue
            for right in self._graph_left[left]:
                other = self.pair_right.get(right)
                if other is None:
                    if self._found == _INFINITY:
                        self._found = self._dist[left] + 1
                elif self._dist[other] == _INFINITY:
                    self._dist[other] = self._dist[left] + 1
                    queue.append(other)
        return self._found != _INFINITY

    def _dfs(self, left: int) -> bool:
        for right in self._graph_left[left]:
            other = self.pair_right.get(right)
            if other is None:
                if self._found == self._dist[left] + 1:
                    self.pair_left[left] = right
                    self.pair_right[right] = left
                    return True
            elif self._dist[other] == self._dist[left] + 1 and self._dfs(other):
                self.pair_left[left] = right
                self.pair_right[right] = left
                return True
        self._dist[left] = _INFINITY
        return False


def _hall_violator(graph_left: dict[int, list[int]], pair_left: dict[int, int],
                   pair_right: dict[int, int]) -> tuple[frozenset[int], frozenset[int]]:
    """
    Alternating search from the first unmatched left vertex of a maximum
    matching. The left vertices reached form a set S whose neighborhood is
    exactly the right vertices reached, all matched into S, so |N(S)| = |S| - 1.
    """
    root = next(v for v in graph_left if v not in pair_left)
    seen_left = {root}
    seen_right: set[int] = set()
    queue = deque([root])
    while queue:
        left = queue.popleft()
        for right in graph_left[left]:
            if right in seen_right:
                continue
            seen_right.add(right)
            other = pair_right[right]
            if other not in seen_left:
                seen_left.add(other)
                queue.append(other)
    return frozenset(seen_left), frozenset(seen_right)


def saturating_matching(g: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> Matching:
    """
    A matching of the bipartite graph between side_a and side_b (edges of g
    with one end in each) that covers every vertex of side_b. Raises
    SaturationFailure with a Hall violator when none exists.
    """
    side_a = frozenset(side_a)
    side_b = frozenset(side_b)
    if side_a & side_b:
        raise ValueError(f"Sides share vertices {sorted(side_a & side_b)}")

    graph_left = {b: [a for a in g.neighbors(b) if a in side_a] for b in sorted(side_b)}
    hk = HopcroftKarp(graph_left)
    size = hk.run()
    if size < len(side_b):
        violator, neighborhood = _hall_violator(graph_left, hk.pair_left, hk.pair_right)
        raise SaturationFailure(violator=violator, neighborhood=neighborhood,
                                side_a=side_a, side_b=side_b)
    return Matching(hk.pair_left, side_b)
