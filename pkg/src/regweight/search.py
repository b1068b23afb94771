import logging
import random
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from fractions import Fraction
from regweight.errors import OracleCapExceeded
from regweight.graph import Graph
from regweight.weightset import WeightSet

_logger = logging.getLogger(__name__)

DEFAULT_CAP = 20


class SearchMode(Enum):
    FIRST = "first"
    COUNT = "count"


class _Enumerator():
    """
    Depth-first enumeration of q-weightings, edge ids ascending and weights
    ascending. Edge uv is checked as soon as every edge at u and at v has a
    weight, which prunes the subtree on the first conflict.
    """
    def __init__(self, g: Graph, values: tuple[Fraction, ...]):
        self.g = g
        self.values = values
        last = [max(g.incident(v)) if g.incident(v) else -1 for v in range(g.n)]
        self.checks: list[list[tuple[int, int]]] = [[] for _ in range(g.m)]
        for u, v in g.edges:
            self.checks[max(last[u], last[v])].append((u, v))
        self.dw = [Fraction(0)] * g.n
        self.w: list[Fraction] = [Fraction(0)] * g.m

    def _place(self, t: int, value: Fraction, sign: int):
        u, v = self.g.edges[t]
        self.dw[u] += sign * value
        self.dw[v] += sign * value

    def _consistent(self, t: int) -> bool:
        return all(self.dw[a] != self.dw[b] for a, b in self.checks[t])

    def first(self, t: int = 0) -> bool:
        if t == self.g.m:
            return True
        for value in self.values:
            self.w[t] = value
            self._place(t, value, 1)
            if self._consistent(t) and self.first(t + 1):
                return True
            self._place(t, value, -1)
        return False

    def count(self, t: int = 0) -> int:
        if t == self.g.m:
            return 1
        total = 0
        for value in self.values:
            self._place(t, value, 1)
            if self._consistent(t):
                total += self.count(t + 1)
            self._place(t, value, -1)
        return total

    def run(self, mode: SearchMode, prefix: Fraction | None = None):
        """
        Searches the whole tree, or only the subtree where edge 0 has weight
        `prefix`.
        """
        if prefix is None:
            if mode is SearchMode.FIRST:
                return list(self.w) if self.first() else None
            return self.count()
        self.w[0] = prefix
        self._place(0, prefix, 1)
        if not self._consistent(0):
            return None if mode is SearchMode.FIRST else 0
        if mode is SearchMode.FIRST:
            return list(self.w) if self.first(1) else None
        return self.count(1)


def _search_subtree(g: Graph, values: tuple[Fraction, ...], mode: SearchMode,
                    prefix: Fraction):
    return _Enumerator(g, values).run(mode, prefix)


def brute_force_search(g: Graph, q: WeightSet, mode: SearchMode = SearchMode.FIRST,
                       cap: int = DEFAULT_CAP, jobs: int = 1):
    """
    Exhaustive search over all q-weightings of g, any graph with at most
    `cap` edges. In FIRST mode returns the first proper weighting in
    enumeration order (indexed by edge id) or None; in COUNT mode returns the
    number of proper weightings.

    With jobs > 1 the tree is split on the weight of edge 0 and the subtrees
    searched in worker processes. The FIRST result is the same as with one job.
    """
    if g.m > cap:
        raise OracleCapExceeded(f"{g} has {g.m} edges, above the oracle cap of {cap}")
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")
    values = q.values
    if jobs == 1 or g.m == 0:
        return _Enumerator(g, values).run(mode)

    _logger.debug("Splitting the search of %s over %d workers", g, jobs)
    with ProcessPoolExecutor(max_workers=min(jobs, len(values))) as executor:
        split = len(values)
        results = list(executor.map(_search_subtree, [g] * split, [values] * split,
                                    [mode] * split, values))
    if mode is SearchMode.COUNT:
        return sum(results)
    return next((r for r in results if r is not None), None)


def _conflicts_at(g: Graph, dw: list[Fraction], vertices: set[int]) -> int:
    seen = set()
    for v in vertices:
        for e in g.incident(v):
            seen.add(e)
    return sum(1 for e in seen if dw[g.edges[e][0]] == dw[g.edges[e][1]])


def local_search(g: Graph, q: WeightSet, budget: int = 200000, restarts: int = 20,
                 seed: int = 0, noise: float = 0.1) -> list[Fraction] | None:
    """
    Randomized conflict-count descent. Each restart draws a random
    weighting, then repeatedly picks a random conflicting edge and applies the
    best single-edge change among the edges at its two ends (a random change
    with probability `noise`). Returns a proper weighting or None once
    `budget` changes have been spent over at most `restarts` restarts.
    """
    if restarts < 1:
        raise ValueError(f"restarts must be positive, got {restarts}")
    rng = random.Random(seed)
    values = q.values
    steps = max(1, budget // restarts)
    for restart in range(restarts):
        w = [rng.choice(values) for _ in range(g.m)]
        dw = [Fraction(0)] * g.n
        for e, (u, v) in enumerate(g.edges):
            dw[u] += w[e]
            dw[v] += w[e]
        for _ in range(steps):
            conflicts = [e for e, (u, v) in enumerate(g.edges) if dw[u] == dw[v]]
            if not conflicts:
                _logger.debug("Local search succeeded on restart %d", restart)
                return w
            u, v = g.edges[rng.choice(conflicts)]
            moves = [(e, value) for e in sorted(set(g.incident(u)) | set(g.incident(v)))
                     for value in values if value != w[e]]
            if rng.random() < noise:
                e, value = rng.choice(moves)
            else:
                scored = []
                for e, value in moves:
                    a, b = g.edges[e]
                    around = {a, b}
                    before = _conflicts_at(g, dw, around)
                    delta = value - w[e]
                    dw[a] += delta
                    dw[b] += delta
                    scored.append((_conflicts_at(g, dw, around) - before, e, value))
                    dw[a] -= delta
                    dw[b] -= delta
                best = min(s for s, _, _ in scored)
                _, e, value = rng.choice([m for m in scored if m[0] == best])
            a, b = g.edges[e]
            dw[a] += value - w[e]
            dw[b] += value - w[e]
            w[e] = value
        if not any(dw[u] == dw[v] for u, v in g.edges):
            _logger.debug("Local search succeeded on restart %d", restart)
            return w
    _logger.info("Local search found no proper weighting of %s within %d changes", g, budget)
    return None
