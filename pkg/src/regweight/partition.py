import logging
from typing import Iterable
from regweight.graph import Graph, iter_bits, to_mask

_logger = logging.getLogger(__name__)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _mask_components(adj: tuple[int, ...], cand: int) -> list[int]:
    comps = []
    while cand:
        comp = frontier = cand & -cand
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & cand & ~comp
            comp |= frontier
        comps.append(comp)
        cand &= ~comp
    return comps


def _clique_cover_bound(adj: tuple[int, ...], cand: int) -> int:
    """
    Number of cliques in a greedy clique cover of G[cand]; an upper bound on
    its independence number.
    """
    count = 0
    while cand:
        v = _lowest(cand)
        cand &= ~(1 << v)
        grow = adj[v] & cand
        while grow:
            u = _lowest(grow)
            cand &= ~(1 << u)
            grow &= adj[u] & ~(1 << u)
        count += 1
    return count


class _MisSolver():
    """
    Branch and bound on bit-sets. Branches on a vertex of maximum degree
    (include first, then exclude); vertices of degree <= 1 are taken greedily;
    unions of cycles are solved in closed form.
    """
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.best = 0
        self.best_size = -1

    def solve(self, cand: int, lower: int) -> int:
        self.best = 0
        self.best_size = lower - 1
        self._branch(cand, 0, 0)
        return self.best

    def _record(self, chosen: int, size: int):
        if size > self.best_size:
            self.best = chosen
            self.best_size = size

    def _branch(self, cand: int, chosen: int, size: int):
        adj = self.adj
        # Degree 0 and 1 vertices belong to some optimum.
        reduced = True
        while reduced and cand:
            reduced = False
            for v in iter_bits(cand):
                if (adj[v] & cand).bit_count() <= 1:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~(adj[v] | (1 << v))
                    reduced = True
                    break
        if not cand:
            self._record(chosen, size)
            return

        best_v, best_deg = -1, -1
        for v in iter_bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > best_deg:
                best_v, best_deg = v, d
        if best_deg <= 2:
            chosen, size = self._cycles(cand, chosen, size)
            self._record(chosen, size)
            return

        if size + _clique_cover_bound(adj, cand) <= self.best_size:
            return
        bit = 1 << best_v
        self._branch(cand & ~(adj[best_v] | bit), chosen | bit, size + 1)
        self._branch(cand & ~bit, chosen, size)

    def _cycles(self, cand: int, chosen: int, size: int) -> tuple[int, int]:
        # Every vertex left has degree exactly 2: cand induces disjoint cycles.
        while cand:
            start = _lowest(cand)
            walk = [start]
            prev, cur = -1, start
            while True:
                nxt = next(u for u in iter_bits(self.adj[cur] & cand) if u != prev)
                if nxt == start:
                    break
                walk.append(nxt)
                prev, cur = cur, nxt
            # Alternate vertices, skipping the last one when the length is odd.
            for i in range(0, len(walk) - 1, 2):
                chosen |= 1 << walk[i]
                size += 1
            cand &= ~to_mask(walk)
        return chosen, size


def greedy_independent_set(g: Graph, within: Iterable[int] | None = None) -> frozenset[int]:
    """
    Minimum-degree greedy independent set; the result is maximal (not
    necessarily maximum) within the given vertices.
    """
    adj = g.adjacency
    cand = (1 << g.n) - 1 if within is None else to_mask(within)
    chosen = 0
    while cand:
        v = min(iter_bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), x))
        chosen |= 1 << v
        cand &= ~(adj[v] | (1 << v))
    return frozenset(iter_bits(chosen))


def maximum_independent_set(g: Graph, within: Iterable[int] | None = None) -> frozenset[int]:
    """
    An independent set of maximum cardinality of g (or of the subgraph induced
    by `within`). Exact; each connected component is solved separately and the
    result is deterministic.
    """
    adj = g.adjacency
    cand = (1 << g.n) - 1 if within is None else to_mask(within)
    solver = _MisSolver(adj)
    result = 0
    for comp in _mask_components(adj, cand):
        lower = len(greedy_independent_set(g, iter_bits(comp)))
        result |= solver.solve(comp, lower)
    return frozenset(iter_bits(result))


class LayeredPartition():
    """
    The layers I_0, ..., I_l obtained by repeatedly removing an independent
    set from what is left of the graph. Only non-empty layers are stored, so
    `ell` is the index of the last layer. `exact[i]` tells whether layer i was
    computed with the exact solver.
    """
    def __init__(self, n: int, layers: list[frozenset[int]], exact: list[bool] | None = None):
        self.n = n
        self.layers = [frozenset(x) for x in layers]
        self.exact = list(exact) if exact is not None else [True] * len(layers)
        if len(self.exact) != len(self.layers):
            raise ValueError("One exactness flag per layer is required")
        self._layer_of = [-1] * n
        for i, layer in enumerate(self.layers):
            if not layer:
                raise ValueError(f"Layer {i} is empty")
            for v in layer:
                if not 0 <= v < n:
                    raise ValueError(f"Vertex {v} outside 0..{n - 1}")
                if self._layer_of[v] != -1:
                    raise ValueError(f"Vertex {v} is in layers {self._layer_of[v]} and {i}")
                self._layer_of[v] = i
        missing = [v for v in range(n) if self._layer_of[v] == -1]
        if missing:
            raise ValueError(f"Vertices {missing} are in no layer")

    @property
    def ell(self) -> int:
        return len(self.layers) - 1

    def layer(self, i: int) -> frozenset[int]:
        return self.layers[i] if 0 <= i < len(self.layers) else frozenset()

    def layer_of(self, v: int) -> int:
        return self._layer_of[v]

    def union(self, start: int, stop: int | None = None) -> frozenset[int]:
        """
        Union of the layers start..stop-1 (to the end when stop is None).
        """
        out: set[int] = set()
        for layer in self.layers[start:stop]:
            out |= layer
        return frozenset(out)

    def refine(self, g: Graph, index: int) -> 'LayeredPartition':
        """
        Recomputes layer `index` and every later layer with the exact solver.
        """
        if all(self.exact[index:]):
            return self
        _logger.info("Recomputing layers %d.. with the exact solver", index)
        keep = self.layers[:index]
        rest = _peel(g, frozenset(range(g.n)) - self.union(0, index), exact=True)
        return LayeredPartition(self.n, keep + rest, self.exact[:index] + [True] * len(rest))

    def __str__(self):
        sizes = ", ".join(str(len(x)) for x in self.layers)
        return f"LayeredPartition(ell={self.ell}, sizes=[{sizes}])"

    def __repr__(self):
        return self.__str__()


def _peel(g: Graph, remaining: frozenset[int], exact: bool) -> list[frozenset[int]]:
    layers = []
    solve = maximum_independent_set if exact else greedy_independent_set
    while remaining:
        layer = solve(g, remaining)
        layers.append(layer)
        remaining = remaining - layer
    return layers


def layered_partition(g: Graph, exact: bool = True) -> LayeredPartition:
    """
    I_0 is a maximum independent set of g and I_i a maximum independent set of
    what remains after removing I_0..I_{i-1}. With exact=False a greedy
    maximal set is used for every layer instead (optimistic mode).
    """
    layers = _peel(g, frozenset(range(g.n)), exact)
    _logger.debug("Layered partition sizes %s", [len(x) for x in layers])
    return LayeredPartition(g.n, layers, [exact] * len(layers))


def degeneracy_order(g: Graph, within: Iterable[int] | None = None) -> tuple[list[int], int]:
    """
    Smallest-last ordering: repeatedly removes a vertex of minimum degree
    (smallest index on ties). Returns the removal order and the degeneracy,
    i.e. the largest degree seen at removal time.
    """
    adj = g.adjacency
    cand = (1 << g.n) - 1 if within is None else to_mask(within)
    degree = {v: (adj[v] & cand).bit_count() for v in iter_bits(cand)}
    order = []
    d = 0
    while degree:
        v = min(degree, key=lambda x: (degree[x], x))
        d = max(d, degree.pop(v))
        order.append(v)
        for u in iter_bits(adj[v] & cand):
            if u in degree:
                degree[u] -= 1
    return order, d


def degeneracy_coloring(g: Graph, within: Iterable[int] | None = None) -> dict[int, int]:
    """
    Greedy coloring along the reverse smallest-last order, each vertex taking
    the smallest color unused by its colored neighbors. Colors are 0, 1, ...
    and at most degeneracy + 1 of them are used.
    """
    order, _ = degeneracy_order(g, within)
    members = set(order)
    color: dict[int, int] = {}
    for v in reversed(order):
        used = {color[u] for u in g.neighbors(v) if u in members and u in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def color_classes(coloring: dict[int, int]) -> list[frozenset[int]]:
    """
    The color classes of a coloring, ordered by color.
    """
    if not coloring:
        return []
    classes: list[set[int]] = [set() for _ in range(max(coloring.values()) + 1)]
    for v, c in coloring.items():
        classes[c].add(v)
    return [frozenset(x) for x in classes if x]
