import logging
from fractions import Fraction
from itertools import product
from regweight.errors import NotRegularError
from regweight.graph import Graph, regularity
from regweight.weightset import WeightSet

_logger = logging.getLogger(__name__)


def _cycle_order(g: Graph, component: list[int]) -> list[int]:
    start = component[0]
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = next(u for u in g.neighbors(cur) if u != prev)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _weight_one_cycle(values: tuple[Fraction, ...], length: int) -> list[Fraction] | None:
    """
    Weights e_0..e_{L-1} of a cycle v_0 e_0 v_1 ... v_{L-1} e_{L-1} v_0, where
    v_j sees e_{j-1} and e_j. Edge e_j is a conflict exactly when
    w(e_{j-1}) = w(e_{j+1}), so every weight must differ from the one two
    places further round the cycle.

    For each choice of (w(e_0), w(e_1)) the states (w(e_{j-1}), w(e_j)) are
    extended one edge at a time; closing requires w(e_{L-2}) != w(e_0) and
    w(e_{L-1}) != w(e_1).
    """
    for first, second in product(values, values):
        # layers[j] maps (w(e_j), w(e_{j+1})) to w(e_{j-1}).
        layers: list[dict[tuple[Fraction, Fraction], Fraction | None]] = [
            {(first, second): None}]
        for _ in range(2, length):
            step: dict[tuple[Fraction, Fraction], Fraction | None] = {}
            for prev, cur in layers[-1]:
                for nxt in values:
                    if nxt != prev and (cur, nxt) not in step:
                        step[(cur, nxt)] = prev
            layers.append(step)
        for prev, last in layers[-1]:
            if prev == first or last == second:
                continue
            weights = [prev, last]
            key = (prev, last)
            for j in range(len(layers) - 1, 0, -1):
                before = layers[j][key]
                weights.insert(0, before)
                key = (before, key[0])
            return weights
    return None


def weight_cycle(g: Graph, q: WeightSet) -> list[Fraction] | None:
    """
    Proper q-weighting of a disjoint union of cycles, indexed by edge id, or
    None when some cycle has none. Each cycle is solved by dynamic programming
    over the weights of consecutive edges.
    """
    if regularity(g) != 2:
        raise NotRegularError(f"{g} is not 2-regular")
    weights: list[Fraction | None] = [None] * g.m
    for component in g.components():
        order = _cycle_order(g, component)
        cycle = _weight_one_cycle(q.values, len(order))
        if cycle is None:
            _logger.info("No proper weighting of a cycle of length %d over %s", len(order), q)
            return None
        for j, v in enumerate(order):
            weights[g.edge_id(v, order[(j + 1) % len(order)])] = cycle[j]
    return [w for w in weights if w is not None]
