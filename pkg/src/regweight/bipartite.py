import logging
from fractions import Fraction
from typing import Iterable
from regweight.graph import Graph
from regweight.partition import LayeredPartition
from regweight.state import WeightState

_logger = logging.getLogger(__name__)


def weight_bipartite(g: Graph, i0: Iterable[int], i1: Iterable[int],
                     d1: Fraction, d2: Fraction) -> WeightState:
    """
    Weights a bipartite graph with sides i0 and i1, where every vertex of i1
    has degree at least 3, using only -d1 and d2 on edges.

    The vertices x of i1 are processed in ascending order. If some neighbor y
    has d_w(y) < -d1 and d_w(y) != -d2 - 3*d1, the smallest such edge xy gets
    d2. Otherwise the edges to the three smallest neighbors get -d1. Afterwards
    d_w(x) is d2 or -3*d1 for x in i1, and d_w(y) < d2 - d1 with
    d_w(y) != -3*d1 for y in i0, so the weighting is proper.
    """
    i0 = frozenset(i0)
    i1 = frozenset(i1)
    if i0 & i1:
        raise ValueError(f"Sides share vertices {sorted(i0 & i1)}")
    if i0 | i1 != frozenset(range(g.n)):
        raise ValueError("The two sides must cover every vertex")
    for u, v in g.edges:
        if (u in i0) == (v in i0):
            raise ValueError(f"Edge {u} {v} does not cross the two sides")
    low = [x for x in sorted(i1) if g.degree(x) < 3]
    if low:
        raise ValueError(f"Vertices {low} of the second side have degree below 3")

    layers = [side for side in (i0, i1) if side]
    state = WeightState(g, LayeredPartition(g.n, layers), d1, d2)
    d1, d2 = state.d1, state.d2
    for x in sorted(i1):
        target = next((y for y in g.neighbors(x)
                       if state.dw[y] < -d1 and state.dw[y] != -d2 - 3 * d1), None)
        if target is not None:
            state.assign_pair(x, target, d2)
        else:
            for y in g.neighbors(x)[:3]:
                state.assign_pair(x, y, -d1)
    state.note(f"bipartite weighting of {len(i1)} vertices against {len(i0)}")
    return state
