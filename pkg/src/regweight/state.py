import logging
from enum import Enum
from fractions import Fraction
from regweight.graph import Graph
from regweight.partition import LayeredPartition

_logger = logging.getLogger(__name__)


class VertexType(Enum):
    """
    Classification of a vertex v of layer i >= 1 by weighted degree and by its
    profile of incident weighted edges ("up" edges carry d2 into layers >= 1):

    - SETTLED: d_w(v) = (i-1)d2 with exactly i-1 up edges.
    - ANCHORED: d_w(v) = i*d2 - d1 with exactly i up edges and one -d1 edge to I_0.
    - DOUBLE_ANCHORED: i >= 2, d_w(v) = i*d2 - 2*d1 with exactly i up edges and
      two -d1 edges, one to I_0 and one to I_1.
    - HUNGRY: i >= 2, d_w(v) = p*d2 for some p <= i-2 with exactly p up edges.
    """
    SETTLED = "settled"
    ANCHORED = "anchored"
    DOUBLE_ANCHORED = "double-anchored"
    HUNGRY = "hungry"
    UNCLASSIFIED = "unclassified"


class WeightState():
    """
    A partial {-d1, 0, d2}-edge weighting under construction.

    Every edge starts at weight 0 and untouched. `assign` keeps the weighted
    degree cache `dw` and the per-vertex counters in step with `w`:
    `up[v]` counts d2 edges from v into layers >= 1, `down0[v]` and `down1[v]`
    count -d1 edges from v into I_0 and I_1.
    """
    def __init__(self, g: Graph, partition: LayeredPartition, d1: Fraction, d2: Fraction):
        if not 0 < d1 < d2:
            raise ValueError(f"Expected 0 < d1 < d2, got d1={d1}, d2={d2}")
        if partition.n != g.n:
            raise ValueError("Partition and graph have different vertex counts")
        self.graph = g
        self.partition = partition
        self.d1 = Fraction(d1)
        self.d2 = Fraction(d2)
        self.w = [Fraction(0)] * g.m
        self.touched = [False] * g.m
        self.dw = [Fraction(0)] * g.n
        self.up = [0] * g.n
        self.down0 = [0] * g.n
        self.down1 = [0] * g.n
        self.milestones: list[str] = []
        # Zero-degree I_1 vertices grouped by their number of I_0 neighbors,
        # filled in by resolve_conflicts.
        self.resolution_sets: dict[str, list[int]] = {}

    def layer(self, v: int) -> int:
        return self.partition.layer_of(v)

    def _count(self, e: int, value: Fraction, sign: int):
        u, v = self.graph.edges[e]
        for x, y in ((u, v), (v, u)):
            ly = self.partition.layer_of(y)
            if value == self.d2 and ly >= 1:
                self.up[x] += sign
            elif value == -self.d1 and ly == 0:
                self.down0[x] += sign
            elif value == -self.d1 and ly == 1:
                self.down1[x] += sign

    def assign(self, e: int, value: Fraction):
        """
        Sets the weight of edge e to value, one of -d1, 0 or d2.
        """
        if value not in (-self.d1, 0, self.d2):
            raise ValueError(f"Weight {value} is not one of -{self.d1}, 0, {self.d2}")
        old = self.w[e]
        u, v = self.graph.edges[e]
        self._count(e, old, -1)
        self.w[e] = Fraction(value)
        self.touched[e] = True
        self.dw[u] += value - old
        self.dw[v] += value - old
        self._count(e, self.w[e], 1)

    def assign_pair(self, u: int, v: int, value: Fraction):
        self.assign(self.graph.edge_id(u, v), value)

    def vertex_type(self, v: int) -> VertexType:
        i = self.partition.layer_of(v)
        if i < 1:
            return VertexType.UNCLASSIFIED
        d, up, d1, d2 = self.dw[v], self.up[v], self.d1, self.d2
        if d == (i - 1) * d2 and up == i - 1:
            return VertexType.SETTLED
        if d == i * d2 - d1 and up == i and self.down0[v] == 1:
            return VertexType.ANCHORED
        if (i >= 2 and d == i * d2 - 2 * d1 and up == i
                and self.down0[v] == 1 and self.down1[v] == 1):
            return VertexType.DOUBLE_ANCHORED
        if i >= 2 and up <= i - 2 and d == up * d2:
            return VertexType.HUNGRY
        return VertexType.UNCLASSIFIED

    def note(self, milestone: str):
        """
        Records a construction milestone for the certificate's audit trail.
        """
        self.milestones.append(milestone)
        _logger.debug(milestone)

    def __str__(self):
        weighted = sum(self.touched)
        return f"WeightState(d1={self.d1}, d2={self.d2}, touched={weighted}/{len(self.w)})"

    def __repr__(self):
        return self.__str__()
