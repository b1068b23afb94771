import logging
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence
from regweight.errors import InvariantViolation, WeightDomainError
from regweight.graph import Graph
from regweight.state import VertexType, WeightState
from regweight.weightset import WeightSet, format_rational

_logger = logging.getLogger(__name__)


def _plain(x: Any) -> Any:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return x


class ConflictReport():
    """
    Edges uv with d_w(u) = d_w(v), as (u, v, shared weighted degree).
    """
    def __init__(self, conflicts: Iterable[tuple[int, int, Fraction]],
                 degrees: Sequence[Fraction]):
        self.conflicts = list(conflicts)
        self.degrees = list(degrees)

    @property
    def is_proper(self) -> bool:
        return not self.conflicts

    @property
    def count(self) -> int:
        return len(self.conflicts)

    def to_dict(self) -> dict:
        return {
            "proper": self.is_proper,
            "conflicts": [{"u": u, "v": v, "degree": format_rational(d)}
                          for u, v, d in self.conflicts],
        }

    def __str__(self):
        if self.is_proper:
            return "ConflictReport(proper)"
        shown = ", ".join(f"{u}-{v} at {d}" for u, v, d in self.conflicts[:5])
        return f"ConflictReport({self.count} conflicts: {shown})"

    def __repr__(self):
        return self.__str__()


def verify_proper(g: Graph, w: Sequence[Fraction] | Mapping[int, Fraction],
                  q: WeightSet) -> ConflictReport:
    """
    Checks that w (indexed by edge id) puts a value of q on every edge and
    lists the conflicts. Weighted degrees are recomputed from w alone.
    """
    if isinstance(w, Mapping):
        missing = [g.edges[e] for e in range(g.m) if e not in w]
        if missing:
            raise WeightDomainError(f"Edges {missing[:5]} have no weight")
        w = [w[e] for e in range(g.m)]
    if len(w) != g.m:
        raise WeightDomainError(f"Expected {g.m} edge weights, got {len(w)}")
    degrees = [Fraction(0)] * g.n
    for e, (u, v) in enumerate(g.edges):
        value = w[e]
        if value not in q:
            raise WeightDomainError(f"Weight {value} of edge {u} {v} is not in {q}")
        degrees[u] += value
        degrees[v] += value
    conflicts = [(u, v, degrees[u]) for u, v in g.edges if degrees[u] == degrees[v]]
    return ConflictReport(conflicts, degrees)


class Stage(Enum):
    INITIAL = "initial"
    RESOLVED = "resolved"
    BIPARTITE = "bipartite"


class ConditionResult():
    def __init__(self, name: str, witnesses: list[Any]):
        self.name = name
        self.witnesses = witnesses

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "witnesses": _plain(self.witnesses)}

    def __str__(self):
        status = "ok" if self.passed else f"FAILED {self.witnesses[:5]}"
        return f"{self.name}: {status}"

    def __repr__(self):
        return self.__str__()


class AuditReport():
    """
    Pass/fail of every named condition of an audit, with witnesses for the
    failures. Auditing never raises; call `raise_if_failed` to turn a failed
    report into an InvariantViolation.
    """
    def __init__(self, stage: str, conditions: list[ConditionResult]):
        self.stage = stage
        self.conditions = conditions

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    @property
    def failures(self) -> list[ConditionResult]:
        return [c for c in self.conditions if not c.passed]

    def condition(self, name: str) -> ConditionResult:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def raise_if_failed(self):
        if not self.passed:
            first = self.failures[0]
            raise InvariantViolation(f"{self.stage}: {first.name}", first.witnesses)

    def to_dict(self) -> dict:
        return {"stage": self.stage, "passed": self.passed,
                "conditions": [c.to_dict() for c in self.conditions]}

    def __str__(self):
        return f"AuditReport({self.stage}, " + "; ".join(str(c) for c in self.conditions) + ")"

    def __repr__(self):
        return self.__str__()


def _neighbors_in(state: WeightState, v: int, layer: int) -> list[int]:
    return [u for u in state.graph.neighbors(v) if state.layer(u) == layer]


def _below_gap(state: WeightState, y: int) -> bool:
    return state.dw[y] < state.d2 - state.d1


def _below_gap_not_triple(state: WeightState, y: int) -> bool:
    return _below_gap(state, y) and state.dw[y] != -3 * state.d1


def audit_cache(state: WeightState) -> ConditionResult:
    """
    The cached weighted degrees and edge-profile counters agree with a
    recomputation from the edge weights.
    """
    g, p = state.graph, state.partition
    d1, d2 = state.d1, state.d2
    dw = [Fraction(0)] * g.n
    up, down0, down1 = [0] * g.n, [0] * g.n, [0] * g.n
    witnesses: list[Any] = []
    for e, (u, v) in enumerate(g.edges):
        value = state.w[e]
        if value not in (-d1, 0, d2):
            witnesses.append(("weight", e, value))
        if value != 0 and not state.touched[e]:
            witnesses.append(("untouched", e, value))
        dw[u] += value
        dw[v] += value
        for x, y in ((u, v), (v, u)):
            if value == d2 and p.layer_of(y) >= 1:
                up[x] += 1
            elif value == -d1 and p.layer_of(y) == 0:
                down0[x] += 1
            elif value == -d1 and p.layer_of(y) == 1:
                down1[x] += 1
    for v in range(g.n):
        if dw[v] != state.dw[v]:
            witnesses.append(("degree", v, state.dw[v], dw[v]))
        if (up[v], down0[v], down1[v]) != (state.up[v], state.down0[v], state.down1[v]):
            witnesses.append(("profile", v))
    return ConditionResult("degree_cache", witnesses)


def _separation(state: WeightState) -> ConditionResult:
    # Weighted degrees allowed in distinct layers >= 1 never coincide.
    d1, d2 = state.d1, state.d2
    witnesses = []
    ell = state.partition.ell
    for i in range(1, ell + 1):
        if not max((i - 1) * d2, i * d2 - 2 * d1) < i * d2 - d1:
            witnesses.append((i,))
        for j in range(i + 1, ell + 1):
            if not i * d2 - d1 < min((j - 1) * d2, j * d2 - 2 * d1):
                witnesses.append((i, j))
    return ConditionResult("separation", witnesses)


def _audit_initial(state: WeightState) -> list[ConditionResult]:
    p = state.partition
    typed = [(v, state.dw[v]) for v in sorted(p.union(1))
             if state.vertex_type(v) not in (VertexType.SETTLED, VertexType.ANCHORED)]
    base = [(y, state.dw[y]) for y in sorted(p.layer(0)) if state.dw[y] > 0]
    pairs = []
    for v in sorted(p.layer(1)):
        if state.vertex_type(v) is not VertexType.SETTLED:
            continue
        for u in state.graph.neighbors(v):
            if state.layer(u) >= 2 and state.vertex_type(u) is VertexType.SETTLED:
                pairs.append((v, u))
    return [ConditionResult("upper_layers_settled_or_anchored", typed),
            ConditionResult("base_layer_nonpositive", base),
            ConditionResult("no_settled_pairs", pairs)]


def _audit_resolved(state: WeightState) -> list[ConditionResult]:
    p = state.partition
    d1, d2 = state.d1, state.d2
    upper = []
    for v in sorted(p.union(2)):
        i = state.layer(v)
        if state.dw[v] not in ((i - 1) * d2, i * d2 - 2 * d1, i * d2 - d1):
            upper.append((v, state.dw[v]))
    first = [(x, state.dw[x]) for x in sorted(p.layer(1))
             if state.dw[x] not in (-3 * d1, -d1, 0, d2 - d1)]
    base = [(y, state.dw[y]) for y in sorted(p.layer(0)) if not _below_gap(state, y)]
    triple, single, zero = [], [], []
    for x in sorted(p.layer(1)):
        below = _neighbors_in(state, x, 0)
        if state.dw[x] == -3 * d1:
            bad = [y for y in below if not _below_gap_not_triple(state, y)]
            if len(below) < 2 or bad:
                triple.append((x, bad))
        elif state.dw[x] == -d1:
            if len(below) != 1 or state.dw[below[0]] != 0:
                single.append((x, below))
        elif state.dw[x] == 0:
            bad = [y for y in below if not _below_gap(state, y) or state.dw[y] == 0]
            if bad:
                zero.append((x, bad))
    return [ConditionResult("upper_layers_typed", upper),
            ConditionResult("first_layer_degrees", first),
            ConditionResult("base_layer_bound", base),
            ConditionResult("triple_negative_neighbors", triple),
            ConditionResult("single_negative_anchor", single),
            ConditionResult("zero_neighbors", zero),
            _separation(state)]


def _audit_bipartite(state: WeightState) -> list[ConditionResult]:
    p = state.partition
    d1, d2 = state.d1, state.d2
    i1 = p.layer(1)
    second = [(x, state.dw[x]) for x in sorted(i1) if state.dw[x] not in (-3 * d1, d2)]
    first = [(y, state.dw[y]) for y in sorted(p.layer(0))
             if not _below_gap_not_triple(state, y)]
    return [ConditionResult("second_side_degrees", second),
            ConditionResult("first_side_degrees", first)]


def audit(state: WeightState, stage: Stage) -> AuditReport:
    """
    Checks the conditions a construction stage guarantees:

    - INITIAL: every vertex of layers >= 1 is settled or anchored, base layer
      degrees are <= 0, and no settled vertex of I_1 has a settled neighbor in
      layers >= 2.
    - RESOLVED: the goal conditions that make the weighting proper, plus the
      separation of the weighted degrees allowed in different layers.
    - BIPARTITE: degrees -3*d1 or d2 on the second side, below d2 - d1 and
      different from -3*d1 on the first.

    The degree cache is checked at every stage.
    """
    if stage is Stage.INITIAL:
        conditions = _audit_initial(state)
    elif stage is Stage.RESOLVED:
        conditions = _audit_resolved(state)
    else:
        conditions = _audit_bipartite(state)
    report = AuditReport(stage.value, [audit_cache(state)] + conditions)
    _logger.debug("%s", report)
    return report


def audit_layer_step(state: WeightState, i: int) -> AuditReport:
    """
    Conditions holding before layer i is processed by the initial weighting:
    nothing incident to layers 1..i is weighted, layers above i hold only
    settled, anchored or hungry vertices, and a hungry vertex of layer a has a
    d2 edge into every layer strictly between i and a.
    """
    g, p = state.graph, state.partition
    low = p.union(1, i + 1)
    touched = [g.edges[e] for e in range(g.m)
               if state.touched[e] and (g.edges[e][0] in low or g.edges[e][1] in low)]
    allowed = (VertexType.SETTLED, VertexType.ANCHORED, VertexType.HUNGRY)
    typed = [(v, state.dw[v]) for v in sorted(p.union(i + 1))
             if state.vertex_type(v) not in allowed]
    ladder = []
    for alpha in range(i + 2, p.ell + 1):
        for u in sorted(p.layer(alpha)):
            if state.vertex_type(u) is not VertexType.HUNGRY:
                continue
            reached = {state.layer(y) for y in g.neighbors(u)
                       if state.w[g.edge_id(u, y)] == state.d2}
            missing = [beta for beta in range(i + 1, alpha) if beta not in reached]
            if missing:
                ladder.append((u, missing))
    return AuditReport(f"layer step {i}", [
        ConditionResult("lower_layers_untouched", touched),
        ConditionResult("upper_layers_typed", typed),
        ConditionResult("hungry_ladder", ladder),
    ])


def audit_resolution_step(state: WeightState, processed: Iterable[int],
                          unprocessed: Iterable[int]) -> AuditReport:
    """
    Conditions holding before each vertex of I_1 with two or more neighbors in
    I_0 is processed: unprocessed ones have no weighted edge, base layer
    degrees stay below d2 - d1, and every processed one has degree d2 - d1, or
    -3*d1 with all its I_0 neighbors below d2 - d1 and away from -3*d1.
    """
    g = state.graph
    d1, d2 = state.d1, state.d2
    touched = [x for x in sorted(unprocessed)
               if any(state.touched[e] for e in g.incident(x))]
    base = [(y, state.dw[y]) for y in sorted(state.partition.layer(0))
            if not _below_gap(state, y)]
    done = []
    for x in processed:
        if state.dw[x] == d2 - d1:
            continue
        below = _neighbors_in(state, x, 0)
        if state.dw[x] != -3 * d1 or not all(_below_gap_not_triple(state, y) for y in below):
            done.append((x, state.dw[x]))
    return AuditReport("resolution step", [
        ConditionResult("unprocessed_untouched", touched),
        ConditionResult("base_layer_bound", base),
        ConditionResult("processed_degrees", done),
    ])
