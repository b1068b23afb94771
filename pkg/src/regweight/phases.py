import logging
from typing import Iterable
from regweight.errors import InvariantViolation, SaturationFailure
from regweight.matching import Matching, saturating_matching
from regweight.partition import color_classes, degeneracy_coloring
from regweight.state import VertexType, WeightState
from regweight.verifier import Stage, audit, audit_layer_step, audit_resolution_step

_logger = logging.getLogger(__name__)


def _match(state: WeightState, layer: int, side_b: Iterable[int]) -> Matching:
    """
    Matching from layer `layer` saturating side_b; a failure is tagged with
    the layer so that the caller can recompute it exactly.
    """
    try:
        return saturating_matching(state.graph, state.partition.layer(layer), side_b)
    except SaturationFailure as e:
        e.layer = layer
        raise


def _sweep(state: WeightState, start: int) -> int:
    """
    Gives d2 to every weight-0 edge inside layers >= start whose two ends are
    hungry at the time the edge is reached. Returns the number of such edges.
    """
    g = state.graph
    count = 0
    for e, (u, v) in enumerate(g.edges):
        if state.w[e] != 0 or state.layer(u) < start or state.layer(v) < start:
            continue
        if (state.vertex_type(u) is VertexType.HUNGRY
                and state.vertex_type(v) is VertexType.HUNGRY):
            state.assign(e, state.d2)
            count += 1
    return count


def _settled_pair(state: WeightState) -> tuple[int, int] | None:
    for v in sorted(state.partition.layer(1)):
        if state.vertex_type(v) is not VertexType.SETTLED:
            continue
        for u in state.graph.neighbors(v):
            if state.layer(u) >= 2 and state.vertex_type(u) is VertexType.SETTLED:
                return v, u
    return None


def _anchor_edge(state: WeightState, v: int) -> int:
    g = state.graph
    for y in g.neighbors(v):
        if state.layer(y) == 0:
            e = g.edge_id(v, y)
            if state.touched[e]:
                raise InvariantViolation("settled vertices have no weighted edge to I_0", [v, y])
            return e
    raise InvariantViolation("every vertex outside I_0 has a neighbor in I_0", [v])


def initial_weighting(state: WeightState, check: bool = False) -> WeightState:
    """
    Makes every vertex of the layers >= 1 settled or anchored, keeps the base
    layer degrees <= 0, and leaves no settled vertex of I_1 next to a settled
    vertex of a higher layer.

    Layers are processed from the top down. The top layer is matched into the
    one below it with d2 edges. Each lower layer i then receives d2 edges from
    the hungry vertices above it (one independent class of a degeneracy
    coloring at a time) and its vertices reaching degree i*d2 get a -d1 edge to
    I_0. A final pass fixes settled pairs between I_1 and higher layers.

    With check=True the layer-step conditions are audited before each layer
    and the result is audited at the end; failures raise InvariantViolation.
    """
    g, p = state.graph, state.partition
    d1, d2 = state.d1, state.d2
    ell = p.ell
    if ell < 2:
        raise ValueError(f"Initial weighting needs at least three layers, got ell={ell}")
    if any(state.touched):
        raise ValueError("Initial weighting expects an untouched state")

    top = _match(state, ell - 1, p.layer(ell))
    for x, y in top.pairs.items():
        state.assign_pair(x, y, d2)
    if ell == 2:
        anchors = _match(state, 0, top.pairs.values())
        for x, y in anchors.pairs.items():
            state.assign_pair(x, y, -d1)
    state.note(f"matched layer {ell} into layer {ell - 1}: {len(top)} edges")

    for i in range(ell - 2, 0, -1):
        if check:
            audit_layer_step(state, i).raise_if_failed()
        swept = _sweep(state, i + 1)
        hungry = [v for v in sorted(p.union(i + 1))
                  if state.vertex_type(v) is VertexType.HUNGRY]
        classes = color_classes(degeneracy_coloring(g, hungry))
        if len(classes) > i:
            raise InvariantViolation(f"hungry vertices above layer {i} split into at most {i} "
                                     f"independent sets", [len(classes), hungry])
        for cls in classes:
            for x, y in _match(state, i, cls).pairs.items():
                state.assign_pair(x, y, d2)
        full = [v for v in sorted(p.layer(i)) if state.dw[v] == i * d2]
        if full:
            for x, y in _match(state, 0, full).pairs.items():
                state.assign_pair(x, y, -d1)
        state.note(f"layer {i}: {swept} swept edges, {len(hungry)} hungry vertices in "
                   f"{len(classes)} classes, {len(full)} anchored")

    repairs = 0
    while (pair := _settled_pair(state)) is not None:
        v, u = pair
        state.assign(_anchor_edge(state, v), -d1)
        state.assign(_anchor_edge(state, u), -d1)
        state.assign_pair(v, u, d2)
        repairs += 1
    state.note(f"initial weighting done, {repairs} settled pairs repaired")

    if check:
        audit(state, Stage.INITIAL).raise_if_failed()
    return state


def resolve_conflicts(state: WeightState, check: bool = False) -> WeightState:
    """
    Removes the remaining conflicts between I_0 and I_1 after the initial
    weighting. Only vertices x of I_1 with d_w(x) = 0 next to a vertex of I_0
    with d_w = 0 are concerned.

    Those with one or two neighbors in I_0 are first matched into the layers
    >= 2. Then, smallest first, each one with two or more I_0 neighbors and a
    zero-degree I_0 neighbor y is resolved: if some I_0 neighbor y* has
    d_w(y*) < -d1 and d_w(y*) != -d2 - 3*d1, xy* gets d2 and xy gets -d1;
    otherwise three edges get -d1 (y, the other I_0 neighbor and the matched
    partner when x has only two I_0 neighbors). Finally each one with a single
    I_0 neighbor of degree 0 gets -d1 on its matched edge.

    With check=True the resolution-step conditions are audited before each
    vertex and the result is audited at the end.
    """
    g, p = state.graph, state.partition
    d1, d2 = state.d1, state.d2

    def zero_base(y: int) -> bool:
        return state.layer(y) == 0 and state.dw[y] == 0

    candidates = [x for x in sorted(p.layer(1)) if state.dw[x] == 0]
    below = {x: [y for y in g.neighbors(x) if state.layer(y) == 0] for x in candidates}
    one = [x for x in candidates if len(below[x]) == 1]
    two = [x for x in candidates if len(below[x]) == 2]
    more = [x for x in candidates if len(below[x]) >= 3]
    state.resolution_sets = {"one": one, "two": two, "more": more}
    if not any(zero_base(y) for x in candidates for y in below[x]):
        state.note("no conflicts between I_0 and I_1 after the initial weighting")
        if check:
            audit(state, Stage.RESOLVED).raise_if_failed()
        return state

    partner: dict[int, int] = {}
    if one or two:
        try:
            partner = saturating_matching(g, p.union(2), one + two).pairs
        except SaturationFailure as e:
            raise InvariantViolation("matching of I_1 vertices with few I_0 neighbors into "
                                     "higher layers", sorted(e.violator)) from e

    unprocessed = set(two) | set(more)
    processed: list[int] = []
    cases = {"raise": 0, "three": 0, "partner": 0}
    while True:
        if check:
            audit_resolution_step(state, processed, unprocessed).raise_if_failed()
        ready = sorted(x for x in unprocessed if any(zero_base(y) for y in below[x]))
        if not ready:
            break
        x = ready[0]
        anchor = next(y for y in below[x] if zero_base(y))
        lift = next((y for y in below[x]
                     if state.dw[y] < -d1 and state.dw[y] != -d2 - 3 * d1), None)
        if lift is not None:
            state.assign_pair(x, lift, d2)
            state.assign_pair(x, anchor, -d1)
            cases["raise"] += 1
        elif len(below[x]) >= 3:
            others = [y for y in below[x] if y != anchor][:2]
            for y in [anchor] + others:
                state.assign_pair(x, y, -d1)
            cases["three"] += 1
        else:
            other = next(y for y in below[x] if y != anchor)
            for y in (anchor, other, partner[x]):
                state.assign_pair(x, y, -d1)
            cases["partner"] += 1
        unprocessed.remove(x)
        processed.append(x)

    singles = [x for x in one if zero_base(below[x][0])]
    for x in singles:
        state.assign_pair(x, partner[x], -d1)
    state.note(f"conflicts resolved: {cases['raise']} lifted, {cases['three']} by three "
               f"edges, {cases['partner']} through a partner, {len(singles)} single anchors")

    if check:
        audit(state, Stage.RESOLVED).raise_if_failed()
    return state
