import logging
from fractions import Fraction
from regweight.bipartite import weight_bipartite
from regweight.certificate import Certificate
from regweight.cycles import weight_cycle
from regweight.errors import (FallbackExhausted, InvariantViolation, NotNiceError,
                              NotRegularError, SaturationFailure)
from regweight.graph import Graph, regularity
from regweight.partition import layered_partition
from regweight.phases import initial_weighting, resolve_conflicts
from regweight.search import brute_force_search, local_search
from regweight.state import WeightState
from regweight.verifier import Stage, audit, verify_proper
from regweight.weightset import WeightSet, to_rational

_logger = logging.getLogger(__name__)

MODES = ("exact", "optimistic")


class WeighterConfig():
    """
    Options of the weighting construction.

    - mode: "exact" computes every layer with the exact independent set
      solver; "optimistic" uses the greedy solver and recomputes layers
      exactly only when a required matching does not exist.
    - audit: check the construction's conditions at every milestone.
    - exhaustive_cap, local_search_budget, local_search_restarts, seed:
      the search used for arithmetic weight sets on graphs of degree >= 3.
      Graphs with at most exhaustive_cap edges are searched exhaustively.
    """
    def __init__(self, *, mode: str = "exact", audit: bool = False, exhaustive_cap: int = 20,
                 local_search_budget: int = 200000, local_search_restarts: int = 20,
                 seed: int = 0):
        if mode not in MODES:
            raise ValueError(f"Unknown mode '{mode}', expected one of {', '.join(MODES)}")
        if exhaustive_cap < 0:
            raise ValueError(f"exhaustive_cap must be non-negative, got {exhaustive_cap}")
        if local_search_budget < 1 or local_search_restarts < 1:
            raise ValueError("Local search budget and restarts must be positive")
        self.mode = mode
        self.audit = audit
        self.exhaustive_cap = exhaustive_cap
        self.local_search_budget = local_search_budget
        self.local_search_restarts = local_search_restarts
        self.seed = seed

    def copy(self) -> 'WeighterConfig':
        return WeighterConfig(mode=self.mode, audit=self.audit,
                              exhaustive_cap=self.exhaustive_cap,
                              local_search_budget=self.local_search_budget,
                              local_search_restarts=self.local_search_restarts,
                              seed=self.seed)

    def __str__(self):
        return (f"WeighterConfig(mode={self.mode}, audit={self.audit}, "
                f"exhaustive_cap={self.exhaustive_cap})")

    def __repr__(self):
        return self.__str__()


def build_regular_state(g: Graph, d1: Fraction, d2: Fraction,
                        config: WeighterConfig | None = None) -> WeightState:
    """
    Constructs a proper {-d1, 0, d2}-weighting of a k-regular graph, k >= 3,
    and returns the final construction state.

    The vertices are split into layers by repeatedly removing a maximum
    independent set. With a single layer above I_0 the graph is bipartite and
    weighted directly; otherwise the initial weighting and the conflict
    resolution run in turn.
    """
    config = config or WeighterConfig()
    d1, d2 = to_rational(d1), to_rational(d2)
    if not 0 < d1 < d2:
        raise ValueError(f"Expected 0 < d1 < d2, got d1={d1}, d2={d2}")
    k = regularity(g)
    if k is None:
        raise NotRegularError(f"{g} is not regular")
    if k < 3:
        raise ValueError(f"{g} is {k}-regular, the construction needs degree at least 3")

    partition = layered_partition(g, exact=config.mode == "exact")
    _logger.info("%s split into %s", g, partition)
    while True:
        if partition.ell > k + 1 and all(partition.exact):
            raise InvariantViolation("at most k + 1 layers above I_0", [partition.ell, k])
        try:
            if partition.ell == 1:
                state = weight_bipartite(g, partition.layer(0), partition.layer(1), d1, d2)
                stage = Stage.BIPARTITE
            else:
                state = WeightState(g, partition, d1, d2)
                initial_weighting(state, check=config.audit)
                resolve_conflicts(state, check=config.audit)
                stage = Stage.RESOLVED
            break
        except SaturationFailure as e:
            layer = e.layer if e.layer is not None else 0
            if all(partition.exact[layer:]):
                raise InvariantViolation("saturating matching from an exact layer",
                                         sorted(e.violator)) from e
            _logger.info("Matching from layer %d failed on a greedy partition, refining", layer)
            partition = partition.refine(g, layer)
        except InvariantViolation as e:
            if all(partition.exact):
                raise
            _logger.info("%s on a greedy partition, recomputing every layer", e)
            partition = partition.refine(g, 0)

    if config.audit:
        audit(state, stage).raise_if_failed()
    state.note(f"{stage.value} construction finished with {len(partition.layers)} layers")
    return state


def weight_regular(g: Graph, d1: Fraction, d2: Fraction,
                   config: WeighterConfig | None = None) -> Certificate:
    """
    Proper {-d1, 0, d2}-weighting of a k-regular graph with k >= 3 and
    0 < d1 < d2. The result is verified before it is returned.
    """
    state = build_regular_state(g, d1, d2, config)
    q = WeightSet([-state.d1, 0, state.d2])
    cert = Certificate(graph=g, weight_set=q, weights=state.w, branch="regular",
                       milestones=state.milestones)
    if not cert.proper:
        raise InvariantViolation("constructed weighting is proper", cert.report.conflicts)
    return cert


def _arithmetic_weights(g: Graph, q: WeightSet, config: WeighterConfig) -> list[Fraction]:
    if g.m <= config.exhaustive_cap:
        _logger.info("Arithmetic set %s: exhaustive search over %d edges", q, g.m)
        weights = brute_force_search(g, q, cap=config.exhaustive_cap)
    else:
        _logger.info("Arithmetic set %s: local search over %d edges", q, g.m)
        weights = local_search(g, q, budget=config.local_search_budget,
                               restarts=config.local_search_restarts, seed=config.seed)
    if weights is None:
        raise FallbackExhausted(f"A proper weighting over {q} exists by the 1-2-3 theorem, "
                                f"but the search failed on {g} with m={g.m}")
    return weights


def weight_with_set(g: Graph, q: WeightSet, config: WeighterConfig | None = None) -> Certificate:
    """
    Proper q-weighting of a nice regular graph, for any three distinct
    rationals a < b < c.

    Degree 0 is trivial and degree 2 (disjoint cycles) is solved per cycle.
    From degree 3, when b - a < c - b the {-(b-a), 0, c-b}-weighting shifted
    by b is used; when b - a > c - b the {-(c-b), 0, b-a}-weighting negated
    and shifted by b. Arithmetic sets fall back to search, and raise
    FallbackExhausted when the search gives up.
    """
    config = config or WeighterConfig()
    if not g.is_nice():
        raise NotNiceError(f"{g} has a connected component that is a single edge")
    k = regularity(g)
    if k is None:
        raise NotRegularError(f"{g} is not regular")

    milestones: list[str] = []
    if k == 0:
        branch = "edgeless"
        weights: list[Fraction] = []
    elif k == 2:
        branch = "cycles"
        cycle = weight_cycle(g, q)
        if cycle is None:
            raise InvariantViolation("every cycle has a proper weighting over three values")
        weights = cycle
    else:
        branch = q.affine_branch
        if branch == "ascending":
            state = build_regular_state(g, q.b - q.a, q.c - q.b, config)
            weights = [w + q.b for w in state.w]
            milestones = state.milestones
        elif branch == "descending":
            state = build_regular_state(g, q.c - q.b, q.b - q.a, config)
            weights = [q.b - w for w in state.w]
            milestones = state.milestones
        else:
            weights = _arithmetic_weights(g, q, config)
    _logger.info("%s weighted over %s through the %s branch", g, q, branch)

    report = verify_proper(g, weights, q)
    if not report.is_proper:
        raise InvariantViolation(f"{branch} weighting is proper", report.conflicts)
    return Certificate(graph=g, weight_set=q, weights=weights, branch=branch,
                       milestones=milestones)
