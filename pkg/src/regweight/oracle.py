import logging
from fractions import Fraction
from regweight.errors import NotNiceError, OracleCapExceeded
from regweight.graph import Graph, regularity
from regweight.search import DEFAULT_CAP, SearchMode, brute_force_search
from regweight.verifier import verify_proper
from regweight.weighter import WeighterConfig, weight_with_set
from regweight.weightset import WeightSet

_logger = logging.getLogger(__name__)


class CrossCheckVerdict():
    """
    Outcome of comparing the construction with exhaustive search on one graph.
    `constructed` is None when no construction is claimed (non-regular input).
    """
    def __init__(self, *, constructed: bool | None, oracle_found: bool, branch: str | None,
                 weights: list[Fraction] | None, oracle_weights: list[Fraction] | None):
        self.constructed = constructed
        self.oracle_found = oracle_found
        self.branch = branch
        self.weights = weights
        self.oracle_weights = oracle_weights

    @property
    def oracle_bug(self) -> bool:
        """
        The construction produced a proper weighting the oracle did not find.
        """
        return bool(self.constructed) and not self.oracle_found

    @property
    def agree(self) -> bool:
        if self.constructed is None:
            return True
        return self.constructed == self.oracle_found

    def __str__(self):
        built = {None: "not claimed", True: "proper", False: "improper"}[self.constructed]
        found = "found" if self.oracle_found else "none"
        return f"CrossCheckVerdict(construction {built}, oracle {found})"

    def __repr__(self):
        return self.__str__()


def cross_check(g: Graph, q: WeightSet, cap: int = DEFAULT_CAP,
                config: WeighterConfig | None = None) -> CrossCheckVerdict:
    """
    Runs the construction and the exhaustive search on a nice graph with at
    most `cap` edges. Graphs that are not regular only get the search's
    verdict, which checks existence beyond what the construction covers.
    """
    if g.m > cap:
        raise OracleCapExceeded(f"{g} has {g.m} edges, above the oracle cap of {cap}")
    if not g.is_nice():
        raise NotNiceError(f"{g} has a connected component that is a single edge")

    oracle_weights = brute_force_search(g, q, SearchMode.FIRST, cap=cap)
    if regularity(g) is None:
        _logger.info("%s is not regular, oracle only: %s", g,
                     "found" if oracle_weights is not None else "none")
        return CrossCheckVerdict(constructed=None, oracle_found=oracle_weights is not None,
                                 branch=None, weights=None, oracle_weights=oracle_weights)

    cert = weight_with_set(g, q, config)
    constructed = verify_proper(g, cert.weights, q).is_proper
    verdict = CrossCheckVerdict(constructed=constructed, oracle_found=oracle_weights is not None,
                                branch=cert.branch, weights=cert.weights,
                                oracle_weights=oracle_weights)
    if verdict.oracle_bug:
        _logger.error("Oracle missed the constructed weighting of %s over %s", g, q)
    return verdict
