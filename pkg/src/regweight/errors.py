from typing import Any


class Graph6Error(ValueError):
    """
    Malformed graph6 input. `offset` is the byte offset inside the line and
    `line` the 1-based line number when parsing a corpus.
    """
    def __init__(self, message: str, *, offset: int, line: int | None = None):
        self.offset = offset
        self.line = line
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{where}: {message}")


class EdgeListError(ValueError):
    def __init__(self, message: str, *, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class NotRegularError(ValueError):
    pass


class NotNiceError(ValueError):
    pass


class WeightDomainError(ValueError):
    pass


class CertificateError(ValueError):
    pass


class OracleCapExceeded(ValueError):
    pass


class GenerationError(RuntimeError):
    pass


class SaturationFailure(RuntimeError):
    """
    No matching of the bipartite graph between side_a and side_b saturates
    side_b. `violator` is a subset S of side_b whose neighborhood in side_a
    (`neighborhood`) is smaller than S.
    """
    def __init__(self, *, violator: frozenset[int], neighborhood: frozenset[int],
                 side_a: frozenset[int], side_b: frozenset[int]):
        self.violator = violator
        self.neighborhood = neighborhood
        self.side_a = side_a
        self.side_b = side_b
        # Index of the layer containing side_a when raised during a phase.
        self.layer: int | None = None
        super().__init__(f"Hall violation: {sorted(violator)} has only "
                         f"{len(neighborhood)} neighbors {sorted(neighborhood)}")


class FallbackExhausted(RuntimeError):
    pass


class InvariantViolation(RuntimeError):
    """
    A condition the construction guarantees did not hold. Always a bug.
    """
    def __init__(self, condition: str, witnesses: list[Any] | None = None):
        self.condition = condition
        self.witnesses = witnesses or []
        msg = f"{condition} violated"
        if self.witnesses:
            msg += f": {self.witnesses[:10]}"
        super().__init__(msg)
