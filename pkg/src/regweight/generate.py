import logging
import random
from collections import Counter
from regweight.errors import GenerationError
from regweight.graph import Graph

_logger = logging.getLogger(__name__)

MAX_RESAMPLES = 100


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


def _pairing(n: int, k: int, rng: random.Random) -> list[tuple[int, int]]:
    stubs = [v for v in range(n) for _ in range(k)]
    rng.shuffle(stubs)
    stubiter = iter(stubs)
    return [_norm(s1, s2) for s1, s2 in zip(stubiter, stubiter)]


def _is_simple(pairs: list[tuple[int, int]]) -> bool:
    return all(u != v for u, v in pairs) and len(set(pairs)) == len(pairs)


def _repair(pairs: list[tuple[int, int]], rng: random.Random,
            budget: int) -> list[tuple[int, int]]:
    """
    Removes loops and multi-edges by degree-preserving swaps: a bad pair ab and
    another pair cd become ac and bd (or ad and bc) when both new pairs are
    fresh simple edges.
    """
    pairs = list(pairs)
    counts = Counter(pairs)

    def is_bad(p: tuple[int, int]) -> bool:
        return p[0] == p[1] or counts[p] > 1

    for _ in range(budget):
        bad = [i for i, p in enumerate(pairs) if is_bad(p)]
        if not bad:
            return pairs
        i = rng.choice(bad)
        j = rng.randrange(len(pairs))
        if i == j:
            continue
        a, b = pairs[i]
        c, d = pairs[j]
        if rng.random() < 0.5:
            c, d = d, c
        if a == c or b == d:
            continue
        e1, e2 = _norm(a, c), _norm(b, d)
        if e1 == e2:
            continue
        counts[pairs[i]] -= 1
        counts[pairs[j]] -= 1
        if counts[e1] > 0 or counts[e2] > 0:
            counts[pairs[i]] += 1
            counts[pairs[j]] += 1
            continue
        counts[e1] += 1
        counts[e2] += 1
        pairs[i] = e1
        pairs[j] = e2
    raise GenerationError(f"Edge-swap repair did not converge within {budget} swaps")


def gen_random_regular(n: int, k: int, seed: int) -> Graph:
    """
    Returns a simple k-regular graph on n vertices. Random pairings of the
    n*k stubs are drawn until one is simple (at most MAX_RESAMPLES times); the
    last pairing is then repaired by edge swaps. Deterministic for a given
    seed; exact uniformity is not guaranteed.
    """
    if n <= 0 or k < 0:
        raise ValueError(f"Infeasible parameters n={n}, k={k}")
    if k >= n:
        raise ValueError(f"Infeasible parameters: k={k} must be below n={n}")
    if (n * k) % 2:
        raise ValueError(f"Infeasible parameters: n*k={n * k} is odd")

    rng = random.Random(seed)
    pairs: list[tuple[int, int]] = []
    for attempt in range(MAX_RESAMPLES):
        pairs = _pairing(n, k, rng)
        if _is_simple(pairs):
            _logger.debug("Simple pairing for n=%d k=%d after %d draws", n, k, attempt + 1)
            return Graph(n, pairs)

    _logger.debug("No simple pairing for n=%d k=%d, repairing by swaps", n, k)
    pairs = _repair(pairs, rng, budget=100 * len(pairs) + 1000)
    return Graph(n, pairs)
