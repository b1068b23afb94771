import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any
from regweight.errors import (FallbackExhausted, Graph6Error, InvariantViolation,
                              OracleCapExceeded)
from regweight.graph import Graph
from regweight.graph6 import parse_graph6_lines
from regweight.search import SearchMode, brute_force_search
from regweight.weighter import WeighterConfig, weight_with_set
from regweight.weightset import WeightSet

_logger = logging.getLogger(__name__)


def parse_sets(text: str) -> list[WeightSet]:
    """
    Parses weight sets separated by semicolons, e.g. "-1,0,2;-1,0,3".
    """
    sets = [WeightSet.parse(part) for part in text.split(";") if part.strip()]
    if not sets:
        raise ValueError("At least one weight set is required")
    return sets


def _set_label(q: WeightSet) -> str:
    return ",".join(str(x) for x in q)


def run_graph(line: int, g: Graph, sets: list[WeightSet], oracle_cap: int,
              config: WeighterConfig) -> tuple[list[dict[str, Any]], float]:
    """
    Weights one graph with every set. Returns one result record per set and
    the wall-clock time spent.
    """
    start = time.perf_counter()
    results = []
    for q in sets:
        record: dict[str, Any] = {"line": line, "n": g.n, "m": g.m, "set": _set_label(q),
                                  "arithmetic": q.is_arithmetic}
        try:
            cert = weight_with_set(g, q, config)
            record["branch"] = cert.branch
            record["status"] = "proper" if cert.proper else "improper"
        except FallbackExhausted as e:
            record["status"] = "fallback_exhausted"
            record["message"] = str(e)
        except InvariantViolation as e:
            record["status"] = "internal_error"
            record["message"] = str(e)
        except ValueError as e:
            record["status"] = "rejected"
            record["message"] = str(e)
        if oracle_cap > 0:
            try:
                found = brute_force_search(g, q, SearchMode.FIRST, cap=oracle_cap)
                record["oracle"] = "found" if found is not None else "none"
            except OracleCapExceeded:
                record["oracle"] = "skipped"
        results.append(record)
    return results, time.perf_counter() - start


def _run_entry(args: tuple[int, Graph, list[WeightSet], int, WeighterConfig]):
    return run_graph(*args)


class BatchReport():
    """
    Per-graph results of a batch run in corpus order, and the malformed lines.
    `timings` holds the wall-clock seconds per graph and is kept out of the
    summary document, which is identical whatever the number of workers.
    """
    def __init__(self, results: list[dict[str, Any]], malformed: list[dict[str, Any]],
                 timings: list[float]):
        self.results = results
        self.malformed = malformed
        self.timings = timings

    @property
    def proper(self) -> int:
        return sum(1 for r in self.results if r["status"] == "proper")

    def _rate(self, records: list[dict[str, Any]]) -> float | None:
        if not records:
            return None
        return sum(1 for r in records if r["status"] == "proper") / len(records)

    @property
    def success_rate(self) -> float | None:
        return self._rate(self.results)

    @property
    def non_arithmetic_success_rate(self) -> float | None:
        """
        Success rate over the accepted graphs with non-arithmetic sets.
        """
        return self._rate([r for r in self.results
                           if not r["arithmetic"] and r["status"] != "rejected"])

    def count(self, status: str) -> int:
        return sum(1 for r in self.results if r["status"] == status)

    @property
    def exit_code(self) -> int:
        if self.count("internal_error") or self.count("improper"):
            return 3
        if self.count("fallback_exhausted"):
            return 2
        return 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "graphs": len({r["line"] for r in self.results}),
            "runs": len(self.results),
            "proper": self.proper,
            "rejected": self.count("rejected"),
            "fallback_exhausted": self.count("fallback_exhausted"),
            "internal_errors": self.count("internal_error"),
            "success_rate": self.success_rate,
            "non_arithmetic_success_rate": self.non_arithmetic_success_rate,
            "malformed": self.malformed,
            "results": self.results,
        }

    def timing_stats(self) -> dict[str, float]:
        if not self.timings:
            return {"total": 0.0, "mean": 0.0, "max": 0.0}
        total = sum(self.timings)
        return {"total": total, "mean": total / len(self.timings), "max": max(self.timings)}


def run_corpus(entries: list[tuple[int, Graph | Graph6Error]], sets: list[WeightSet],
               jobs: int = 1, oracle_cap: int = 0,
               config: WeighterConfig | None = None) -> BatchReport:
    """
    Weights every graph of a parsed corpus with every set. Malformed lines are
    reported and skipped. With jobs > 1 graphs are spread over worker
    processes; results are merged back in corpus order.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")
    config = config or WeighterConfig()
    work = []
    malformed = []
    for line, item in entries:
        if isinstance(item, Graph6Error):
            _logger.warning("Skipping %s", item)
            malformed.append({"line": line, "error": str(item)})
        else:
            work.append((line, item, sets, oracle_cap, config))

    if jobs == 1:
        outcomes = [_run_entry(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            outcomes = list(executor.map(_run_entry, work))

    results = [r for records, _ in outcomes for r in records]
    timings = [t for _, t in outcomes]
    report = BatchReport(results, malformed, timings)
    _logger.info("Batch of %d graphs: %d/%d runs proper", len(work), report.proper,
                 len(results))
    return report


def run_batch(data: str | bytes, sets: list[WeightSet], jobs: int = 1, oracle_cap: int = 0,
              config: WeighterConfig | None = None) -> BatchReport:
    """
    Weights every graph of a graph6 corpus given as text or raw bytes.
    """
    return run_corpus(parse_graph6_lines(data), sets, jobs=jobs, oracle_cap=oracle_cap,
                      config=config)
