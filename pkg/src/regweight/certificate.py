import json
from fractions import Fraction
from pathlib import PosixPath
from typing import Any, Sequence
from regweight.errors import CertificateError
from regweight.graph import Graph
from regweight.graph6 import graph_digest
from regweight.verifier import ConflictReport, verify_proper
from regweight.weightset import WeightSet, format_rational, to_rational

FORMAT = "regweight-certificate"
VERSION = 1


class Certificate():
    """
    A weighting of a graph over a weight set, with the verdict of the
    verifier, the construction branch that produced it and the milestones
    recorded along the way. Weights are indexed by edge id.
    """
    def __init__(self, *, graph: Graph, weight_set: WeightSet, weights: Sequence[Fraction],
                 branch: str, milestones: list[str] | None = None):
        if len(weights) != graph.m:
            raise ValueError(f"Expected {graph.m} weights, got {len(weights)}")
        self.digest = graph_digest(graph)
        self.n = graph.n
        self.edges = list(graph.edges)
        self.weight_set = weight_set
        self.weights = [Fraction(w) for w in weights]
        self.branch = branch
        self.milestones = list(milestones or [])
        self.report = verify_proper(graph, self.weights, weight_set)

    @property
    def proper(self) -> bool:
        return self.report.is_proper

    @property
    def degrees(self) -> list[Fraction]:
        return self.report.degrees

    def to_dict(self) -> dict[str, Any]:
        return {
            "format": FORMAT,
            "version": VERSION,
            "graph": {"sha256": self.digest, "n": self.n, "m": len(self.edges)},
            "weight_set": [format_rational(x) for x in self.weight_set],
            "branch": self.branch,
            "edges": [{"u": u, "v": v, "w": format_rational(w)}
                      for (u, v), w in zip(self.edges, self.weights)],
            "weighted_degrees": [format_rational(d) for d in self.degrees],
            "verdict": {"proper": self.proper, "conflicts": self.report.count},
            "milestones": self.milestones,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def __str__(self):
        verdict = "proper" if self.proper else f"{self.report.count} conflicts"
        return f"Certificate({self.weight_set}, {self.branch}, {verdict})"

    def __repr__(self):
        return self.__str__()


def _field(d: dict, key: str, kind: type) -> Any:
    if key not in d:
        raise CertificateError(f"Missing field '{key}'")
    if not isinstance(d[key], kind) or (isinstance(d[key], bool) and kind is not bool):
        raise CertificateError(f"Field '{key}' should be a {kind.__name__}")
    return d[key]


class CertificateData():
    """
    A certificate read back from JSON, not yet checked against any graph.
    """
    def __init__(self, *, digest: str, n: int, edges: list[tuple[int, int]],
                 weight_set: WeightSet, weights: list[Fraction], branch: str,
                 milestones: list[str]):
        self.digest = digest
        self.n = n
        self.edges = edges
        self.weight_set = weight_set
        self.weights = weights
        self.branch = branch
        self.milestones = milestones

    @classmethod
    def from_dict(cls, d: Any) -> 'CertificateData':
        if not isinstance(d, dict) or d.get("format") != FORMAT:
            raise CertificateError(f"Not a {FORMAT} document")
        if d.get("version") != VERSION:
            raise CertificateError(f"Unsupported certificate version {d.get('version')!r}")
        graph = _field(d, "graph", dict)
        raw_edges = _field(d, "edges", list)
        m = _field(graph, "m", int)
        if m != len(raw_edges):
            raise CertificateError(f"Certificate declares {m} edges but lists {len(raw_edges)}")
        try:
            weight_set = WeightSet(_field(d, "weight_set", list))
            edges = []
            weights = []
            for item in raw_edges:
                if not isinstance(item, dict):
                    raise CertificateError(f"Malformed edge entry {item!r}")
                edges.append((_field(item, "u", int), _field(item, "v", int)))
                weights.append(to_rational(_field(item, "w", str)))
        except CertificateError:
            raise
        except ValueError as e:
            raise CertificateError(str(e)) from e
        return cls(digest=_field(graph, "sha256", str), n=_field(graph, "n", int),
                   edges=edges, weight_set=weight_set, weights=weights,
                   branch=_field(d, "branch", str),
                   milestones=list(d.get("milestones", [])))


def write_certificate(cert: Certificate, file: str | PosixPath, encoding: str = "utf-8"):
    with open(file, "w", encoding=encoding) as f:
        f.write(cert.dumps())


def loads_certificate(text: str) -> CertificateData:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateError(f"Invalid JSON: {e}") from e
    return CertificateData.from_dict(d)


def load_certificate(file: str | PosixPath, encoding: str = "utf-8") -> CertificateData:
    with open(file, "r", encoding=encoding) as f:
        return loads_certificate(f.read())


def check_certificate(g: Graph, cert: CertificateData) -> ConflictReport:
    """
    Checks a certificate read back from disk against g: same vertex count,
    same edges in the same order, every weight in the declared set. Weighted
    degrees and conflicts are recomputed from the weights.
    """
    if cert.n != g.n:
        raise CertificateError(f"Certificate is for {cert.n} vertices, graph has {g.n}")
    if len(cert.edges) != g.m:
        raise CertificateError(f"Certificate has {len(cert.edges)} edges, graph has {g.m}")
    for e, (u, v) in enumerate(cert.edges):
        if (min(u, v), max(u, v)) != g.edges[e]:
            raise CertificateError(f"Edge {e} is {u} {v} in the certificate, "
                                   f"{g.edges[e][0]} {g.edges[e][1]} in the graph")
    if cert.digest != graph_digest(g):
        raise CertificateError("Graph digest does not match the certificate")
    return verify_proper(g, cert.weights, cert.weight_set)
