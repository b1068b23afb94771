import networkx as nx
import pytest
from regweight import Graph, gen_random_regular, load_graphs


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph(h.number_of_nodes(), h.edges())


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def cubic_corpus() -> list[Graph]:
    """
    Every connected cubic graph on up to 10 vertices, larger named cubic
    graphs and random cubic graphs on 12 vertices.
    """
    graphs = [g for _, g in load_graphs("tests/fixtures/cubic_le10.g6")]
    named = [nx.moebius_kantor_graph(), nx.heawood_graph(), nx.truncated_tetrahedron_graph(),
             nx.frucht_graph()]
    graphs += [from_nx(h) for h in named]
    for seed in range(10):
        graphs.append(gen_random_regular(12, 3, seed))
    return graphs


@pytest.fixture()
def k4_file() -> str:
    return "tests/fixtures/k4.g6"


@pytest.fixture()
def k33_file() -> str:
    return "tests/fixtures/k33.el"


@pytest.fixture()
def path_file() -> str:
    return "tests/fixtures/path.el"


@pytest.fixture()
def corpus_file() -> str:
    return "tests/fixtures/corpus.g6"


@pytest.fixture()
def empty_corpus_file() -> str:
    return "tests/fixtures/empty.g6"


@pytest.fixture()
def cubic_le10_file() -> str:
    return "tests/fixtures/cubic_le10.g6"


@pytest.fixture()
def k4() -> Graph:
    return from_nx(nx.complete_graph(4))


@pytest.fixture()
def k33() -> Graph:
    return Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


@pytest.fixture()
def petersen() -> Graph:
    return from_nx(nx.petersen_graph())


@pytest.fixture()
def prism() -> Graph:
    return from_nx(nx.circular_ladder_graph(3))


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])
