from typing import Iterable, Iterator
from regweight.errors import EdgeListError


def iter_bits(mask: int) -> Iterator[int]:
    """
    Yields the positions of the set bits of mask in ascending order.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph():
    """
    A simple undirected graph on the vertices 0..n-1.

    Adjacency is kept as one neighbor bit-set (a Python int) per vertex. Edges
    are stored canonically as (u, v) with u < v and sorted lexicographically;
    the position of an edge in that list is its edge id. Graph values are
    immutable.
    """
    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"Negative vertex count {n}")
        adjacency = [0] * n
        canonical = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Edge {u} {v} has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"Self-loop on vertex {u}")
            if adjacency[u] >> v & 1:
                raise ValueError(f"Duplicate edge {u} {v}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
            canonical.append((min(u, v), max(u, v)))
        canonical.sort()

        self._n = n
        self._adjacency = tuple(adjacency)
        self._edges = tuple(canonical)
        self._edge_ids = {e: i for i, e in enumerate(canonical)}
        self._neighbors = tuple(tuple(iter_bits(a)) for a in adjacency)
        incident: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(canonical):
            incident[u].append(i)
            incident[v].append(i)
        self._incident = tuple(tuple(x) for x in incident)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """
        The canonical edge list; edges[e] are the endpoints of edge id e.
        """
        return self._edges

    @property
    def adjacency(self) -> tuple[int, ...]:
        return self._adjacency

    def neighbors(self, v: int) -> tuple[int, ...]:
        """
        The neighbors of v in ascending order.
        """
        return self._neighbors[v]

    def neighbor_mask(self, v: int) -> int:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def incident(self, v: int) -> tuple[int, ...]:
        """
        The ids of the edges incident to v in ascending order.
        """
        return self._incident[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adjacency[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        if key not in self._edge_ids:
            raise ValueError(f"No edge {u} {v}")
        return self._edge_ids[key]

    def components(self) -> list[list[int]]:
        """
        Connected components, each sorted, ordered by smallest vertex.
        """
        seen = 0
        comps = []
        for s in range(self._n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self._adjacency[v]
                frontier = reach & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def is_nice(self) -> bool:
        """
        True when no connected component is a single edge (K2).
        """
        return not any(len(c) == 2 for c in self.components())

    def __eq__(self, other) -> bool:
        if isinstance(other, Graph):
            return self._n == other._n and self._edges == other._edges
        return False

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __str__(self):
        return f"Graph(n={self._n}, m={self.m})"

    def __repr__(self):
        return self.__str__()


def regularity(g: Graph) -> int | None:
    """
    Returns k when every vertex of g has degree k, None otherwise (or when g
    has no vertex).
    """
    if g.n == 0:
        return None
    k = g.degree(0)
    if all(g.degree(v) == k for v in range(1, g.n)):
        return k
    return None


def parse_edge_list(text: str) -> Graph:
    """
    Parses the edge-list format: a first line with the vertex count, then one
    "u v" pair of 0-based vertex ids per line. Blank lines are ignored.
    """
    rows = [(i + 1, line.split()) for i, line in enumerate(text.splitlines())]
    rows = [(i, tokens) for i, tokens in rows if tokens]
    if not rows:
        raise EdgeListError("Empty edge list", line=1)

    header_line, header = rows[0]
    if len(header) != 1 or not header[0].isdigit():
        raise EdgeListError(f"Expected a vertex count, got {' '.join(header)!r}",
                            line=header_line)
    n = int(header[0])

    edges = []
    seen: set[tuple[int, int]] = set()
    for line, tokens in rows[1:]:
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise EdgeListError(f"Expected two vertex ids, got {' '.join(tokens)!r}", line=line)
        u, v = int(tokens[0]), int(tokens[1])
        if u >= n or v >= n:
            raise EdgeListError(f"Vertex id {max(u, v)} is not below {n}", line=line)
        if u == v:
            raise EdgeListError(f"Self-loop on vertex {u}", line=line)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"Duplicate edge {u} {v}", line=line)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
