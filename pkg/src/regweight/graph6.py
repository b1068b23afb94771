import hashlib
from pathlib import PosixPath
from typing import Iterable
import networkx as nx
from regweight.errors import Graph6Error
from regweight.graph import Graph, parse_edge_list

HEADER = ">>graph6<<"


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def encode_graph6(g: Graph) -> str:
    """
    Encodes g in graph6 (no header, no newline).
    """
    return nx.to_graph6_bytes(_to_networkx(g), header=False).rstrip(b"\n").decode("ascii")


def _check(line: str, line_no: int | None) -> int:
    """
    Validates the framing of a graph6 line and returns the offset where the
    encoding starts (after the optional header). Errors carry the byte offset
    of the first bad byte.
    """
    def fail(msg: str, offset: int):
        return Graph6Error(msg, offset=offset, line=line_no)

    start = len(HEADER) if line.startswith(HEADER) else 0
    if len(line) == start:
        raise fail("Empty graph6 input", start)
    codes = []
    for i in range(start, len(line)):
        c = ord(line[i])
        if not 63 <= c <= 126:
            raise fail(f"Byte {c} outside the graph6 range 63..126", i)
        codes.append(c - 63)

    if codes[0] != 63:
        n, pos = codes[0], 1
    elif len(codes) >= 4 and codes[1] != 63:
        n, pos = (codes[1] << 12) | (codes[2] << 6) | codes[3], 4
    elif len(codes) >= 8 and codes[1] == 63:
        n, pos = 0, 8
        for c in codes[2:8]:
            n = (n << 6) | c
    else:
        raise fail("Truncated size header", start + len(codes))

    nbits = n * (n - 1) // 2
    needed = (nbits + 5) // 6
    body = codes[pos:]
    if len(body) < needed:
        raise fail(f"Truncated adjacency: expected {needed} bytes, got {len(body)}",
                   start + len(codes))
    if len(body) > needed:
        raise fail("Trailing garbage", start + pos + needed)
    if needed and body[-1] & ((1 << (needed * 6 - nbits)) - 1):
        raise fail("Non-zero padding bits", start + pos + needed - 1)
    return start


def _decode(line: str, line_no: int | None) -> Graph:
    start = _check(line, line_no)
    h = nx.from_graph6_bytes(line[start:].encode("ascii"))
    return Graph(h.number_of_nodes(), h.edges())


def parse_graph6(text: str) -> Graph:
    """
    Parses a single graph6 graph. Surrounding whitespace is ignored; anything
    else after the encoding is an error.
    """
    line = text.strip()
    if "\n" in line:
        raise Graph6Error("Trailing garbage", offset=line.index("\n"))
    return _decode(line, None)


def _line_text(raw: str | bytes, line_no: int) -> str:
    if isinstance(raw, str):
        return raw
    try:
        return raw.decode("ascii")
    except UnicodeDecodeError as e:
        raise Graph6Error(f"Byte {raw[e.start]} is not ASCII", offset=e.start,
                          line=line_no) from e


def parse_graph6_lines(data: str | bytes) -> list[tuple[int, Graph | Graph6Error]]:
    """
    Parses a graph6 corpus, one graph per line. Blank lines are skipped.
    Returns (line number, graph or error) pairs so that a malformed line,
    undecodable bytes included, does not stop the others from being read.
    """
    out: list[tuple[int, Graph | Graph6Error]] = []
    for i, raw in enumerate(data.splitlines()):
        try:
            line = _line_text(raw, i + 1).strip()
            if not line:
                continue
            out.append((i + 1, _decode(line, i + 1)))
        except Graph6Error as e:
            out.append((i + 1, e))
    return out


def load_graphs(file: str | PosixPath) -> list[tuple[int, Graph | Graph6Error]]:
    """
    Loads a graph6 corpus file. Lines are decoded one at a time.
    """
    with open(file, "rb") as f:
        return parse_graph6_lines(f.read())


def write_graph6(graphs: Iterable[Graph], file: str | PosixPath, encoding: str = "ascii"):
    """
    Writes the graphs to a file, one graph6 line per graph.
    """
    with open(file, "w", encoding=encoding) as f:
        for g in graphs:
            f.write(encode_graph6(g) + "\n")


def parse_graph(text: str) -> Graph:
    """
    Parses either an edge list or a single graph6 graph. The edge-list format
    is recognized by a first non-blank line holding a single integer; graph6
    never starts with a digit.
    """
    for line in text.splitlines():
        tokens = line.split()
        if tokens:
            if len(tokens) == 1 and tokens[0].isdigit():
                return parse_edge_list(text)
            break
    return parse_graph6(text)


def load_graph(file: str | PosixPath, encoding: str = "ascii") -> Graph:
    with open(file, "r", encoding=encoding) as f:
        return parse_graph(f.read())


def graph_digest(g: Graph) -> str:
    """
    sha256 of the graph6 encoding; identifies the input of a certificate.
    """
    return hashlib.sha256(encode_graph6(g).encode("ascii")).hexdigest()
