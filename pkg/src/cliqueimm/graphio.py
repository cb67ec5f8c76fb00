"""Reading and writing graphs.

Two text formats are understood:

* edge list: first line ``n m``, then ``m`` lines ``u v`` with 0-indexed ids;
* DIMACS ``.col``: ``c`` comment lines, one ``p edge n m`` line and ``e u v``
  lines with 1-indexed ids.

The format is sniffed from the first non-blank, non-comment line.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph


class GraphParseError(ValueError):
    pass


def _parse_dimacs(lines: list[tuple[int, str]]) -> Graph:
    n = m = None
    edges = []
    for lineno, line in lines:
        tok = line.split()
        if tok[0] == "c":
            continue
        if tok[0] == "p":
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise GraphParseError(f"line {lineno}: bad problem line {line!r}")
            n, m = int(tok[2]), int(tok[3])
        elif tok[0] == "e":
            if n is None:
                raise GraphParseError(f"line {lineno}: edge before problem line")
            if len(tok) != 3:
                raise GraphParseError(f"line {lineno}: bad edge line {line!r}")
            u, v = int(tok[1]) - 1, int(tok[2]) - 1
            edges.append((u, v))
        else:
            raise GraphParseError(f"line {lineno}: unknown line {line!r}")
    if n is None:
        raise GraphParseError("missing problem line")
    # DIMACS files in the wild often list both orientations of an edge
    seen = set()
    uniq = []
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            uniq.append(key)
    return Graph.from_edges(n, uniq)


def _parse_edge_list(lines: list[tuple[int, str]]) -> Graph:
    lineno, header = lines[0]
    tok = header.split()
    if len(tok) != 2:
        raise GraphParseError(f"line {lineno}: expected 'n m', got {header!r}")
    n, m = int(tok[0]), int(tok[1])
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, line in body:
        tok = line.split()
        if len(tok) != 2:
            raise GraphParseError(f"line {lineno}: malformed edge {line!r}")
        edges.append((int(tok[0]), int(tok[1])))
    return Graph.from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphParseError("empty input")
    try:
        if lines[0][1].split()[0] in ("c", "p"):
            return _parse_dimacs(lines)
        return _parse_edge_list(lines)
    except GraphParseError:
        raise
    except ValueError as exc:
        raise GraphParseError(str(exc)) from exc


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"]
    rows.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(rows) + "\n"


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))
