"""Edge-list and DIMACS reading/writing."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError


def parse_graph(text: str) -> Graph:
    """Parse either the plain ``n m`` edge-list format or DIMACS ``p edge``.

    Plain format: header ``n m`` then ``m`` lines ``u v`` with 0-based ids.
    DIMACS: ``p edge n m`` then ``e u v`` lines with 1-based ids; ``c`` lines
    are comments. ``#`` comment lines are skipped in both.
    """
    lines = [
        (i, line.strip())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphError("line 1: empty graph file")
    if any(line.startswith(("p ", "p\t")) for _, line in lines):
        return _parse_dimacs(lines)
    return _parse_plain(lines)


def _ints(lineno: int, line: str, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphError(f"line {lineno}: non-integer token in {line!r}") from None


def _parse_plain(lines: list[tuple[int, str]]) -> Graph:
    lineno, header = lines[0]
    n, m = _ints(lineno, header, 2)
    if n < 0 or m < 0:
        raise GraphError(f"line {lineno}: negative count in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphError(
            f"line {lineno}: header declares {m} edges but {len(body)} edge lines follow"
        )
    edges = []
    for lineno, line in body:
        u, v = _ints(lineno, line, 2)
        _check_edge(lineno, u, v, n)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _parse_dimacs(lines: list[tuple[int, str]]) -> Graph:
    n = m = None
    edges = []
    for lineno, line in lines:
        tag, _, rest = line.partition(" ")
        if tag == "c":
            continue
        if tag == "p":
            parts = rest.split()
            if len(parts) != 3 or parts[0] not in ("edge", "col"):
                raise GraphError(f"line {lineno}: malformed problem line {line!r}")
            n, m = _ints(lineno, " ".join(parts[1:]), 2)
        elif tag == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before problem line")
            u, v = _ints(lineno, rest, 2)
            _check_edge(lineno, u - 1, v - 1, n)
            edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"line {lineno}: unknown DIMACS line {line!r}")
    if m is not None and len(edges) != m:
        raise GraphError(f"problem line declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def _check_edge(lineno: int, u: int, v: int, n: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"line {lineno}: edge ({u}, {v}) out of range for n={n}")
    if u == v:
        raise GraphError(f"line {lineno}: self-loop at vertex {u}")


def format_graph(g: Graph) -> str:
    """Canonical edge-list text with sorted edges."""
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))
