"""Edge-list text format.

First non-comment line ``n m``, then ``m`` lines ``u v`` with 0-based ids.
Lines starting with ``#`` and blank lines are ignored.
"""
from __future__ import annotations

from pathlib import Path

from .errors import GraphError, ParseError
from .graph import Graph


def parse_graph(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    expected = 0
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last_line = lineno
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 1 or b < 0:
                raise ParseError("header needs n >= 1 and m >= 0", lineno)
            header = (a, b)
            expected = b
            continue
        n = header[0]
        if len(edges) >= expected:
            raise ParseError(f"more than {expected} edge lines", lineno, kind="count")
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno, kind="range")
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno, kind="loop")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno, kind="duplicate")
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(edges) != expected:
        raise ParseError(f"header promises {expected} edges, found {len(edges)}", last_line,
                         kind="count")
    try:
        return Graph(header[0], edges)
    except GraphError as exc:
        raise ParseError(str(exc), kind=exc.kind) from None


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment))
