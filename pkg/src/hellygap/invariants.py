"""Comparison parameters: hyperbolicity, interval thinness, alpha_i-metric,
chordality, and audits of user-supplied tree decompositions."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .graph import Graph

DEFAULT_CHORDALITY_GUARD = 12
CHORDALITY_STEP_BUDGET = 200_000


def _dist(g_or_dist) -> np.ndarray:
    d = g_or_dist.dist if isinstance(g_or_dist, Graph) else g_or_dist
    return np.ascontiguousarray(d, dtype=np.int32)


def hyperbolicity_2delta(g) -> int:
    """2*delta(G) from the four-point condition (accepts a Graph or a distance matrix)."""
    return int(kernels.two_delta(_dist(g)))


def interval_thinness(g) -> int:
    return int(kernels.interval_thinness(_dist(g)))


def alpha_i_parameter(g) -> int:
    """Least i with d(x,v) >= d(x,y) + d(y,v) - i whenever z in I(x,y), y in I(z,v), z ~ y."""
    return int(kernels.alpha_i(_dist(g)))


def chordality(g: Graph, guard: int = DEFAULT_CHORDALITY_GUARD,
               step_budget: int = CHORDALITY_STEP_BUDGET) -> int:
    """Length of the longest induced cycle; 0 for forests.

    Cycles are grown as induced paths from their smallest vertex, with the
    second vertex smaller than the last to skip mirror images. Cycles up to
    ``guard`` are found exactly. A return of ``guard + 1`` means the search
    either found a longer induced cycle or ran out of ``step_budget`` before
    ruling one out.
    """
    if guard < 3:
        raise ValueError("guard must be >= 3")
    adj = [set(a) for a in g.adjacency]
    best = 0
    steps = 0
    exceeded = False

    def grow(path: list[int], on_path: set[int]) -> None:
        nonlocal best, steps, exceeded
        s, last = path[0], path[-1]
        for w in adj[last]:
            if w <= s or w in on_path:
                continue
            # w may touch only `last` among interior vertices (and s to close)
            if any(w in adj[p] for p in path[1:-1]):
                continue
            steps += 1
            if steps > step_budget:
                exceeded = True
                return
            if s in adj[w]:
                if len(path) >= 2 and path[1] < w:
                    length = len(path) + 1
                    if length > guard:
                        exceeded = True
                    else:
                        best = max(best, length)
                continue
            path.append(w)
            on_path.add(w)
            grow(path, on_path)
            path.pop()
            on_path.discard(w)
            if exceeded:
                return

    for s in range(g.n):
        for v in adj[s]:
            if v > s:
                grow([s, v], {s, v})
                if exceeded:
                    return guard + 1
    return best


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_json(cls, text: str) -> "TreeDecomposition":
        data = json.loads(text)
        return cls(
            bags=tuple(tuple(int(v) for v in b) for b in data["bags"]),
            tree_edges=tuple((int(a), int(b)) for a, b in data.get("tree_edges", [])),
        )

    def to_json(self) -> str:
        return json.dumps({"bags": [list(b) for b in self.bags],
                           "tree_edges": [list(e) for e in self.tree_edges]})


@dataclass(frozen=True)
class DecompositionAudit:
    valid: bool
    width: int
    breadth: int
    length: int
    problems: list[str] = field(default_factory=list)


def _is_tree(k: int, edges: Sequence[tuple[int, int]]) -> bool:
    if k == 0 or len(edges) != k - 1:
        return False
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        if not (0 <= a < k and 0 <= b < k):
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def _connected_within(nodes: set[int], edges: Sequence[tuple[int, int]]) -> bool:
    if not nodes:
        return True
    adj = {u: [] for u in nodes}
    for a, b in edges:
        if a in nodes and b in nodes:
            adj[a].append(b)
            adj[b].append(a)
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == nodes


def audit_tree_decomposition(g: Graph, td: TreeDecomposition) -> DecompositionAudit:
    """Validity plus width, breadth and length. Metrics are reported even when invalid."""
    problems = []
    bags = [tuple(sorted(set(b))) for b in td.bags]
    if not _is_tree(len(bags), td.tree_edges):
        problems.append("bag graph is not a tree")
    covered = set().union(*bags) if bags else set()
    missing = sorted(set(range(g.n)) - covered)
    if missing:
        problems.append(f"vertices not in any bag: {missing}")
    bagsets = [set(b) for b in bags]
    for u, v in g.edges:
        if not any(u in b and v in b for b in bagsets):
            problems.append(f"edge ({u}, {v}) not in any bag")
    for v in sorted(covered):
        holding = {i for i, b in enumerate(bagsets) if v in b}
        if not _connected_within(holding, td.tree_edges):
            problems.append(f"bags containing {v} are not connected")
    d = g.dist
    nonempty = [list(b) for b in bags if b]
    width = max((len(b) for b in bags), default=0) - 1
    breadth = max((int(d[:, b].max(axis=1).min()) for b in nonempty), default=0)
    length = max((int(d[np.ix_(b, b)].max()) for b in nonempty), default=0)
    return DecompositionAudit(not problems, width, breadth, length, problems)
