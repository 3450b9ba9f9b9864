"""Graph substrate: distances, eccentricities, centers, intervals, powers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import GraphError


class Graph:
    """Undirected, simple, connected graph on vertices ``0..n-1``.

    Construction validates the input, so every other module may assume a
    connected simple graph. Instances are treated as immutable.
    """

    __slots__ = ("n", "adjacency", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError("empty graph", kind="empty")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range 0..{n - 1}", kind="range")
            if u == v:
                raise GraphError(f"loop at vertex {u}", kind="loop")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})", kind="duplicate")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        if (self.dist < 0).any():
            raise GraphError("graph is disconnected", kind="disconnected")

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        edges = [(u, v) for u, nb in enumerate(adjacency) for v in nb if u < v]
        return cls(len(adjacency), edges)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter(
            (v for a in self.adjacency for v in a), dtype=np.int32, count=int(indptr[-1])
        )
        return indptr, indices

    @cached_property
    def dist(self) -> np.ndarray:
        d = kernels.apsp(*self.csr, self.n)
        d.setflags(write=False)
        return d

    @cached_property
    def ecc(self) -> np.ndarray:
        return self.dist.max(axis=1)

    @property
    def radius(self) -> int:
        return int(self.ecc.min())

    @property
    def diameter(self) -> int:
        return int(self.ecc.max())

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __hash__(self):
        return hash(self.adjacency)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def distance_matrix(g: Graph) -> np.ndarray:
    """Hop distances between all pairs (read-only ``int32`` array)."""
    return g.dist


def as_subset(m: Iterable[int] | None, n: int) -> tuple[int, ...]:
    """Normalise a target set: sorted, distinct, validated. ``None`` means V."""
    if m is None:
        return tuple(range(n))
    members = tuple(sorted({int(v) for v in m}))
    if not members:
        raise GraphError("empty target set", kind="empty_subset")
    if members[0] < 0 or members[-1] >= n:
        raise GraphError(f"target set has vertices outside 0..{n - 1}", kind="range")
    return members


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: np.ndarray
    radius: int
    diameter: int
    farthest: tuple[tuple[int, ...], ...]
    members: tuple[int, ...]

    def center(self, slack: int = 0) -> tuple[int, ...]:
        return tuple(int(v) for v in np.nonzero(self.ecc <= self.radius + slack)[0])


def profile_from_dist(dist: np.ndarray, members: Sequence[int]) -> EccentricityProfile:
    """Eccentricities w.r.t. ``members`` for every row of ``dist``.

    ``dist`` may be a host matrix (e.g. a hull) whose first indices are the
    members' ids; rows index every vertex of the host.
    """
    members = tuple(members)
    if not members:
        raise GraphError("empty target set", kind="empty_subset")
    sub = dist[:, list(members)]
    ecc = sub.max(axis=1)
    ecc.setflags(write=False)
    marr = np.array(members)
    farthest = tuple(tuple(int(u) for u in marr[sub[v] == ecc[v]]) for v in range(dist.shape[0]))
    return EccentricityProfile(
        ecc=ecc,
        radius=int(ecc.min()),
        diameter=int(ecc[list(members)].max()),
        farthest=farthest,
        members=members,
    )


def eccentricity_profile(g: Graph, m: Iterable[int] | None = None) -> EccentricityProfile:
    """e^M, rad(M), diam(M) and farthest sets F^M for every vertex."""
    return profile_from_dist(g.dist, as_subset(m, g.n))


def center_set(g: Graph, m: Iterable[int] | None = None, slack: int = 0) -> tuple[int, ...]:
    """C^slack(M): vertices with e^M(v) <= rad(M) + slack."""
    if slack < 0:
        raise GraphError("slack must be non-negative", kind="range")
    return eccentricity_profile(g, m).center(slack)


def interval_slice(g: Graph, x: int, y: int, k: int | None = None) -> tuple[int, ...]:
    """Vertices of I(x, y); with ``k``, only those at distance k from x."""
    d = g.dist
    dxy = int(d[x, y])
    on = d[x] + d[:, y] == dxy
    if k is not None:
        if not 0 <= k <= dxy:
            raise GraphError(f"slice index {k} outside 0..{dxy}", kind="range")
        on &= d[x] == k
    return tuple(int(u) for u in np.nonzero(on)[0])


def graph_power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise GraphError("power must be >= 1", kind="range")
    iu, iv = np.nonzero(np.triu(g.dist <= k, 1))
    return Graph(g.n, zip(iu.tolist(), iv.tolist()))


def add_pendant(g: Graph, v: int) -> Graph:
    """New vertex ``g.n`` attached to ``v`` only."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range", kind="range")
    return Graph(g.n + 1, g.edges + [(v, g.n)])


def is_isometric_embedding(sub: Graph, host: Graph, mapping: Mapping[int, int] | Sequence[int]) -> bool:
    """True iff ``mapping`` preserves all pairwise distances of ``sub``."""
    if isinstance(mapping, Mapping):
        images = [mapping[v] for v in range(sub.n)]
    else:
        images = list(mapping)
    if len(images) != sub.n:
        raise GraphError("mapping must cover every vertex", kind="mapping")
    if len(set(images)) != len(images):
        raise GraphError("mapping is not injective", kind="mapping")
    if any(not 0 <= h < host.n for h in images):
        raise GraphError("mapping image outside host", kind="mapping")
    idx = np.array(images)
    return bool((host.dist[np.ix_(idx, idx)] == sub.dist).all())


def set_distance(dist: np.ndarray, targets: Sequence[int]) -> np.ndarray:
    """d(v, targets) for every row v."""
    return dist[:, list(targets)].min(axis=1)


def set_diameter(dist: np.ndarray, members: Sequence[int]) -> int:
    idx = list(members)
    return int(dist[np.ix_(idx, idx)].max())
