"""Injective hull H(G) built from extremal integer functions.

A vector ``f`` indexed by V(G) is extremal when ``f(x) + f(y) >= d(x, y)`` for
all pairs and every ``x`` has a partner ``y`` (possibly ``x`` itself) meeting
that bound with equality. The hull has one vertex per extremal function and
an edge between two functions at Chebyshev distance 1.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import kernels
from .errors import GraphError, HullGuardError
from .graph import Graph

DEFAULT_GUARD = 100_000


def default_guard() -> int:
    """Hull size guard; ``HELLYGAP_GUARD`` overrides the built-in default."""
    env = os.environ.get("HELLYGAP_GUARD")
    return int(env) if env else DEFAULT_GUARD


def is_extremal(g: Graph, f: Sequence[int]) -> bool:
    f = np.asarray(f, dtype=np.int64)
    if f.shape != (g.n,):
        raise GraphError(f"function has length {f.size}, graph has {g.n} vertices", kind="length")
    if (f < 0).any():
        return False
    slack = f[:, None] + f[None, :] - g.dist
    return bool((slack >= 0).all() and (slack == 0).any(axis=1).all())


def enumerate_extremal(g: Graph, guard: int | None = None) -> np.ndarray:
    """All extremal functions of ``g`` as rows, in lexicographic order.

    Depth-first over coordinates in vertex order. Fixed coordinates bound the
    rest from both sides: ``f(y) >= d(x,y) - f(x)``, and since extremal
    functions are 1-Lipschitz, ``|f(y) - f(x)| <= d(x,y)``; ``f(y) <= e(y)``
    caps everything. Branches where some fixed coordinate can no longer be
    made tight are cut.
    """
    guard = default_guard() if guard is None else int(guard)
    if guard <= 0:
        raise GraphError("guard must be positive", kind="range")
    funcs, exceeded = kernels.enumerate_extremal(np.ascontiguousarray(g.dist, dtype=np.int32), guard)
    if exceeded:
        raise HullGuardError(guard, len(funcs))
    return funcs


@dataclass(frozen=True, eq=False)
class Hull:
    """H(G) with vertex labels.

    Hull vertex ``i < graph.n`` is the real vertex ``d_i``; the remaining
    vertices are Helly vertices in lexicographic order of their functions.
    """

    graph: Graph
    functions: np.ndarray
    host: Graph

    @property
    def n_real(self) -> int:
        return self.graph.n

    @property
    def size(self) -> int:
        return self.host.n

    @cached_property
    def is_real(self) -> np.ndarray:
        flags = np.zeros(self.size, dtype=bool)
        flags[: self.n_real] = True
        return flags

    def real_of(self, i: int) -> int | None:
        return i if i < self.n_real else None

    @property
    def dist(self) -> np.ndarray:
        """BFS distances in the host graph."""
        return self.host.dist

    @cached_property
    def chebyshev(self) -> np.ndarray:
        return kernels.chebyshev_matrix(self.functions)

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {tuple(int(x) for x in f): i for i, f in enumerate(self.functions)}

    def function_set(self) -> set[tuple[int, ...]]:
        return set(self.index)

    def edge_set(self) -> set[frozenset]:
        """Edges as unordered pairs of function tuples (label-canonical)."""
        keys = [tuple(int(x) for x in f) for f in self.functions]
        return {frozenset((keys[u], keys[v])) for u, v in self.host.edges}

    def to_dict(self) -> dict:
        return {
            "n_real": self.n_real,
            "vertices": self.functions.tolist(),
            "real": self.is_real.tolist(),
            "edges": [list(e) for e in self.host.edges],
        }


def build_hull(g: Graph, guard: int | None = None) -> Hull:
    funcs = enumerate_extremal(g, guard)
    real_mask = (funcs == 0).any(axis=1)
    helly = funcs[~real_mask]
    ordered = np.ascontiguousarray(np.vstack([g.dist.astype(np.int32), helly]), dtype=np.int32)
    if int(real_mask.sum()) != g.n:
        raise AssertionError("enumeration lost a distance vector")
    pairs = kernels.chebyshev_edges(ordered)
    host = Graph(len(ordered), map(tuple, pairs.tolist()))
    ordered.setflags(write=False)
    return Hull(graph=g, functions=ordered, host=host)


def helly_vertices(h: Hull) -> tuple[int, ...]:
    """Hull vertices whose function is positive everywhere."""
    return tuple(int(i) for i in np.nonzero((h.functions > 0).all(axis=1))[0])


def pendant_extension(h: Hull, v: int) -> set[tuple[int, ...]]:
    """Function labels of H(G) + {x} for a pendant x at real vertex v.

    Each hull vertex f gains the coordinate ``f(v) + 1``; the pendant itself
    is the distance vector of the new vertex.
    """
    out = {tuple(int(x) for x in f) + (int(f[v]) + 1,) for f in h.functions}
    out.add(tuple(int(x) + 1 for x in h.graph.dist[v]) + (0,))
    return out
