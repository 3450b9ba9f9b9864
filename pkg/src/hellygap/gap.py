"""Helly-gap alpha(G), computed from the hull and by brute force over disk systems."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import kernels
from .errors import GraphError, OracleBudgetError
from .graph import Graph
from .hull import Hull, build_hull

DEFAULT_ORACLE_BUDGET = 10**7
MAX_SUBSET_N = 20


@dataclass(frozen=True)
class GapCertificate:
    """alpha plus a witness.

    From the hull, ``witness`` is the function of a Helly vertex at distance
    alpha from every real vertex. From the oracle, it is a radius vector whose
    pairwise-intersecting disks need inflation alpha to share a vertex.
    """

    alpha: int
    witness: tuple[int, ...] | None
    source: str

    def to_dict(self) -> dict:
        return {"value": self.alpha, "witness": list(self.witness) if self.witness else None,
                "source": self.source}


@dataclass(frozen=True)
class DiskSystemResult:
    pairwise: bool
    common_after_inflation: bool
    witness_vertex: int | None


def gap_from_hull(h: Hull) -> GapCertificate:
    """alpha = max over hull vertices of the distance to the nearest real vertex.

    Computed from labels (``min_v f(v)``) and from host BFS distances; the two
    must agree.
    """
    by_label = h.functions.min(axis=1)
    by_bfs = h.dist[:, : h.n_real].min(axis=1)
    if not np.array_equal(by_label, by_bfs):
        raise AssertionError("hull label distances disagree with BFS distances")
    alpha = int(by_label.max())
    if alpha == 0:
        return GapCertificate(0, None, "hull")
    # Helly vertices are stored in lexicographic order, so the first argmax is the smallest
    i = int(np.argmax(by_label))
    return GapCertificate(alpha, tuple(int(x) for x in h.functions[i]), "hull")


def helly_gap(g: Graph, guard: int | None = None) -> int:
    return gap_from_hull(build_hull(g, guard)).alpha


def gap_oracle(g: Graph, budget: int = DEFAULT_ORACLE_BUDGET) -> GapCertificate:
    """alpha straight from the definition, by exhaustion over radius vectors.

    Only S = V with radii in ``[0, diam]`` is searched. A vertex left out of S
    behaves like a disk of radius diam, which is all of V and constrains
    nothing; radii above diam give the same disk. So this space covers every
    disk system up to equivalence.

    The search returns the worst inflation directly rather than testing
    alpha = 0, 1, ... in turn; the first alpha with no violating system is
    that maximum.
    """
    diam = g.diameter
    if (diam + 1) ** g.n > budget:
        raise OracleBudgetError(
            f"oracle budget exceeded: (diam+1)^n = {(diam + 1) ** g.n} > {budget}"
        )
    alpha, witness, _ = kernels.oracle_gap(np.ascontiguousarray(g.dist, dtype=np.int32), diam)
    return GapCertificate(int(alpha), None if witness is None else tuple(int(x) for x in witness),
                          "oracle")


def oracle_feasible(g: Graph, budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    return (g.diameter + 1) ** g.n <= budget


def check_disk_system(g: Graph, radii: Mapping[int, int] | Sequence[int], alpha: int = 0) -> DiskSystemResult:
    """Pairwise intersection of {D(v, r(v))} and whether the alpha-inflated disks share a vertex."""
    if alpha < 0:
        raise GraphError("inflation must be non-negative", kind="range")
    if isinstance(radii, Mapping):
        items = sorted((int(v), int(r)) for v, r in radii.items())
    else:
        items = list(enumerate(int(r) for r in radii))
    for v, r in items:
        if not 0 <= v < g.n:
            raise GraphError(f"disk center {v} out of range", kind="range")
        if r < 0:
            raise GraphError(f"negative radius at {v}", kind="range")
    if not items:
        return DiskSystemResult(True, True, 0)
    centers = np.array([v for v, _ in items])
    r = np.array([r for _, r in items])
    d = g.dist
    pairwise = bool((d[np.ix_(centers, centers)] <= r[:, None] + r[None, :]).all())
    inside = (d[:, centers] <= r[None, :] + alpha).all(axis=1)
    hits = np.nonzero(inside)[0]
    return DiskSystemResult(pairwise, bool(hits.size), int(hits[0]) if hits.size else None)


def is_helly(g: Graph, guard: int | None = None) -> bool:
    h = build_hull(g, guard)
    return gap_from_hull(h).alpha == 0


def max_subset_gap_bound(g: Graph) -> tuple[int, tuple[int, ...]]:
    """max over non-empty M of floor((2 rad(M) - diam(M)) / 2) and an argmax M.

    This is a lower bound on alpha(G); whether it is always equal is open.
    """
    if g.n > MAX_SUBSET_N:
        raise GraphError(f"subset explorer limited to n <= {MAX_SUBSET_N}", kind="too_large")
    best, mask = kernels.max_subset_gap(np.ascontiguousarray(g.dist, dtype=np.int32))
    return int(best), tuple(v for v in range(g.n) if int(mask) >> v & 1)
