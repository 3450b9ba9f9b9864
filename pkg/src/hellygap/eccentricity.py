"""Eccentricity terrain of a graph relative to its injective hull.

Checks in this module compare eccentricities e^M in G against centers, hull
distances and the Helly-gap alpha. Each check appends rows to a
:class:`~hellygap.reports.TheoremReport`; a failed row means the
implementation (not the underlying inequality) is wrong.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, as_subset, eccentricity_profile, profile_from_dist, set_diameter, set_distance
from .hull import Hull
from .reports import TheoremReport

PATH_COUNT_GUARD = 10_000


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def _members(g: Graph, m) -> tuple[int, ...]:
    return as_subset(m, g.n)


def hull_profile(hull: Hull, m: Sequence[int]):
    """e_H^M over all hull vertices (real vertices keep their original ids)."""
    return profile_from_dist(hull.dist, m)


def locality(g: Graph, m: Iterable[int] | None, v: int) -> int:
    """Distance from v to the nearest vertex of strictly smaller e^M; 0 at global minima."""
    ecc = eccentricity_profile(g, m).ecc
    lower = np.nonzero(ecc < ecc[v])[0]
    if lower.size == 0:
        return 0
    return int(g.dist[v, lower].min())


def unimodality_check(g: Graph, m, alpha: int, hull: Hull,
                      report: TheoremReport | None = None) -> TheoremReport:
    """Every v with e^M(v) > rad(M) + alpha, or d_H(v, C_H(M)) > alpha, has a
    strictly better vertex within distance 2*alpha + 1."""
    report = report if report is not None else TheoremReport()
    M = _members(g, m)
    pg = eccentricity_profile(g, M)
    ph = hull_profile(hull, M)
    to_ch = set_distance(hull.dist, ph.center())[: g.n]
    worst = 0
    for v in range(g.n):
        by_ecc = pg.ecc[v] > pg.radius + alpha
        by_hull = to_ch[v] > alpha
        if not (by_ecc or by_hull):
            continue
        lower = np.nonzero(pg.ecc < pg.ecc[v])[0]
        loc = int(g.dist[v, lower].min()) if lower.size else None
        worst = max(worst, loc or 0)
        for cond, active in (("ecc", by_ecc), ("hull_center", by_hull)):
            if active:
                report.add("unimodality", {"v": v, "M": M, "condition": cond},
                           loc if loc is not None else float("inf"), "<=", 2 * alpha + 1)
    report.note("unimodality", max_locality=worst)
    return report


def ecc_sandwich_report(g: Graph, m, alpha: int, kappa_hull: int | None = None,
                        report: TheoremReport | None = None) -> TheoremReport:
    """d(x, C^a) + rad - a <= e^M(x) <= d(x, C^a) + rad + a, plus the thinness
    refinement and C^l(M) contained in D(C^a(M), a + l)."""
    report = report if report is not None else TheoremReport()
    M = _members(g, m)
    p = eccentricity_profile(g, M)
    c_alpha = p.center(alpha)
    to_c = set_distance(g.dist, c_alpha)
    for x in range(g.n):
        ctx = {"x": x, "M": M}
        e = int(p.ecc[x])
        report.add("eccentricities.upper", ctx, e, "<=", int(to_c[x]) + p.radius + alpha)
        report.add("eccentricities.lower", ctx, e, ">=", int(to_c[x]) + p.radius - alpha)
    if kappa_hull is not None:
        to_ck = set_distance(g.dist, p.center(kappa_hull))
        for x in range(g.n):
            report.add("eccUpperBoundForIntervalThinGraphs", {"x": x, "M": M, "kappa_H": kappa_hull},
                       int(p.ecc[x]), ">=", int(to_ck[x]) + p.radius)
    for ell in range(0, g.diameter + 1):
        for x in p.center(ell):
            report.add("ClGisSubsetOfDiskAroundCkG", {"x": x, "M": M, "l": ell},
                       int(to_c[x]), "<=", alpha + ell)
    return report


def farthest_vertex_check(g: Graph, m, alpha: int,
                          report: TheoremReport | None = None) -> TheoremReport:
    """Lower bounds on e^M(y) for every y farthest from some x."""
    report = report if report is not None else TheoremReport()
    M = _members(g, m)
    p = eccentricity_profile(g, M)
    diam_c2a = set_diameter(g.dist, p.center(2 * alpha))
    diam_ca = set_diameter(g.dist, p.center(alpha))
    rhs1 = 2 * p.radius - diam_c2a - 2 * alpha
    rhs2 = 2 * p.radius - diam_ca - 4 * alpha
    for x in range(g.n):
        for y in p.farthest[x]:
            ctx = {"x": x, "y": y, "M": M}
            report.add("eccWrtDiameterOfCenter.2alpha", ctx, int(p.ecc[y]), ">=", rhs1)
            report.add("eccWrtDiameterOfCenter.4alpha", ctx, int(p.ecc[y]), ">=", rhs2)
    return report


@dataclass(frozen=True)
class EccTree:
    """BFS spanning tree rooted at a real vertex near a center of the hull center."""

    parent: tuple[int | None, ...]
    root: int
    hull_center: int
    max_error: int
    bound: int
    lemma_lhs: int
    lemma_bound: int
    root_hull_distance: int

    def edges(self) -> list[tuple[int, int]]:
        return [(p, v) for v, p in enumerate(self.parent) if p is not None]

    def to_dict(self) -> dict:
        return {"root": self.root, "hull_center": self.hull_center,
                "parent": [(-1 if p is None else p) for p in self.parent],
                "max_error": self.max_error, "bound": self.bound}


def bfs_tree(g: Graph, root: int) -> tuple[int | None, ...]:
    """Parent of each vertex: its smallest-id neighbor one BFS layer closer to ``root``."""
    d = g.dist[root]
    parent: list[int | None] = [None] * g.n
    for v in range(g.n):
        if v != root:
            parent[v] = min(u for u in g.adjacency[v] if d[u] == d[v] - 1)
    return tuple(parent)


def build_ecc_tree(g: Graph, m, hull: Hull, alpha: int) -> EccTree:
    M = _members(g, m)
    pg = eccentricity_profile(g, M)
    ph = hull_profile(hull, M)
    ch = ph.center()
    # center of the subspace C_H(M): it must itself realize rad_H(M)
    ecc_ch = hull.dist[np.ix_(list(ch), list(ch))].max(axis=1)
    c = int(ch[int(np.argmin(ecc_ch))])
    # nearest real vertex: d_H(c, d_v) = c(v); smallest id on ties
    root = int(np.argmin(hull.functions[c]))
    root_dist = int(hull.functions[c][root])
    parent = bfs_tree(g, root)
    tree = Graph(g.n, [(p, v) for v, p in enumerate(parent) if p is not None])
    e_tree = tree.dist[:, list(M)].max(axis=1)
    max_error = int((e_tree - pg.ecc).max())
    bound = _ceil_half(set_diameter(g.dist, pg.center(alpha))) + 3 * alpha
    lemma_lhs = int((g.dist[:, root] + pg.ecc[root] - pg.ecc).max())
    lemma_bound = _ceil_half(set_diameter(hull.dist, ch)) + 2 * alpha
    return EccTree(parent, root, c, max_error, bound, lemma_lhs, lemma_bound, root_dist)


def ecc_tree_report(g: Graph, m, hull: Hull, alpha: int,
                    report: TheoremReport | None = None) -> tuple[EccTree, TheoremReport]:
    report = report if report is not None else TheoremReport()
    M = _members(g, m)
    t = build_ecc_tree(g, M, hull, alpha)
    ctx = {"M": M, "root": t.root, "hull_center": t.hull_center}
    report.add("closeRealVertex.tree_root", ctx, t.root_hull_distance, "<=", alpha)
    report.add("existsVertexGoodForTree", ctx, t.lemma_lhs, "<=", t.lemma_bound)
    report.add("spanningTree", ctx, t.max_error, "<=", t.bound)
    return t, report


@dataclass(frozen=True)
class TerrainProfile:
    path: tuple[int, ...]
    up: int
    horizontal: int
    down: int

    @property
    def length(self) -> int:
        return len(self.path) - 1


def canonical_path(g: Graph, y: int, x: int) -> tuple[int, ...]:
    """Lexicographically smallest shortest (y, x)-path."""
    d = g.dist[:, x]
    path = [y]
    while path[-1] != x:
        cur = path[-1]
        path.append(min(u for u in g.adjacency[cur] if d[u] == d[cur] - 1))
    return tuple(path)


def all_shortest_paths(g: Graph, y: int, x: int, limit: int = PATH_COUNT_GUARD) -> list[tuple[int, ...]]:
    d = g.dist[:, x]
    out: list[tuple[int, ...]] = []

    def walk(path):
        if len(out) >= limit:
            return
        cur = path[-1]
        if cur == x:
            out.append(tuple(path))
            return
        for u in g.adjacency[cur]:
            if d[u] == d[cur] - 1:
                path.append(u)
                walk(path)
                path.pop()

    walk([y])
    return out


def classify_path(ecc: np.ndarray, path: Sequence[int]) -> TerrainProfile:
    up = horizontal = down = 0
    for a, b in zip(path, path[1:]):
        if ecc[a] < ecc[b]:
            up += 1
        elif ecc[a] > ecc[b]:
            down += 1
        else:
            horizontal += 1
    return TerrainProfile(tuple(int(v) for v in path), up, horizontal, down)


def nearest_in(g: Graph, y: int, targets: Sequence[int]) -> int:
    d = g.dist[y, list(targets)]
    return int(targets[int(np.argmin(d))])


def terrain_profile(g: Graph, m, y: int, alpha: int) -> TerrainProfile:
    """Edge classes along the canonical shortest path from y to its nearest vertex of C^alpha(M)."""
    M = _members(g, m)
    p = eccentricity_profile(g, M)
    c_alpha = p.center(alpha)
    if y in c_alpha:
        return TerrainProfile((y,), 0, 0, 0)
    x = nearest_in(g, y, c_alpha)
    return classify_path(p.ecc, canonical_path(g, y, x))


def terrain_report(g: Graph, m, alpha: int, strict: bool = False,
                   report: TheoremReport | None = None) -> TheoremReport:
    """Terrain identities on canonical paths between all ordered pairs, and
    2U + H <= 2*alpha on paths into C^alpha(M) (all such paths when ``strict``)."""
    report = report if report is not None else TheoremReport()
    M = _members(g, m)
    p = eccentricity_profile(g, M)
    ecc = p.ecc
    for y in range(g.n):
        for x in range(g.n):
            if x == y:
                continue
            t = classify_path(ecc, canonical_path(g, y, x))
            ctx = {"y": y, "x": x, "M": M}
            de = int(ecc[y] - ecc[x])
            report.add("upHorizontalEdgesBound.i", ctx, t.down - t.up, "==", de)
            report.add("upHorizontalEdgesBound.ii", ctx, 2 * t.up + t.horizontal, "==",
                       int(g.dist[y, x]) - de)
    c_alpha = p.center(alpha)
    report.check("upHorizontalEdgesBoundWH")  # listed even when vacuous
    for y in range(g.n):
        if y in c_alpha:
            continue
        x = nearest_in(g, y, c_alpha)
        paths = all_shortest_paths(g, y, x) if strict else [canonical_path(g, y, x)]
        if strict and len(paths) >= PATH_COUNT_GUARD:
            report.note("upHorizontalEdgesBoundWH", truncated=True)
        for path in paths:
            t = classify_path(ecc, path)
            report.add("upHorizontalEdgesBoundWH", {"y": y, "x": x, "M": M, "path": t.path},
                       2 * t.up + t.horizontal, "<=", 2 * alpha)
    return report


def hull_relation_report(g: Graph, m, hull: Hull, alpha: int,
                         report: TheoremReport | None = None) -> TheoremReport:
    """Eccentricities, radius, diameter and centers of M in G versus in H(G)."""
    report = report if report is not None else TheoremReport()
    M = _members(g, m)
    pg = eccentricity_profile(g, M)
    ph = hull_profile(hull, M)
    n = g.n
    report.add("eccentricityEqual", {"M": M}, pg.ecc.tolist(), "==", ph.ecc[:n].tolist())
    if len(M) == n:
        full = hull.dist[:n].max(axis=1)
        report.add("eccentricityEqual.full_hull", {}, g.ecc.tolist(), "==", full.tolist())
        report.add("diameterEqual.full_hull", {}, g.diameter, "==", hull.host.diameter)
    report.add("diameterEqual", {"M": M}, pg.diameter, "==", ph.diameter)
    report.add("radiusInH.upper", {"M": M}, ph.radius, "<=", pg.radius)
    report.add("radiusInH.lower", {"M": M}, pg.radius - alpha, "<=", ph.radius)
    report.add("lowerBoundOnWHByRad", {"M": M}, alpha, ">=", pg.radius - ph.radius)

    ch = ph.center()
    to_ch = set_distance(hull.dist, ch)
    for ell in range(0, 4):
        cg = pg.center(ell)
        ch_ell = ph.center(ell)
        to_ch_ell = set_distance(hull.dist, ch_ell)
        for x in cg:
            ctx = {"x": x, "M": M, "l": ell}
            report.add("ClGisSubsetOfDiskAroundCH", ctx, int(to_ch[x]), "<=", alpha + ell)
            report.add("ClGisSubsetOfDiskAroundCH.alt", ctx, int(to_ch_ell[x]), "<=", alpha)
        ctx = {"M": M, "l": ell}
        real_in_ch = [v for v in ch_ell if v < n]
        report.add("centersInclusions.left", ctx, real_in_ch, "subset", cg)
        right = [v for v in ph.center(ell + alpha) if v < n]
        report.add("centersInclusions.right", ctx, cg, "subset", right)
        if ell <= 2:
            dh = set_diameter(hull.dist, ch_ell)
            report.add("diameterOfCenters.lower", ctx, set_diameter(g.dist, cg) - 2 * alpha, "<=", dh)
            report.add("diameterOfCenters.upper", ctx, dh, "<=",
                       set_diameter(g.dist, pg.center(alpha + ell)) + 2 * alpha)
    return report


def helly_hull_report(hull: Hull, m, report: TheoremReport | None = None) -> TheoremReport:
    """Helly-graph identities on H(G) itself: the eccentricity formula,
    2rad - 1 <= diam <= 2rad, C^(l+k) = D(C^k, l), and unimodality."""
    report = report if report is not None else TheoremReport()
    M = as_subset(m, hull.n_real)
    ph = hull_profile(hull, M)
    d = hull.dist
    ch = ph.center()
    to_ch = set_distance(d, ch)
    bad = np.nonzero(ph.ecc != to_ch + ph.radius)[0]
    report.add("helly.formula", {"M": M, "vertices": hull.size},
               [int(b) for b in bad[:5]], "==", [])
    report.add("helly.mDiamRadInHelly.lower", {"M": M}, 2 * ph.radius - 1, "<=", ph.diameter)
    report.add("helly.mDiamRadInHelly.upper", {"M": M}, ph.diameter, "<=", 2 * ph.radius)
    report.add("helly.radius_half_diameter", {"M": M}, ph.radius, "==", _ceil_half(ph.diameter))
    max_k = int(ph.ecc.max()) - ph.radius
    for k in range(0, min(max_k, 3) + 1):
        ck = ph.center(k)
        to_ck = set_distance(d, ck)
        dk = set_diameter(d, ck)
        for ell in range(0, 3):
            lhs = ph.center(k + ell)
            rhs = tuple(int(v) for v in np.nonzero(to_ck <= ell)[0])
            ctx = {"M": M, "k": k, "l": ell}
            report.add("helly.center_to_disk", ctx, lhs, "==", rhs)
            report.add("helly.center_diameter", ctx, set_diameter(d, lhs), "<=", dk + 2 * ell)
    # every non-central hull vertex has a neighbor of smaller eccentricity
    worst = 0
    for v in range(hull.size):
        if ph.ecc[v] == ph.radius:
            continue
        better = any(ph.ecc[u] < ph.ecc[v] for u in hull.host.adjacency[v])
        worst += 0 if better else 1
    report.add("helly.unimodal", {"M": M}, worst, "==", 0)
    return report
