"""Full verification run over one graph, and report rendering."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import eccentricity as ecc_mod
from .errors import HullGuardError, OracleBudgetError
from .gap import (
    DEFAULT_ORACLE_BUDGET,
    GapCertificate,
    check_disk_system,
    gap_from_hull,
    gap_oracle,
    max_subset_gap_bound,
    oracle_feasible,
)
from .graph import Graph, add_pendant, graph_power, is_isometric_embedding
from .hull import Hull, build_hull, helly_vertices, enumerate_extremal, pendant_extension
from .invariants import alpha_i_parameter, chordality, hyperbolicity_2delta, interval_thinness
from .reports import TheoremReport

CONJECTURE_MAX_N = 12


@dataclass
class SuiteOptions:
    guard: int | None = None
    oracle: str = "auto"  # auto | always | never
    oracle_budget: int = DEFAULT_ORACLE_BUDGET
    no_hull: bool = False
    subsets: int = 20
    seed: int = 0
    strict_paths: bool = False
    pendants: int = 3
    powers: tuple[int, ...] = (2, 3)
    pendant_all: bool = True
    conjecture_max_n: int = CONJECTURE_MAX_N
    hull_invariants: bool = True
    include_timing: bool = False


@dataclass
class RunReport:
    graph: dict
    alpha: GapCertificate | None
    oracle: GapCertificate | None
    hull: dict | None
    invariants: dict
    theorems: TheoremReport
    tree: ecc_mod.EccTree | None
    conjecture: dict | None
    subsets: list[tuple[int, ...]]
    timing: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.theorems.passed

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "graph": self.graph,
            "alpha": self.alpha.to_dict() if self.alpha else None,
            "oracle": self.oracle.to_dict() if self.oracle else None,
            "hull": self.hull,
            "invariants": self.invariants,
            "conjecture": self.conjecture,
            "subsets": [list(s) for s in self.subsets],
            "theorems": self.theorems.to_list(),
            "tree": self.tree.to_dict() if self.tree else None,
            "all_pass": self.passed,
        }
        if include_timing:
            out["timing"] = {k: round(v, 4) for k, v in self.timing.items()}
        return out


def random_subsets(n: int, count: int, seed: int) -> list[tuple[int, ...]]:
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    for _ in range(count):
        size = int(rng.integers(1, n + 1))
        out.append(tuple(sorted(int(v) for v in rng.choice(n, size=size, replace=False))))
    return out


class _Timer:
    def __init__(self, sink: dict, key: str):
        self.sink, self.key = sink, key

    def __enter__(self):
        self.t0 = time.perf_counter()

    def __exit__(self, *exc):
        self.sink[self.key] = self.sink.get(self.key, 0.0) + time.perf_counter() - self.t0


def hull_structure_report(h: Hull, report: TheoremReport | None = None,
                          guard: int | None = None) -> TheoremReport:
    """Structural facts about a built hull."""
    report = report if report is not None else TheoremReport()
    g = h.graph
    n = g.n
    d = h.dist
    ctx = {"hull_vertices": h.size}
    mismatch = np.argwhere(d != h.chebyshev)
    report.add("hull.chebyshev_distance", ctx,
               [tuple(int(x) for x in p) for p in mismatch[:3]], "==", [])
    report.add("hull.real_distance", ctx, bool((d[:, :n] == h.functions).all()), "==", True)
    report.add("hull.isometric_embedding", ctx,
               is_isometric_embedding(g, h.host, list(range(n))), "==", True)
    helly = helly_vertices(h)
    report.add("hull.helly_complement_of_real", ctx, list(helly), "==", list(range(n, h.size)))
    try:
        again = enumerate_extremal(h.host, guard)
        report.add("hull.idempotent", ctx, len(again), "==", h.size)
    except HullGuardError as exc:
        report.skip("hull.idempotent", str(exc))
    flags = _kernels().peripheral(np.ascontiguousarray(d, dtype=np.int32))
    bad = [int(v) for v in np.nonzero(flags)[0] if v >= n]
    report.add("hull.peripheral_real", ctx, bad, "==", [])
    fail = _kernels().path_extension_failure(np.ascontiguousarray(d, dtype=np.int32), n)
    report.add("hull.shortest_path_extension", ctx, tuple(int(x) for x in fail), "==", (-1, -1))
    return report


def _kernels():
    from . import kernels

    return kernels


def run_suite(g: Graph, options: SuiteOptions | None = None) -> RunReport:
    opt = options or SuiteOptions()
    timing: dict[str, float] = {}
    rep = TheoremReport()
    summary = {"n": g.n, "m": g.m, "rad": g.radius, "diam": g.diameter}

    hull = None
    hull_info = None
    skip_reason = None
    if opt.no_hull:
        skip_reason = "hull disabled (--no-hull)"
    else:
        with _Timer(timing, "hull"):
            try:
                hull = build_hull(g, opt.guard)
            except HullGuardError as exc:
                skip_reason = str(exc)
    cert = gap_from_hull(hull) if hull is not None else None
    if hull is not None:
        hull_info = {"vertices": hull.size, "edges": hull.host.m,
                     "helly_vertices": hull.size - hull.n_real,
                     "rad": hull.host.radius, "diam": hull.host.diameter}
        by_label = int(hull.functions.min(axis=1).max())
        by_bfs = int(hull.dist[:, : g.n].min(axis=1).max())
        rep.add("closeRealVertex", {}, by_label, "==", by_bfs)

    oracle = None
    want_oracle = opt.oracle == "always" or (opt.oracle == "auto" and oracle_feasible(g, opt.oracle_budget))
    if want_oracle:
        with _Timer(timing, "oracle"):
            try:
                oracle = gap_oracle(g, opt.oracle_budget)
            except OracleBudgetError as exc:
                rep.skip("gap.oracle_equivalence", str(exc))
    if oracle is not None:
        if cert is not None:
            rep.add("gap.oracle_equivalence", {}, oracle.alpha, "==", cert.alpha)
        if oracle.witness is not None:
            tight = check_disk_system(g, oracle.witness, oracle.alpha - 1)
            rep.add("gap.oracle_witness", {"radii": oracle.witness},
                    (tight.pairwise, tight.common_after_inflation), "==", (True, False))
    if cert is None and oracle is not None:
        cert = GapCertificate(oracle.alpha, oracle.witness, "oracle")
    alpha = cert.alpha if cert is not None else None

    # invariants of G
    inv: dict = {}
    with _Timer(timing, "invariants"):
        inv["two_delta"] = hyperbolicity_2delta(g)
        inv["kappa"] = interval_thinness(g)
        inv["alpha_i"] = alpha_i_parameter(g)
        inv["chordality"] = chordality(g)
        if hull is not None and opt.hull_invariants:
            inv["two_delta_hull"] = hyperbolicity_2delta(hull.dist)
            inv["kappa_hull"] = interval_thinness(hull.dist)
    rep.add("half_thin", {}, inv["kappa"], "<=", inv["two_delta"])
    if alpha is not None:
        rep.add("alpha_le_2delta", {}, alpha, "<=", inv["two_delta"])
        rep.add("alpha_le_alpha_i", {"alpha_i": inv["alpha_i"]}, alpha, "<=", -(-inv["alpha_i"] // 2))
        rep.add("hGapBounds.lower", {}, (2 * g.radius - g.diameter) // 2, "<=", alpha)
        rep.add("hGapBounds.upper", {}, alpha, "<=", g.diameter // 2)
        if g.radius == g.diameter:
            rep.add("self_centered", {}, alpha, "==", g.diameter // 2)
    if "kappa_hull" in inv:
        rep.add("alpha_le_kappa_hull", {}, alpha, "<=", inv["kappa_hull"])
        rep.add("half_thin.hull", {}, inv["kappa_hull"], "<=", inv["two_delta_hull"])
        rep.add("delta_preserved", {}, inv["two_delta_hull"], "==", inv["two_delta"])

    # hull structure, powers, pendants
    if hull is not None:
        with _Timer(timing, "hull_structure"):
            hull_structure_report(hull, rep, opt.guard)
        with _Timer(timing, "powers_pendants"):
            for k in opt.powers:
                try:
                    ak = gap_from_hull(build_hull(graph_power(g, k), opt.guard)).alpha
                    rep.add("power_bound", {"k": k, "alpha_power": ak}, ak, "<=", -(-alpha // k))
                except HullGuardError as exc:
                    rep.skip("power_bound", str(exc))
            rng = np.random.Generator(np.random.PCG64(opt.seed))
            lemma_vs = sorted(int(v) for v in rng.choice(g.n, size=min(opt.pendants, g.n), replace=False))
            pend_vs = range(g.n) if opt.pendant_all else lemma_vs
            for v in sorted(set(pend_vs) | set(lemma_vs)):
                try:
                    hp = build_hull(add_pendant(g, v), opt.guard)
                except HullGuardError as exc:
                    rep.skip("pendant_invariance", str(exc))
                    continue
                if v in pend_vs:
                    rep.add("pendant_invariance", {"v": v}, gap_from_hull(hp).alpha, "==", alpha)
                if v in lemma_vs:
                    expected = pendant_extension(hull, v)
                    got = hp.function_set()
                    rep.add("pendant_lemma.vertices", {"v": v}, len(got ^ expected), "==", 0)
                    # same labels; edges follow from labels in both hulls
                    exp_edges = {frozenset((a + (a[v] + 1,), b + (b[v] + 1,)))
                                 for a, b in map(tuple, hull.edge_set())}
                    pend = tuple(int(x) + 1 for x in g.dist[v]) + (0,)
                    real_v = tuple(int(x) for x in g.dist[v]) + (1,)
                    exp_edges.add(frozenset((pend, real_v)))
                    rep.add("pendant_lemma.edges", {"v": v}, len(hp.edge_set() ^ exp_edges), "==", 0)
    else:
        for tid in ("hull.chebyshev_distance", "power_bound", "pendant_invariance", "pendant_lemma.vertices"):
            rep.skip(tid, skip_reason or "no hull")

    # conjecture explorer (lower bound only)
    conj = None
    if g.n <= opt.conjecture_max_n:
        with _Timer(timing, "conjecture"):
            bound, argmax = max_subset_gap_bound(g)
        conj = {"max_subset_bound": bound, "argmax_subset": list(argmax),
                "alpha": alpha, "ratio": (None if not alpha else round(bound / alpha, 6)),
                "equal": (None if alpha is None else bound == alpha)}
        if alpha is not None:
            rep.add("whpLowerBoundByDiam2Rad.max_subset", {"argmax": argmax}, bound, "<=", alpha)

    # per-subset theorem rows
    subsets = [tuple(range(g.n))] + random_subsets(g.n, opt.subsets, opt.seed)
    tree = None
    if alpha is not None:
        with _Timer(timing, "theorems"):
            for M in subsets:
                rep.add("whpLowerBoundByDiam2Rad", {"M": M},
                        _subset_bound(g, M), "<=", alpha)
                ecc_mod.ecc_sandwich_report(g, M, alpha, inv.get("kappa_hull"), rep)
                ecc_mod.farthest_vertex_check(g, M, alpha, rep)
                ecc_mod.terrain_report(g, M, alpha, opt.strict_paths, rep)
                if hull is not None:
                    ecc_mod.hull_relation_report(g, M, hull, alpha, rep)
                    ecc_mod.helly_hull_report(hull, M, rep)
                    ecc_mod.unimodality_check(g, M, alpha, hull, rep)
                    t, _ = ecc_mod.ecc_tree_report(g, M, hull, alpha, rep)
                    if tree is None:
                        tree = t
    else:
        rep.skip("eccentricities.lower", skip_reason or "alpha unavailable")

    return RunReport(graph=summary, alpha=cert, oracle=oracle, hull=hull_info, invariants=inv,
                     theorems=rep, tree=tree, conjecture=conj, subsets=subsets, timing=timing)


def _subset_bound(g: Graph, M) -> int:
    e = g.dist[:, list(M)].max(axis=1)
    return (2 * int(e.min()) - int(e[list(M)].max())) // 2


def emit_report(r: RunReport, fmt: str = "json", include_timing: bool = False) -> str:
    if fmt == "json":
        return json.dumps(r.to_dict(include_timing), indent=2) + "\n"
    if fmt == "text":
        return _text_report(r, include_timing)
    raise ValueError(f"unknown format {fmt!r}; expected json or text")


def _text_report(r: RunReport, include_timing: bool) -> str:
    g = r.graph
    lines = [f"graph: n={g['n']} m={g['m']} rad={g['rad']} diam={g['diam']}"]
    if r.alpha is not None:
        lines.append(f"alpha(G) = {r.alpha.alpha}  (source: {r.alpha.source})")
        if r.alpha.witness:
            lines.append(f"  witness: {list(r.alpha.witness)}")
    else:
        lines.append("alpha(G) = unknown")
    if r.oracle is not None:
        lines.append(f"oracle alpha = {r.oracle.alpha}")
    if r.hull:
        h = r.hull
        lines.append(f"hull: {h['vertices']} vertices ({h['helly_vertices']} Helly), "
                     f"{h['edges']} edges, rad={h['rad']} diam={h['diam']}")
    inv = ", ".join(f"{k}={v}" for k, v in r.invariants.items())
    lines.append(f"invariants: {inv}")
    if r.conjecture:
        c = r.conjecture
        lines.append(f"max_M floor((2rad(M)-diam(M))/2) = {c['max_subset_bound']}  "
                     f"(alpha = {c['alpha']})")
    if r.tree:
        lines.append(f"ecc tree: root={r.tree.root} max_error={r.tree.max_error} "
                     f"bound={r.tree.bound}")
    lines.append("")
    width = max((len(c.theorem_id) for c in r.theorems), default=10)
    lines.append(f"{'theorem':<{width}}  {'status':<7} checked")
    for c in r.theorems:
        status = {True: "pass", False: "FAIL", None: "skipped"}[c.passed]
        lines.append(f"{c.theorem_id:<{width}}  {status:<7} {c.checked}")
        if c.failures:
            lines.append(f"    witness: {c.failures[0].to_dict()}")
        if c.skipped:
            lines.append(f"    reason: {c.skipped}")
    lines.append("")
    lines.append("ALL PASS" if r.passed else f"{len(r.theorems.failures)} theorem(s) FAILED")
    if include_timing:
        lines.append("timing: " + ", ".join(f"{k}={v:.3f}s" for k, v in r.timing.items()))
    return "\n".join(lines) + "\n"
