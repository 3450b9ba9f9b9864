"""Command-line entry point: ``hellygap <command> GRAPH [options]``."""
from __future__ import annotations

import argparse
import json
import sys

from . import eccentricity as ecc_mod
from .errors import HellyGapError
from .gap import gap_from_hull, gap_oracle
from .generators import FAMILIES, FamilySpec, generate
from .hull import build_hull
from .invariants import (
    TreeDecomposition,
    alpha_i_parameter,
    audit_tree_decomposition,
    chordality,
    hyperbolicity_2delta,
    interval_thinness,
)
from .io import format_graph, read_graph
from .kernels import BACKEND_NAME
from .reports import TheoremReport
from .suite import SuiteOptions, emit_report, random_subsets, run_suite


def _common(p: argparse.ArgumentParser, graph: bool = True) -> None:
    if graph:
        p.add_argument("graph", help="edge-list file ('-' for stdin)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--guard", type=int, default=None, help="max hull vertices")
    p.add_argument("--seed", type=int, default=0)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hellygap", description=__doc__)
    ap.add_argument("--backend", action="store_true", help="print the kernel backend and exit")
    sub = ap.add_subparsers(dest="command")

    g = sub.add_parser("gen", help="write a generated graph as an edge list")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("params", type=int, nargs="+")
    g.add_argument("--p", type=float, default=0.5, help="edge probability (random_connected)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", default="-")

    h = sub.add_parser("hull", help="injective hull vertices and edges")
    _common(h)

    gp = sub.add_parser("gap", help="Helly-gap with certificate")
    _common(gp)
    gp.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    gp.add_argument("--no-hull", action="store_true", help="oracle only")

    iv = sub.add_parser("invariants", help="2delta, kappa, alpha_i, chordality")
    _common(iv)
    iv.add_argument("--td", help="tree-decomposition JSON to audit")
    iv.add_argument("--hull-invariants", action="store_true", help="also compute 2delta and kappa of the hull")

    for name, text in (("terrain", "up/horizontal/down edge checks"),
                       ("tree", "eccentricity-approximating spanning tree")):
        t = sub.add_parser(name, help=text)
        _common(t)
        t.add_argument("--subsets", type=int, default=0)
        t.add_argument("--strict-paths", action="store_true")

    v = sub.add_parser("verify", help="full theorem suite")
    _common(v)
    v.add_argument("--oracle", action="store_true", help="force the oracle even when large")
    v.add_argument("--no-hull", action="store_true")
    v.add_argument("--subsets", type=int, default=20)
    v.add_argument("--strict-paths", action="store_true")
    v.add_argument("--timing", action="store_true", help="include wall-clock timing")
    return ap


def _dump(obj, fmt: str, text_lines) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2) + "\n"
    return "\n".join(text_lines) + "\n"


def _report_rows(rep: TheoremReport) -> list[str]:
    lines = []
    for c in rep:
        status = {True: "pass", False: "FAIL", None: "skipped"}[c.passed]
        lines.append(f"{c.theorem_id}: {status} ({c.checked} checked)")
        if c.failures:
            lines.append(f"    witness: {c.failures[0].to_dict()}")
    return lines


def _cmd_gen(a) -> int:
    g = generate(FamilySpec(a.family, tuple(a.params), p=a.p, seed=a.seed))
    label = FamilySpec(a.family, tuple(a.params), p=a.p, seed=a.seed).label()
    text = format_graph(g, comment=label)
    if a.output == "-":
        sys.stdout.write(text)
    else:
        with open(a.output, "w") as fh:
            fh.write(text)
    return 0


def _cmd_hull(a, g) -> int:
    h = build_hull(g, a.guard)
    d = h.to_dict()
    lines = [f"hull: {h.size} vertices ({h.size - h.n_real} Helly), {h.host.m} edges"]
    for i, f in enumerate(h.functions.tolist()):
        lines.append(f"  {i:>4} {'real ' if i < h.n_real else 'helly'} {f}")
    sys.stdout.write(_dump(d, a.format, lines))
    return 0


def _cmd_gap(a, g) -> int:
    out, lines, ok = {}, [], True
    cert = None
    if not a.no_hull:
        cert = gap_from_hull(build_hull(g, a.guard))
        out["alpha"] = cert.to_dict()
        lines.append(f"alpha(G) = {cert.alpha}")
        lines.append(f"  witness: {list(cert.witness)}")
    if a.oracle or a.no_hull:
        o = gap_oracle(g)
        out["oracle"] = o.to_dict()
        lines.append(f"oracle alpha = {o.alpha}")
        if o.witness is not None:
            lines.append(f"  radii: {list(o.witness)}")
        if cert is None:
            lines.insert(0, f"alpha(G) = {o.alpha}")
            out["alpha"] = o.to_dict()
        else:
            ok = o.alpha == cert.alpha
            out["agree"] = ok
    sys.stdout.write(_dump(out, a.format, lines))
    return 0 if ok else 1


def _cmd_invariants(a, g) -> int:
    out = {"two_delta": hyperbolicity_2delta(g), "kappa": interval_thinness(g),
           "alpha_i": alpha_i_parameter(g), "chordality": chordality(g)}
    if a.hull_invariants:
        h = build_hull(g, a.guard)
        out["two_delta_hull"] = hyperbolicity_2delta(h.dist)
        out["kappa_hull"] = interval_thinness(h.dist)
    ok = True
    if a.td:
        with open(a.td) as fh:
            audit = audit_tree_decomposition(g, TreeDecomposition.from_json(fh.read()))
        out["tree_decomposition"] = {"valid": audit.valid, "width": audit.width,
                                     "breadth": audit.breadth, "length": audit.length,
                                     "problems": list(audit.problems)}
        ok = audit.valid
    lines = [f"{k} = {v}" for k, v in out.items() if k != "tree_decomposition"]
    if a.td:
        td = out["tree_decomposition"]
        lines.append(f"tree decomposition: valid={td['valid']} width={td['width']} "
                     f"breadth={td['breadth']} length={td['length']}")
        lines += [f"  problem: {p}" for p in td["problems"]]
    sys.stdout.write(_dump(out, a.format, lines))
    return 0 if ok else 1


def _cmd_terrain_tree(a, g) -> int:
    h = build_hull(g, a.guard)
    alpha = gap_from_hull(h).alpha
    rep = TheoremReport()
    subsets = [tuple(range(g.n))] + random_subsets(g.n, a.subsets, a.seed)
    tree = None
    for M in subsets:
        if a.command == "terrain":
            ecc_mod.terrain_report(g, M, alpha, a.strict_paths, rep)
        else:
            t, _ = ecc_mod.ecc_tree_report(g, M, h, alpha, rep)
            tree = tree or t
    out = {"alpha": alpha, "theorems": rep.to_list()}
    lines = [f"alpha(G) = {alpha}"]
    if tree is not None:
        out["tree"] = tree.to_dict()
        lines.append(f"tree root={tree.root} max_error={tree.max_error} bound={tree.bound}")
        lines.append(f"  edges: {tree.edges()}")
    lines += _report_rows(rep)
    sys.stdout.write(_dump(out, a.format, lines))
    return 0 if rep.passed else 1


def _cmd_verify(a, g) -> int:
    opts = SuiteOptions(guard=a.guard, oracle="always" if a.oracle else "auto",
                        no_hull=a.no_hull, subsets=a.subsets, seed=a.seed,
                        strict_paths=a.strict_paths, include_timing=a.timing)
    r = run_suite(g, opts)
    sys.stdout.write(emit_report(r, a.format, a.timing))
    return 0 if r.passed else 1


def main(argv: list[str] | None = None) -> int:
    ap = _parser()
    a = ap.parse_args(argv)
    if a.backend:
        print(BACKEND_NAME)
        return 0
    if a.command is None:
        ap.print_help()
        return 2
    try:
        if a.command == "gen":
            return _cmd_gen(a)
        g = read_graph("/dev/stdin" if a.graph == "-" else a.graph)
        handler = {"hull": _cmd_hull, "gap": _cmd_gap, "invariants": _cmd_invariants,
                   "terrain": _cmd_terrain_tree, "tree": _cmd_terrain_tree,
                   "verify": _cmd_verify}[a.command]
        return handler(a, g)
    except HellyGapError as exc:
        kind = f" [{exc.kind}]" if exc.kind else ""
        print(f"hellygap: error{kind}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"hellygap: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
