"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Every kernel runs on the same int32 distance matrices under both backends;
outputs are compared before timings are reported.
"""
import argparse
import time

import numpy as np

from hellygap import _pykernels
from hellygap.generators import cycle, king_grid, random_connected, rect_grid, triangular_grid
from hellygap.hull import build_hull

try:
    from hellygap import _ckernels
except ImportError:
    _ckernels = None


def _dist(g):
    return np.ascontiguousarray(g.dist, dtype=np.int32)


def cases(quick):
    graphs = {"C10": cycle(10), "rect5x5": rect_grid(5, 5), "king5x5": king_grid(5, 5),
              "tri6": triangular_grid(6), "G(12,0.3)": random_connected(12, 0.3, seed=1)}
    if not quick:
        graphs["C12"] = cycle(12)
        graphs["tri8"] = triangular_grid(8)
    out = []
    for name, g in graphs.items():
        d = _dist(g)
        indptr, indices = g.csr
        out.append(("apsp", name, (indptr, indices, g.n)))
        out.append(("enumerate_extremal", name, (d, 10**6)))
        out.append(("two_delta", name, (d,)))
        out.append(("interval_thinness", name, (d,)))
        out.append(("alpha_i", name, (d,)))
    # the oracle and subset scan are exponential; keep them small
    for name, g in {"C6": cycle(6), "G(7,0.4)": random_connected(7, 0.4, seed=3)}.items():
        out.append(("oracle_gap", name, (_dist(g), g.diameter)))
    small = random_connected(14, 0.3, seed=2)
    out.append(("max_subset_gap", "G(14,0.3)", (_dist(small),)))
    h = build_hull(cycle(10))
    F = np.ascontiguousarray(h.functions, dtype=np.int32)
    out.append(("chebyshev_edges", "H(C10)", (F,)))
    out.append(("chebyshev_matrix", "H(C10)", (F,)))
    hd = np.ascontiguousarray(h.dist, dtype=np.int32)
    out.append(("peripheral", "H(C10)", (hd,)))
    out.append(("path_extension_failure", "H(C10)", (hd, h.n_real)))
    return out


def _same(a, b):
    if isinstance(a, tuple):
        return len(a) == len(b) and all(_same(x, y) for x, y in zip(a, b))
    if a is None or b is None:
        return a is b
    return np.array_equal(np.asarray(a), np.asarray(b))


def timed(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    a = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    print(f"{'kernel':<24}{'input':<12}{'compiled':>12}{'python':>12}{'speedup':>10}  same")
    for kernel, name, args in cases(a.quick):
        tc, rc = timed(getattr(_ckernels, kernel), args, a.repeat)
        tp, rp = timed(getattr(_pykernels, kernel), args, 1 if tc > 0.5 else a.repeat)
        ok = _same(rc, rp)
        print(f"{kernel:<24}{name:<12}{tc * 1e3:>10.2f}ms{tp * 1e3:>10.2f}ms{tp / max(tc, 1e-9):>9.1f}x  {ok}")


if __name__ == "__main__":
    main()
