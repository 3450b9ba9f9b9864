"""Graph families used as examples and counterexamples.

Numbering conventions (stable, relied on by tests):

* path / cycle: vertices in path or cycle order.
* rect_grid / king_grid(a, b): ``a`` rows by ``b`` columns of vertices,
  row-major, vertex ``i*b + j``.
* triangular_grid(s): rows ``i = 0..s`` with ``i + 1`` vertices each, row-major
  by ``(i, j)``, ``0 <= j <= i``. Corners are ``(0,0)``, ``(s,0)`` and ``(s,s)``.
* cycle_with_tails(k): cycle ``0..4k-1``; tail at 0 is ``4k..5k-1`` (``4k`` next
  to the cycle), tail at ``2k`` is ``5k..6k-1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GraphError
from .graph import Graph

RNG_ALGORITHM = "PCG64"
MAX_TRIANGULAR_SIDE = 40
FAMILIES = ("path", "cycle", "rect_grid", "king_grid", "triangular_grid",
            "cycle_with_tails", "random_connected")


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg, kind="parameters")


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _grid(a: int, b: int, diagonals: bool) -> Graph:
    _need(a >= 1 and b >= 1, "grid sides must be positive")
    edges = []
    for i in range(a):
        for j in range(b):
            v = i * b + j
            if j + 1 < b:
                edges.append((v, v + 1))
            if i + 1 < a:
                edges.append((v, v + b))
                if diagonals and j + 1 < b:
                    edges.append((v, v + b + 1))
                if diagonals and j > 0:
                    edges.append((v, v + b - 1))
    return Graph(a * b, edges)


def rect_grid(a: int, b: int) -> Graph:
    """Cartesian product of paths on ``a`` and ``b`` vertices."""
    return _grid(a, b, diagonals=False)


def king_grid(a: int, b: int) -> Graph:
    """Strong product of paths on ``a`` and ``b`` vertices."""
    return _grid(a, b, diagonals=True)


def triangular_grid(s: int) -> Graph:
    """Triangle of side ``s`` in the triangular lattice."""
    _need(1 <= s <= MAX_TRIANGULAR_SIDE, f"triangular side must be in 1..{MAX_TRIANGULAR_SIDE}")
    index = {}
    for i in range(s + 1):
        for j in range(i + 1):
            index[i, j] = len(index)
    edges = []
    for (i, j), v in index.items():
        for nb in ((i + 1, j), (i + 1, j + 1), (i, j + 1)):
            if nb in index:
                edges.append((v, index[nb]))
    return Graph(len(index), edges)


def triangular_corners(s: int) -> tuple[int, int, int]:
    top = 0
    left = s * (s + 1) // 2
    return top, left, left + s


def cycle_with_tails(k: int) -> Graph:
    """C_{4k} with a length-k path hanging off two antipodal cycle vertices."""
    _need(k >= 1, "cycle_with_tails needs k >= 1")
    c = 4 * k
    edges = [(i, (i + 1) % c) for i in range(c)]
    for anchor, start in ((0, c), (2 * k, c + k)):
        prev = anchor
        for t in range(k):
            edges.append((prev, start + t))
            prev = start + t
    return Graph(6 * k, edges)


def random_connected(n: int, p: float, seed: int, max_tries: int = 10_000) -> Graph:
    """G(n, p) conditioned on connectivity by rejection, deterministic per seed."""
    _need(n >= 1 and 0.0 < p <= 1.0, "random_connected needs n >= 1 and 0 < p <= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    iu, iv = np.triu_indices(n, 1)
    for _ in range(max_tries):
        keep = rng.random(iu.size) < p
        try:
            return Graph(n, zip(iu[keep].tolist(), iv[keep].tolist()))
        except GraphError as exc:
            if exc.kind != "disconnected":
                raise
    raise GraphError(f"no connected sample after {max_tries} tries", kind="parameters")


def random_suite(count: int = 200, max_n: int = 7, seed: int = 0) -> list[Graph]:
    """Seeded desk-scale random graphs with 2..max_n vertices."""
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    for i in range(count):
        n = int(rng.integers(2, max_n + 1))
        p = float(rng.uniform(0.2, 0.8))
        out.append(random_connected(n, p, seed=int(rng.integers(2**63 - 1))))
    return out


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    p: float = 0.5
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def label(self) -> str:
        args = ",".join(str(x) for x in self.params)
        if self.family == "random_connected":
            args += f",p={self.p},seed={self.seed}"
        return f"{self.family}({args})"


def generate(spec: FamilySpec) -> Graph:
    f, ps = spec.family, spec.params
    arity = {"path": 1, "cycle": 1, "rect_grid": 2, "king_grid": 2, "triangular_grid": 1,
             "cycle_with_tails": 1, "random_connected": 1}
    _need(f in arity, f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
    _need(len(ps) == arity[f], f"{f} takes {arity[f]} integer parameter(s)")
    if f == "random_connected":
        return random_connected(ps[0], spec.p, spec.seed)
    return globals()[f](*ps)


@dataclass(frozen=True)
class BridgedWitness:
    graph: Graph
    corners: tuple[int, int, int]
    radius: int


def bridged_witness(k: int) -> BridgedWitness:
    """Triangular grid of side 4k with its three corners (pairwise 4k apart).

    Disks of radius 2k at the corners pairwise meet but share no vertex; the
    needed inflation is checked by the caller via ``check_disk_system``.
    """
    _need(k >= 1 and 4 * k <= MAX_TRIANGULAR_SIDE, "bridged witness size guard")
    return BridgedWitness(triangular_grid(4 * k), triangular_corners(4 * k), 2 * k)


def family_suite() -> list[tuple[str, Graph]]:
    """Every deterministic family at the sizes used by the acceptance run."""
    out = [(f"cycle({n})", cycle(n)) for n in range(3, 13)]
    out += [(f"rect_grid({n},{n})", rect_grid(n, n)) for n in (2, 3, 4)]
    out += [(f"king_grid({2 * r + 1},{2 * r + 1})", king_grid(2 * r + 1, 2 * r + 1)) for r in (1, 2)]
    out += [(f"cycle_with_tails({k})", cycle_with_tails(k)) for k in (1, 2)]
    out += [(f"triangular_grid({4 * k})", triangular_grid(4 * k)) for k in (1, 2)]
    return out
