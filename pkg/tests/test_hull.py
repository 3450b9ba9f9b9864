import numpy as np
import pytest
from hypothesis import given

from conftest import connected_graphs
from hellygap.errors import GraphError, HullGuardError
from hellygap.generators import cycle, path, rect_grid
from hellygap.graph import Graph, add_pendant, is_isometric_embedding
from hellygap.hull import build_hull, enumerate_extremal, helly_vertices, is_extremal, pendant_extension
from oracles import extremal_functions


def test_is_extremal(c4):
    for z in range(4):
        assert is_extremal(c4, c4.dist[z])
    assert not is_extremal(c4, [0, 0, 0, 0])
    assert is_extremal(c4, [1, 1, 1, 1])
    assert not is_extremal(c4, [2, 2, 2, 2])  # nothing tight
    with pytest.raises(GraphError) as exc:
        is_extremal(c4, [1, 1, 1])
    assert exc.value.kind == "length"


def test_enumerate_small():
    assert enumerate_extremal(path(2)).tolist() == [[0, 1], [1, 0]]


def test_c4_hull_is_wheel(c4):
    funcs = enumerate_extremal(c4)
    assert len(funcs) == 5
    assert {tuple(f) for f in funcs.tolist()} == {tuple(r) for r in c4.dist.tolist()} | {(1, 1, 1, 1)}
    h = build_hull(c4)
    assert h.size == 5 and helly_vertices(h) == (4,)
    assert sorted(h.host.adjacency[4]) == [0, 1, 2, 3]
    rim = [(u, v) for u, v in h.host.edges if v < 4]
    assert sorted(rim) == sorted(c4.edges)


@pytest.mark.parametrize("g", [path(4), Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])])
def test_tree_hull_is_itself(g):
    h = build_hull(g)
    assert h.size == g.n and helly_vertices(h) == ()
    assert h.host == g


def test_c6_hull():
    h = build_hull(cycle(6))
    assert h.n_real == 6 and h.size > 6
    assert int(h.functions.min(axis=1).max()) == 1


def test_c8_helly_vertex_at_distance_two():
    h = build_hull(cycle(8))
    hv = helly_vertices(h)
    assert hv
    assert any((h.dist[i, :8] == 2).all() for i in hv)


def test_rect_grid_one_helly_vertex_per_square():
    for n in (2, 3, 4):
        h = build_hull(rect_grid(n, n))
        assert len(helly_vertices(h)) == (n - 1) ** 2


def test_guard_exceeded_reports_partial_count():
    with pytest.raises(HullGuardError) as exc:
        enumerate_extremal(cycle(8), guard=10)
    assert exc.value.kind == "guard"
    assert "hull size guard exceeded" in str(exc.value)
    assert exc.value.partial_count == 10


def test_guard_env_override(monkeypatch):
    monkeypatch.setenv("HELLYGAP_GUARD", "3")
    with pytest.raises(HullGuardError):
        build_hull(cycle(4))


def test_hull_serialization(c4):
    d = build_hull(c4).to_dict()
    assert d["n_real"] == 4 and d["real"] == [True] * 4 + [False]
    assert d["vertices"][4] == [1, 1, 1, 1]
    assert len(d["edges"]) == 8


def test_pendant_lemma_on_c6():
    g = cycle(6)
    h = build_hull(g)
    hp = build_hull(add_pendant(g, 2))
    assert hp.function_set() == pendant_extension(h, 2)


@given(connected_graphs(max_n=6))
def test_enumeration_matches_brute_force(g):
    got = [tuple(f) for f in enumerate_extremal(g).tolist()]
    assert got == extremal_functions(g.dist.tolist())


@given(connected_graphs(max_n=7))
def test_hull_structure(g):
    h = build_hull(g)
    assert np.array_equal(h.dist, h.chebyshev)
    assert np.array_equal(h.dist[:, : g.n], h.functions)
    assert is_isometric_embedding(g, h.host, range(g.n))
    assert all(is_extremal(g, f) for f in h.functions)
    assert len(enumerate_extremal(h.host)) == h.size
