import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs
from hellygap import eccentricity as E
from hellygap.gap import helly_gap
from hellygap.generators import cycle, cycle_with_tails, king_grid, path, rect_grid
from hellygap.graph import Graph, eccentricity_profile
from hellygap.hull import build_hull
from hellygap.reports import TheoremReport

TREE = Graph(8, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 6), (2, 7)])


def test_locality_examples(c4):
    assert E.locality(path(5), None, 0) == 1
    assert all(E.locality(c4, None, v) == 0 for v in range(4))
    g = cycle_with_tails(1)
    alpha = helly_gap(g)
    p = eccentricity_profile(g)
    outside = [v for v in range(g.n) if p.ecc[v] > p.radius + alpha]
    assert outside
    assert all(E.locality(g, None, v) <= 2 * alpha + 1 for v in outside)


def test_unimodality_helly_graphs_have_better_neighbor():
    for g in (TREE, king_grid(4, 4), path(6)):
        rep = E.unimodality_check(g, None, 0, build_hull(g))
        assert rep.passed
        p = eccentricity_profile(g)
        for v in range(g.n):
            if p.ecc[v] > p.radius:
                assert E.locality(g, None, v) == 1


def test_unimodality_vacuous_on_c8():
    g = cycle(8)
    rep = E.unimodality_check(g, None, 2, build_hull(g))
    assert rep["unimodality"].checked == 0 and rep.passed


def test_sandwich_exact_on_tree():
    p = eccentricity_profile(TREE)
    c = p.center()
    for x in range(TREE.n):
        assert p.ecc[x] == TREE.dist[x, list(c)].min() + p.radius
    assert E.ecc_sandwich_report(TREE, None, 0).passed


def test_sandwich_on_grid_and_cycle():
    rep = E.ecc_sandwich_report(rect_grid(3, 3), None, 1)
    assert rep["eccentricities.upper"].checked == 9 and rep.passed
    assert E.ecc_sandwich_report(cycle(8), None, 2).passed


def test_farthest_vertex_bounds():
    assert E.farthest_vertex_check(TREE, None, 0).passed
    assert E.farthest_vertex_check(cycle(8), None, 2).passed
    for n in (2, 3, 4):
        assert E.farthest_vertex_check(rect_grid(n, n), None, 1).passed


def test_ecc_tree_on_tree_is_exact():
    t = E.build_ecc_tree(TREE, None, build_hull(TREE), 0)
    assert t.max_error == 0
    assert sorted(tuple(sorted(e)) for e in t.edges()) == sorted(TREE.edges)


def test_ecc_tree_on_c4(c4):
    t = E.build_ecc_tree(c4, None, build_hull(c4), 1)
    assert t.max_error == 1 and t.bound == 4
    assert len(t.edges()) == 3


def test_ecc_tree_on_grid():
    g = rect_grid(3, 3)
    t = E.build_ecc_tree(g, None, build_hull(g), 1)
    p = eccentricity_profile(g)
    c1 = list(p.center(1))
    assert t.bound == -(-int(g.dist[np.ix_(c1, c1)].max()) // 2) + 3
    assert t.max_error <= t.bound


def test_bfs_tree_preserves_root_distances():
    g = rect_grid(3, 4)
    parent = E.bfs_tree(g, 5)
    tree = Graph(g.n, [(p, v) for v, p in enumerate(parent) if p is not None])
    assert np.array_equal(tree.dist[5], g.dist[5])


def test_terrain_examples():
    t = E.terrain_profile(path(5), None, 0, 0)
    assert (t.up, t.horizontal, t.down) == (0, 0, 2)
    g = king_grid(5, 5)
    for y in range(g.n):
        t = E.terrain_profile(g, None, y, 0)
        assert 2 * t.up + t.horizontal == 0
    g = cycle_with_tails(2)
    tip = g.n - 1
    t = E.terrain_profile(g, None, tip, 2)
    assert 2 * t.up + t.horizontal <= 4


def test_strict_paths_cover_every_geodesic():
    g = rect_grid(3, 3)
    assert len(E.all_shortest_paths(g, 0, 8)) == 6
    rep = E.terrain_report(g, None, 1, strict=True)
    loose = E.terrain_report(g, None, 1, strict=False)
    assert rep.passed and rep["upHorizontalEdgesBoundWH"].checked >= loose["upHorizontalEdgesBoundWH"].checked


def test_hull_relations_on_c4(c4):
    h = build_hull(c4)
    rep = E.hull_relation_report(c4, None, h, 1)
    assert rep.passed
    ph = E.hull_profile(h, range(4))
    assert ph.radius == 1 and ph.center() == (4,)


def test_failed_row_keeps_witness():
    rep = TheoremReport()
    rep.add("x", {"v": 3}, 5, "<=", 4)
    c = rep["x"]
    assert not c.passed and c.to_dict()["witness"]["context"] == {"v": 3}


@given(connected_graphs(max_n=7), st.data())
def test_all_reports_pass_on_random_graphs(g, data):
    h = build_hull(g)
    alpha = helly_gap(g)
    m = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, unique=True))
    rep = TheoremReport()
    E.unimodality_check(g, m, alpha, h, rep)
    E.ecc_sandwich_report(g, m, alpha, None, rep)
    E.farthest_vertex_check(g, m, alpha, rep)
    E.ecc_tree_report(g, m, h, alpha, rep)
    E.terrain_report(g, m, alpha, True, rep)
    E.hull_relation_report(g, m, h, alpha, rep)
    E.helly_hull_report(h, m, rep)
    assert rep.passed, [c.to_dict() for c in rep.failures]
