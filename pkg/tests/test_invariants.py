import pytest
from hypothesis import given

from conftest import connected_graphs
from hellygap.gap import helly_gap
from hellygap.generators import complete, cycle, path, random_connected, rect_grid, triangular_grid
from hellygap.graph import Graph
from hellygap.hull import build_hull
from hellygap.invariants import (
    TreeDecomposition,
    alpha_i_parameter,
    audit_tree_decomposition,
    chordality,
    hyperbolicity_2delta,
    interval_thinness,
)
import oracles

STAR = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
FAN = Graph(6, [(0, v) for v in range(1, 6)] + [(v, v + 1) for v in range(1, 5)])
STRIP = Graph(7, [(v, v + 1) for v in range(6)] + [(v, v + 2) for v in range(5)])


def test_two_delta_examples(c4):
    assert hyperbolicity_2delta(STAR) == 0
    assert hyperbolicity_2delta(c4) == 2
    assert hyperbolicity_2delta(cycle(5)) == 1
    assert hyperbolicity_2delta(path(3)) == 0


def test_thinness_examples(c4):
    assert interval_thinness(STAR) == 0
    assert interval_thinness(c4) == 2
    assert interval_thinness(build_hull(c4).dist) >= 1


def test_alpha_i_examples():
    assert alpha_i_parameter(complete(5)) == 0
    for ell in (1, 2, 3, 4):
        assert alpha_i_parameter(rect_grid(2, ell + 1)) >= 2 * ell
    # chordal graphs have an alpha_1-metric
    for g in (FAN, STRIP, complete(4), path(5), STAR):
        assert chordality(g) <= 3
        assert alpha_i_parameter(g) <= 1


def test_ladder_gap_is_one():
    for ell in (1, 2, 3, 4):
        assert helly_gap(rect_grid(2, ell + 1)) == 1


def test_chordality_examples():
    assert chordality(path(6)) == 0
    assert chordality(STAR) == 0
    assert chordality(cycle(6)) == 6
    assert chordality(complete(4)) == 3
    # the outer boundary of the 3x3 grid is an induced 8-cycle
    assert chordality(rect_grid(3, 3)) == 8
    # bridged but not chordal: the hexagon around an interior vertex is induced
    assert chordality(triangular_grid(3)) == 6


def test_chordality_guard_marker():
    assert chordality(cycle(15), guard=12) == 13
    assert chordality(cycle(12), guard=12) == 12
    with pytest.raises(ValueError):
        chordality(cycle(5), guard=2)


def test_tree_decomposition_examples():
    td = TreeDecomposition(((0, 1), (1, 2), (2, 3)), ((0, 1), (1, 2)))
    a = audit_tree_decomposition(path(4), td)
    assert (a.valid, a.width, a.breadth, a.length) == (True, 1, 1, 1)
    a = audit_tree_decomposition(complete(4), TreeDecomposition(((0, 1, 2, 3),)))
    assert (a.valid, a.width, a.breadth, a.length) == (True, 3, 1, 1)
    a = audit_tree_decomposition(path(3), TreeDecomposition(((0, 1), (2,)), ((0, 1),)))
    assert not a.valid and any("(1, 2)" in p for p in a.problems)


def test_tree_decomposition_problems():
    g = cycle(4)
    # vertex 0 in two bags that are not adjacent in the bag tree
    td = TreeDecomposition(((0, 1), (1, 2), (2, 3, 0)), ((0, 1), (1, 2)))
    a = audit_tree_decomposition(g, td)
    assert not a.valid and any("not connected" in p for p in a.problems)
    a = audit_tree_decomposition(g, TreeDecomposition(((0, 1, 2), (0, 2, 3)), ()))
    assert not a.valid and "bag graph is not a tree" in a.problems


def test_tree_decomposition_json_round_trip():
    td = TreeDecomposition(((0, 1, 2), (0, 2, 3)), ((0, 1),))
    assert TreeDecomposition.from_json(td.to_json()) == td


def test_gap_below_breadth_and_length():
    g = cycle(6)
    td = TreeDecomposition(((0, 1, 2, 3), (0, 3, 4, 5)), ((0, 1),))
    a = audit_tree_decomposition(g, td)
    assert a.valid
    assert helly_gap(g) <= a.breadth <= a.length


@given(connected_graphs(max_n=7))
def test_invariants_match_reference(g):
    d = g.dist.tolist()
    assert hyperbolicity_2delta(g) == oracles.two_delta(d)
    assert interval_thinness(g) == oracles.thinness(d)
    assert alpha_i_parameter(g) == oracles.alpha_i(d)
    assert chordality(g) == oracles.longest_induced_cycle(g.n, g.edges)


@given(connected_graphs(max_n=7))
def test_comparison_bounds(g):
    h = build_hull(g)
    alpha = helly_gap(g)
    two_delta = hyperbolicity_2delta(g)
    assert interval_thinness(g) <= two_delta
    assert alpha <= two_delta
    assert alpha <= interval_thinness(h.dist)
    assert alpha <= -(-alpha_i_parameter(g) // 2)
    assert hyperbolicity_2delta(h.dist) == two_delta


def test_random_chordality_matches_reference():
    for seed in range(15):
        g = random_connected(9, 0.35, seed)
        assert chordality(g) == oracles.longest_induced_cycle(g.n, g.edges)
