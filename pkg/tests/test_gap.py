import pytest
from hypothesis import given

from conftest import connected_graphs
from hellygap.errors import GraphError, OracleBudgetError
from hellygap.gap import (
    check_disk_system,
    gap_from_hull,
    gap_oracle,
    helly_gap,
    is_helly,
    max_subset_gap_bound,
)
from hellygap.generators import complete, cycle, king_grid, path, random_connected, rect_grid
from hellygap.graph import Graph
from hellygap.hull import build_hull
from oracles import helly_gap as brute_gap
from oracles import subset_gap_bound


def test_gap_from_hull_examples():
    assert gap_from_hull(build_hull(path(5))).alpha == 0
    c8 = gap_from_hull(build_hull(cycle(8)))
    assert c8.alpha == 2 and min(c8.witness) == 2
    assert gap_from_hull(build_hull(rect_grid(3, 3))).alpha == 1


def test_certificate_witness_is_helly_vertex_at_alpha(c4):
    cert = gap_from_hull(build_hull(c4))
    assert cert.witness == (1, 1, 1, 1)
    assert cert.to_dict() == {"value": 1, "witness": [1, 1, 1, 1], "source": "hull"}


def test_oracle_examples(c4):
    o = gap_oracle(c4)
    assert o.alpha == 1 and o.witness == (1, 1, 1, 1)
    assert gap_oracle(complete(3)).alpha == 0 and gap_oracle(complete(3)).witness is None
    assert gap_oracle(cycle(5)).alpha == 1


def test_oracle_budget():
    with pytest.raises(OracleBudgetError) as exc:
        gap_oracle(cycle(12), budget=1000)
    assert exc.value.kind == "oracle_budget"


def test_disk_system(c4):
    r = check_disk_system(c4, [1, 1, 1, 1], 0)
    assert r.pairwise and not r.common_after_inflation and r.witness_vertex is None
    r = check_disk_system(c4, [1, 1, 1, 1], 1)
    assert r.common_after_inflation and r.witness_vertex == 0
    g = rect_grid(3, 4)
    assert check_disk_system(g, [g.diameter] * g.n, 0).common_after_inflation
    sub = check_disk_system(c4, {0: 1, 2: 1}, 0)
    assert sub.pairwise and sub.common_after_inflation
    with pytest.raises(GraphError):
        check_disk_system(c4, {5: 1})


def test_is_helly(c4):
    assert is_helly(path(6))
    assert is_helly(king_grid(4, 4))
    assert not is_helly(c4)


def test_max_subset_bound():
    assert max_subset_gap_bound(king_grid(3, 3))[0] == 0
    assert max_subset_gap_bound(path(5))[0] == 0
    best, m = max_subset_gap_bound(cycle(8))
    assert best == 2
    with pytest.raises(GraphError) as exc:
        max_subset_gap_bound(path(21))
    assert exc.value.kind == "too_large"


def test_cycle_formula_small():
    for n in range(3, 13):
        assert helly_gap(cycle(n)) == n // 4


@given(connected_graphs(max_n=5))
def test_hull_and_oracle_match_definition(g):
    expected = brute_gap(g.dist.tolist())
    assert gap_from_hull(build_hull(g)).alpha == expected
    assert gap_oracle(g).alpha == expected


@given(connected_graphs(max_n=7))
def test_oracle_witness_is_tight(g):
    o = gap_oracle(g)
    assert o.alpha == helly_gap(g)
    if o.witness is not None:
        assert check_disk_system(g, o.witness, o.alpha - 1).pairwise
        assert not check_disk_system(g, o.witness, o.alpha - 1).common_after_inflation
        assert check_disk_system(g, o.witness, o.alpha).common_after_inflation


@given(connected_graphs(max_n=7))
def test_subset_bound_matches_reference_and_is_lower_bound(g):
    best, m = max_subset_gap_bound(g)
    assert best == subset_gap_bound(g.dist.tolist())
    assert best <= helly_gap(g)


def test_random_graphs_agree():
    for seed in range(25):
        g = random_connected(6, 0.45, seed)
        assert gap_oracle(g).alpha == helly_gap(g)
