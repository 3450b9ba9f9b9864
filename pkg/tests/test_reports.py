from hellygap.reports import MAX_KEPT_FAILURES, TheoremReport


def test_relations_and_aggregation():
    r = TheoremReport()
    assert r.add("a", {}, 1, "<=", 2)
    assert r.add("a", {}, [1], "subset", [1, 2])
    assert r.add("a", {}, 2, "in", (1, 2))
    assert not r.add("b", {"k": 1}, 3, "==", 4)
    assert r["a"].passed and r["a"].checked == 3
    assert not r.passed and [c.theorem_id for c in r.failures] == ["b"]


def test_skip_is_neither_pass_nor_fail():
    r = TheoremReport()
    r.skip("c", "guard")
    assert r["c"].passed is None and r.passed
    assert r.to_list() == [{"id": "c", "pass": None, "checked": 0, "failed": 0,
                            "witness": None, "skipped": "guard"}]


def test_failures_are_capped_and_merged():
    a, b = TheoremReport(), TheoremReport()
    for i in range(2 * MAX_KEPT_FAILURES):
        a.add("x", {"i": i}, 1, "<", 0)
    b.add("x", {}, 0, "<", 1)
    b.note("x", max_locality=7)
    a.note("x", max_locality=3)
    a.merge(b)
    assert a["x"].failed == 2 * MAX_KEPT_FAILURES
    assert len(a["x"].failures) == MAX_KEPT_FAILURES
    assert a["x"].checked == 2 * MAX_KEPT_FAILURES + 1
    assert a["x"].notes["max_locality"] == 7


def test_numpy_values_serialize():
    import numpy as np

    r = TheoremReport()
    r.add("n", {"s": {np.int32(2), np.int32(1)}}, np.int64(3), "==", 4)
    w = r["n"].to_dict()["witness"]
    assert w["context"] == {"s": [1, 2]} and w["lhs"] == 3 and type(w["lhs"]) is int
