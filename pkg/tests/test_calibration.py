import pytest

from mvpoly.calibration import (
    CalibrationError,
    calibrate,
    calibrate_group,
    calibrate_shapes,
    candidate_shapes,
    problem_for,
)
from mvpoly.tables import builtin_table, data_dir, dumps_table


@pytest.mark.parametrize("group", ["A1", "A2", "C2"])
def test_regenerates_shipped_bytes(group):
    result = calibrate_group(group)
    assert len(result.solutions) == 1
    assert dumps_table(result.table) == (data_dir() / f"{group}.json").read_text(encoding="utf-8")
    assert "1 solution(s)" in result.certificate()


def test_a2_recovers_triangles():
    t = calibrate_shapes("A2", ["b1", "b2"])
    assert set(t.generator("b1").polytope.vertices) == {(0, 0), (-1, 0), (-1, -1)}
    assert set(t.generator("b2").polytope.vertices) == {(0, 0), (0, -1), (-1, -1)}


def test_a1_no_unknowns():
    assert calibrate_shapes("A1", []) == builtin_table("A1")


def test_c2_subset_of_unknowns():
    t = calibrate_shapes("C2", ["c1", "c2"])
    assert t == builtin_table("C2")


def test_shipped_answer_in_candidates():
    t = builtin_table("C2")
    for name in ("b1", "b2", "c1", "c2"):
        g = t.generator(name)
        assert g.polytope in candidate_shapes("C2", g.degree)


def test_characters_alone_leave_c2_ambiguous():
    problem = problem_for("C2")
    problem.tensor_battery = ()
    with pytest.raises(CalibrationError) as err:
        calibrate(problem)
    assert len(err.value.solutions) == 2
    shipped = builtin_table("C2")
    assert any(s == shipped for s in err.value.solutions)


def test_empty_search_reported():
    problem = problem_for("A2")
    problem.edges = frozenset()
    with pytest.raises(CalibrationError, match="too tight"):
        calibrate(problem)


def test_empty_battery_rejected():
    with pytest.raises(ValueError):
        calibrate_shapes("A2", ["b1"], battery=[])
