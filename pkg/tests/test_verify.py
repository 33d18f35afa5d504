import pytest

from treehopf.verify import (
    SweepReport,
    _Sweep,
    check_coaction,
    check_derivation,
    check_module_hopf,
    check_prelie,
    run_suite,
)


def test_prelie_graft_small_bound_passes():
    report = check_prelie("graft", bound=5)
    assert report.status == "pass"
    assert report.cases > 0
    assert report.failures == []


def test_prelie_insert_degenerate_bound_is_inconclusive():
    report = check_prelie("insert", bound=1)
    assert report.cases == 0
    assert report.status == "inconclusive"
    assert not report.passed


def test_prelie_unknown_product():
    with pytest.raises(ValueError):
        check_prelie("shuffle")


def test_derivation_small_bound():
    report = check_derivation(max_t_edges=1, max_uv_vertices=2)
    assert report.status == "pass"
    # Two variants per (t, u, v) triple.
    assert report.cases == 2 * 1 * 2 * 2


def test_coaction_small_bound():
    report = check_coaction(max_vertices=3)
    assert report.status == "pass"
    # One case per forest of each total size 0..3.
    assert report.cases == 1 + 1 + 2 + 4


def test_module_hopf_small_bound():
    report = check_module_hopf(max_alpha_edges=1, max_ab_vertices=2)
    assert report.status == "pass"
    assert report.cases > 0


def test_failures_are_recorded_with_both_sides():
    sweep = _Sweep("deliberately-wrong", {"bound": 0})
    sweep.check({"x": "[]"}, 1, 2)
    sweep.check({"x": "[[]]"}, 3, 3)
    report = sweep.done()
    assert report.cases == 2
    assert report.status == "fail"
    assert report.failures == [{"inputs": {"x": "[]"}, "left": 1, "right": 2}]
    assert not report.passed


def test_report_json_shape():
    report = check_prelie("insert-sigma", bound=3)
    obj = report.to_json_obj()
    assert set(obj) == {"identity", "bound", "cases", "failures", "millis"}
    assert obj["identity"] == "prelie-insert-sigma"
    assert obj["failures"] == []
    assert isinstance(obj["millis"], int)


def test_reports_deterministic():
    a = check_derivation(max_t_edges=1, max_uv_vertices=3).to_json_obj()
    b = check_derivation(max_t_edges=1, max_uv_vertices=3).to_json_obj()
    a.pop("millis")
    b.pop("millis")
    assert a == b


def test_run_suite_names():
    with pytest.raises(ValueError):
        run_suite("nonsense")
    reports = run_suite("coaction", bound=2)
    assert len(reports) == 1
    assert isinstance(reports[0], SweepReport)


def test_run_suite_lemmas_reports_each_lemma():
    reports = run_suite("lemmas", bound=2)
    names = {r.identity for r in reports}
    assert "action-is-insertion" in names
    assert "complement-symmetric" in names
    assert len(reports) == len(names)
