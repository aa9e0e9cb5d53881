from splurge_equivariant.homology import homology
from splurge_equivariant.reports import (
    EVIDENCE_FAIL,
    EVIDENCE_PASS,
    FAIL,
    NONEXACT,
    PASS,
    CheckResult,
    ReportRenderer,
    SuiteReport,
)
from splurge_equivariant.simpset import circle


def _report(*results: CheckResult) -> SuiteReport:
    return SuiteReport(model="qcat", group="Z2", trunc=2, results=list(results))


def test_results_are_sorted_by_cell_key():
    """Test ordering of suite results."""
    report = _report(
        CheckResult("cellularity-3", PASS, H="e", K="Z2", generator="d1"),
        CheckResult("adjunction", PASS, H="e", seed=2),
        CheckResult("adjunction", PASS, H="e", seed=1),
    )
    assert [(r.condition, r.seed) for r in report.results] == [
        ("adjunction", 1),
        ("adjunction", 2),
        ("cellularity-3", None),
    ]
    assert report.passed
    assert report.first_failure is None


def test_evidence_verdicts_count_as_positive():
    """Test that evidence passes count as passing."""
    assert CheckResult("completeness", EVIDENCE_PASS).passed
    assert not CheckResult("completeness", EVIDENCE_FAIL).passed
    assert not CheckResult("cellularity-2", NONEXACT).passed


def test_counts_and_first_failure():
    """Test verdict counts and the first failing cell."""
    report = _report(
        CheckResult("adjunction", PASS, seed=0),
        CheckResult("cellularity-1", FAIL, H="e", K="Z2"),
        CheckResult("cellularity-2", NONEXACT, H="e", K="Z2"),
    )
    counts = report.counts()
    assert counts[PASS] == 1
    assert counts[FAIL] == 1
    assert counts[NONEXACT] == 1
    assert counts[EVIDENCE_PASS] == 0
    assert report.first_failure.condition == "cellularity-1"
    assert not report.budget_exhausted


def test_budget_exhausted_only_when_every_failure_ran_out():
    """Test the budget flag of a suite report."""
    exhausted = CheckResult("adjunction", FAIL, seed=0, evidence={"budget_exceeded": True})
    assert _report(exhausted, CheckResult("adjunction", PASS, seed=1)).budget_exhausted
    assert not _report(exhausted, CheckResult("adjunction", FAIL, seed=1)).budget_exhausted
    assert not _report(CheckResult("adjunction", PASS)).budget_exhausted


def test_render_suite_lists_cells_and_failure():
    """Test the text rendering of a failing suite."""
    report = _report(
        CheckResult("adjunction", PASS, H="e", seed=0, notes=["checked 4 maps"]),
        CheckResult("cellularity-3", FAIL, H="e", K="Z2", generator="d1"),
    )
    text = ReportRenderer().render_suite(report)
    assert text.startswith("Check suite: qcat over Z2 (N=2)")
    assert "[PASS] adjunction H=e seed=0" in text
    assert "note: checked 4 maps" in text
    assert "First failing cell: cellularity-3 e Z2 d1" in text


def test_render_suite_all_passed():
    """Test the text rendering of a passing suite."""
    text = ReportRenderer().render_suite(_report(CheckResult("adjunction", PASS, seed=0)))
    assert "All cells passed." in text


def test_render_homology_of_circle():
    """Test the text rendering of circle homology."""
    text = ReportRenderer().render_homology("circle", homology(circle(3), 2).to_dict())
    assert "Homology of circle (N=3)" in text
    assert "H_0 = Z" in text
    assert "H_1 = Z" in text
    assert "H_2 = 0" in text


def test_render_summary_sorts_keys():
    """Test key ordering in summary rendering."""
    text = ReportRenderer().render_summary("quasicategory", {"verdict": PASS, "horns": 3})
    lines = text.splitlines()
    assert lines[0] == "quasicategory"
    assert lines[1].strip() == "horns: 3"
    assert lines[2].strip() == "verdict: PASS"
