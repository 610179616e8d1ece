import json

from qpower.algebra.scalars import QScalar
from qpower.handlers.rendering import latex_escape, render_report, render_table, render_value
from qpower.models import Difference, IdentityResult, OutputFormat, RunConfig, SuiteReport, VerificationReport
from qpower.oracle.trees import J_poly
from qpower.symfun.qpowers import q_power

q = QScalar.q()


def _report():
    passed = IdentityResult(suite="girard", name="e_rec", passed=True, checked=4)
    failed = IdentityResult(
        suite="girard",
        name="h_rec",
        passed=False,
        checked=2,
        params={"n": 2, "m": 1},
        difference=Difference(t_power=None, q_power=1, monomial="e2", expected="1", actual="1 + q"),
    )
    return VerificationReport(settings=RunConfig(seed=5), suites=[SuiteReport(suite="girard", results=[passed, failed])])


def test_value_in_three_formats():
    value = q_power(2)
    assert render_value(value, OutputFormat.TEXT) == "e1^2 − [2]·e2\n"
    assert json.loads(render_value(value, OutputFormat.JSON)) == value.to_json()
    latex = render_value(value, OutputFormat.LATEX)
    assert latex.startswith("\\documentclass{article}")
    assert value.render_latex() in latex
    assert latex.endswith("\\end{document}\n")


def test_table_text_and_json():
    rows = [(n, J_poly(n)) for n in (1, 2, 3)]
    text = render_table("J_n(q)", "J_n(q)", rows, OutputFormat.TEXT)
    assert text.splitlines() == ["n\tJ_n(q)", "1\t1", "2\t1", "3\t2 + q"]
    data = json.loads(render_table("J_n(q)", "J_n(q)", rows, OutputFormat.JSON))
    assert [row["n"] for row in data] == [1, 2, 3]
    assert data[2]["poly"] == J_poly(3).to_json()


def test_table_latex():
    rows = [(3, J_poly(3))]
    latex = render_table("J_n(q)", "J_n(q)", rows, OutputFormat.LATEX)
    assert "\\begin{tabular}{r|l}" in latex
    assert f"3 & ${J_poly(3).render_latex()}$ \\\\" in latex
    assert "% J\\_n(q)" in latex


def test_text_report():
    lines = render_report(_report(), OutputFormat.TEXT).splitlines()
    assert lines[0] == "seed: 5"
    assert lines[1] == "PASS girard/e_rec (4 cases)"
    assert lines[2] == "FAIL girard/h_rec after 2 cases"
    assert lines[3] == "  at m=1, n=2"
    assert lines[4] == "  first difference at (t^-, q^1, e2)"
    assert lines[-1] == "1 passed, 1 failed"


def test_json_report():
    data = json.loads(render_report(_report(), OutputFormat.JSON))
    assert data["passed"] is False
    assert data["settings"]["seed"] == 5
    assert data["settings"]["output_format"] == "text"
    assert data["suites"][0]["results"][1]["difference"]["q_power"] == 1


def test_latex_report_escapes_names():
    latex = render_report(_report(), OutputFormat.LATEX)
    assert "girard & h\\_rec & FAIL & 2 \\\\" in latex
    assert "seed 5: 1 passed, 1 failed" in latex


def test_latex_escape():
    assert latex_escape("a_b^c") == "a\\_b\\^{}c"
    assert latex_escape("1 − q") == "1 - q"
