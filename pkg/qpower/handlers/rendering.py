"""
Text, JSON and LaTeX renderings of computed objects, tables and
verification reports. Renderings are pure functions of their input so that
identical runs print identical bytes.
"""
import json
from typing import Any, List, Sequence, Tuple

from ..models.report import IdentityResult, VerificationReport
from ..models.run_config import OutputFormat

_LATEX_PREAMBLE = "\\documentclass{article}\n\\usepackage{amsmath}\n\\pagestyle{empty}\n\\begin{document}\n"
_LATEX_END = "\\end{document}\n"

_LATEX_SPECIALS = {
    "\\": "\\textbackslash{}",
    "{": "\\{",
    "}": "\\}",
    "_": "\\_",
    "^": "\\^{}",
    "&": "\\&",
    "%": "\\%",
    "#": "\\#",
    "$": "\\$",
    "~": "\\~{}",
    "ψ": "$\\psi$",
    "λ": "$\\lambda$",
    "θ": "$\\theta$",
    "−": "-",
    "·": "$\\cdot$",
}


def latex_escape(text: str) -> str:
    return "".join(_LATEX_SPECIALS.get(ch, ch) for ch in text)


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def latex_document(body: str) -> str:
    return _LATEX_PREAMBLE + body + _LATEX_END


def render_value(value: Any, fmt: OutputFormat) -> str:
    """One computed object: SymPoly, QScalar, XPoly, Series or a partition expansion."""
    if fmt == OutputFormat.JSON:
        return dump_json(value.to_json())
    if fmt == OutputFormat.LATEX:
        return latex_document(f"\\[\n{value.render_latex()}\n\\]\n")
    return value.render() + "\n"


def render_table(title: str, symbol: str, rows: Sequence[Tuple[int, Any]], fmt: OutputFormat) -> str:
    """
    Columns: n and the value at n. Text is tab-separated with a header line,
    JSON an array of {"n", "poly"}, LaTeX a two-column tabular.
    """
    if fmt == OutputFormat.JSON:
        return dump_json([{"n": n, "poly": value.to_json()} for n, value in rows])
    if fmt == OutputFormat.LATEX:
        lines = [f"% {latex_escape(title)}", "\\begin{tabular}{r|l}", f"$n$ & ${symbol}$ \\\\", "\\hline"]
        lines += [f"{n} & ${value.render_latex()}$ \\\\" for n, value in rows]
        lines.append("\\end{tabular}")
        return latex_document("\n".join(lines) + "\n")
    lines = [f"n\t{title}"] + [f"{n}\t{value.render()}" for n, value in rows]
    return "\n".join(lines) + "\n"


def _params_text(params: dict) -> str:
    return ", ".join(f"{k}={params[k]}" for k in sorted(params))


def _result_lines(result: IdentityResult) -> List[str]:
    label = f"{result.suite}/{result.name}"
    if result.passed:
        return [f"PASS {label} ({result.checked} cases)"]
    lines = [f"FAIL {label} after {result.checked} cases"]
    if result.params:
        lines.append(f"  at {_params_text(result.params)}")
    if result.difference is not None:
        d = result.difference
        lines.append(f"  first difference at {d.address()}")
        lines.append(f"    expected: {d.expected}")
        lines.append(f"    actual:   {d.actual}")
    if result.error is not None:
        lines.append(f"  error: {result.error}")
    return lines


def render_report(report: VerificationReport, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        data = report.dict()
        data["passed"] = report.passed
        return dump_json(data)
    results = [r for suite in report.suites for r in suite.results]
    failed = len(report.failures)
    if fmt == OutputFormat.LATEX:
        lines = ["\\begin{tabular}{l|l|l|r}", "suite & identity & result & cases \\\\", "\\hline"]
        for r in results:
            verdict = "pass" if r.passed else "FAIL"
            lines.append(f"{latex_escape(r.suite)} & {latex_escape(r.name)} & {verdict} & {r.checked} \\\\")
        lines.append("\\end{tabular}")
        lines.append("")
        lines.append(f"seed {report.settings.seed}: {len(results) - failed} passed, {failed} failed")
        return latex_document("\n".join(lines) + "\n")
    lines = [f"seed: {report.settings.seed}"]
    for r in results:
        lines += _result_lines(r)
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n"
