import asyncio
import io
import json

import pytest

from qpower.__main__ import main
from qpower.app import EXIT_FAILED, EXIT_OK, EXIT_USAGE, App, UnknownSuite
from qpower.handlers.compute_handler import ComputeRequest
from qpower.models import OutputFormat, RunConfig
from qpower.symfun.qpowers import e, q_power

SMALL = dict(max_n=3, t_order=3, q_order=4, random_trials=1)


def _run(config, action, **kwargs):
    stdout = io.StringIO()
    app = App(config, stdout=stdout, **kwargs)
    try:
        code = asyncio.run(action(app))
    finally:
        app.cleanup()
    return code, stdout.getvalue()


def test_compute_writes_to_stdout():
    code, out = _run(RunConfig(), lambda app: app.compute("jtree", ComputeRequest(n=3)))
    assert code == EXIT_OK
    assert out == "2 + q\n"


def test_verify_passes():
    code, out = _run(RunConfig(**SMALL), lambda app: app.verify("girard"))
    assert code == EXIT_OK
    assert out.startswith("seed: 0\n")
    assert out.endswith(" passed, 0 failed\n")


def test_verify_reports_a_broken_power_source():
    def perturbed(n, m):
        value = q_power(n, m)
        return value + e(n) if n == 2 else value

    code, out = _run(RunConfig(**SMALL), lambda app: app.verify("girard"), powers=perturbed)
    assert code == EXIT_FAILED
    assert "FAIL girard/Girard-Newton e-recurrence after 2 cases" in out


def test_verify_report_keeps_suite_order():
    config = RunConfig(output_format=OutputFormat.JSON, **SMALL)
    code, out = _run(config, lambda app: app.verify("girard"))
    data = json.loads(out)
    assert data["passed"] is True
    names = [r["name"] for r in data["suites"][0]["results"]]
    assert names[:2] == ["Girard-Newton e-recurrence", "Girard-Newton h-recurrence"]


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        _run(RunConfig(), lambda app: app.verify("nope"))


def test_table_to_file(tmp_path):
    out = tmp_path / "table.json"
    config = RunConfig(output_format=OutputFormat.JSON, out=str(out))
    code, printed = _run(config, lambda app: app.table("jtree", None, 3))
    assert code == EXIT_OK
    assert printed == ""
    assert [row["n"] for row in json.loads(out.read_text(encoding="utf-8"))] == [1, 2, 3]


def test_table_stops_at_max_n():
    code, out = _run(RunConfig(max_n=2), lambda app: app.table("hermite1"))
    assert out.splitlines()[1:] == ["0\t1", "1\tx", "2\tx^2 − (1 − q)"]


def test_main_compute(capsys):
    assert asyncio.run(main(["compute", "jtree", "--n", "4"])) == EXIT_OK
    assert capsys.readouterr().out == "6 + 6*q + 3*q^2 + q^3\n"


def test_main_verify_with_config_file(tmp_path, capsys):
    config = tmp_path / "qpower.yaml"
    config.write_text("max-n: 2\nt-order: 2\nq-order: 3\nrandom-trials: 1\nseed: 4\n")
    code = asyncio.run(main(["--config", str(config), "verify", "girard", "--seed", "9"]))
    assert code == EXIT_OK
    assert capsys.readouterr().out.startswith("seed: 9\n")


@pytest.mark.parametrize("argv", [
    ["compute", "p", "--n", "2", "--base-m", "0"],
    ["compute", "p"],
    ["table", "jtree", "--from", "0"],
])
def test_main_usage_errors(argv):
    assert asyncio.run(main(argv)) == EXIT_USAGE
