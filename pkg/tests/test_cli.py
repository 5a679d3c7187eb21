from heatengine.__main__ import main, buildParser
from heatengine import __version__

import logging
import pytest
import json
import csv
import io

CARNOT = ["carnot", "--t-hot", "2", "--t-cold", "1", "--l-a", "1", "--l-b", "2", "--mass", "1"]
OTTO = ["otto", "--t-hot", "10", "--t-cold", "1", "--l-small", "1", "--l-large", "2", "--mass", "1"]

def readRows(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))

def test_carnot_report(capsys):
    assert main(CARNOT) == 0

    output = capsys.readouterr().out
    rows = readRows(output)

    assert len(rows) == 1
    assert rows[0]["cycle"] == "carnot"
    assert rows[0]["eta"] == "0.5"
    assert float(rows[0]["deltaEta"]) == 0.0
    assert rows[0]["regimeFlags"] == ""
    assert output.endswith("\n") and "\r" not in output

def test_carnot_report_with_gup(capsys):
    assert main(CARNOT + ["--beta-g", "1e-4", "--delta-max", "1e-2"]) == 0

    row = readRows(capsys.readouterr().out)[0]

    assert float(row["deltaEta"]) == pytest.approx(3.246e-4, rel=1e-3)
    assert float(row["QG_BC"]) == pytest.approx(9e-4, rel=1e-8)
    assert float(row["W"]) == float(row["WG"])

def test_carnot_gate_violation(capsys, caplog):
    assert main(CARNOT + ["--beta-g", "1e-4"]) == 3

    assert capsys.readouterr().out == ""
    assert "exceeds threshold" in caplog.text

def test_carnot_invalid_temperatures(capsys, caplog):
    arguments = ["carnot", "--t-hot", "1", "--t-cold", "2", "--l-a", "1", "--l-b", "2", "--mass", "1"]

    assert main(arguments) == 2
    assert capsys.readouterr().out == ""
    assert "must exceed" in caplog.text

def test_unrepresentable_width_is_invalid_input(capsys, caplog):
    arguments = ["carnot", "--t-hot", "2", "--t-cold", "1", "--l-a", "1e-200", "--l-b", "2e-200", "--mass", "1"]

    assert main(arguments) == 2
    assert capsys.readouterr().out == ""
    assert "not representable" in caplog.text

@pytest.mark.parametrize("arguments", [
    CARNOT + ["--beta-g", "1e-5"],
    OTTO + ["--beta-g", "1e-5", "--format", "json"],
    ["sweep", "--target", "fig5"],
])
def test_repeated_runs_print_identical_bytes(arguments, capsys):
    assert main(arguments) == 0
    first = capsys.readouterr().out

    assert main(arguments) == 0
    second = capsys.readouterr().out

    assert first and first.encode() == second.encode()

def test_missing_argument_is_invalid_input(capsys):
    assert main(["carnot", "--t-hot", "2"]) == 2
    assert "required" in capsys.readouterr().err

def test_otto_report(capsys):
    assert main(OTTO + ["--beta-g", "1e-5"]) == 0

    row = readRows(capsys.readouterr().out)[0]

    assert row["cycle"] == "otto"
    assert row["eta"] == "0.75"
    assert row["fAD"] == "0.25"
    assert row["fCB"] == "4"
    assert float(row["etaG"]) < 0.75
    assert row["approximation"] in ("ok", "marginal", "invalid")

def test_otto_echoes_overrides(capsys):
    assert main(OTTO + ["--beta-g", "1e-5", "--f-ad", "0.5", "--f-cb", "2"]) == 0

    row = readRows(capsys.readouterr().out)[0]

    assert row["fAD"] == "0.5"
    assert row["fCB"] == "2"
    assert row["eta"] == "0.75"

def test_otto_outside_engine_regime(capsys, caplog):
    arguments = ["otto", "--t-hot", "10", "--t-cold", "3", "--l-small", "1", "--l-large", "2", "--mass", "1"]

    assert main(arguments) == 0

    row = readRows(capsys.readouterr().out)[0]
    flags = row["regimeFlags"].split(";")

    assert "q-in-non-positive" in flags
    assert "work-non-positive" in flags
    assert "regime flags" in caplog.text

def test_otto_json_output(capsys):
    assert main(OTTO + ["--format", "json"]) == 0

    payload = json.loads(capsys.readouterr().out)

    assert isinstance(payload, list) and len(payload) == 1
    assert payload[0]["eta"] == 0.75
    assert payload[0]["fCB"] == 4.0
    assert payload[0]["regimeFlags"] == ""

def test_sweep_carnot_in_r(capsys):
    assert main(["sweep", "--target", "fig3", "--r-l", "2", "--min", "0.55", "--max", "0.95", "--steps", "9"]) == 0

    rows = readRows(capsys.readouterr().out)
    values = [float(row["f"]) for row in rows]

    assert list(rows[0]) == ["r", "f", "marker"]
    assert len(rows) == 9
    assert float(rows[0]["r"]) == 0.55
    assert float(rows[-1]["r"]) == 0.95
    assert all(row["marker"] == "pos" for row in rows)
    assert all(later < earlier for (earlier, later) in zip(values, values[1:]))

def test_sweep_defaults_cover_the_otto_window(capsys):
    assert main(["sweep", "--target", "fig5"]) == 0

    rows = readRows(capsys.readouterr().out)

    assert len(rows) == 41
    assert all(row["marker"] == "pos" for row in rows)

def test_sweep_marks_the_pole(capsys):
    assert main(["sweep", "--target", "fig6", "--min", "10", "--max", "50", "--steps", "41"]) == 0

    rows = readRows(capsys.readouterr().out)

    assert rows[0]["marker"] == "pole"
    assert rows[0]["f"] == ""

    values = [float(row["f"]) for row in rows[1:]]

    assert all(row["marker"] == "pos" for row in rows[1:])
    assert all(later < earlier for (earlier, later) in zip(values, values[1:]))

def test_sweep_with_prefactor(capsys):
    arguments = ["sweep", "--target", "fig3", "--steps", "3", "--with-prefactor", "--beta-g", "1e-6", "--mass", "1", "--t-hot", "2"]

    assert main(arguments) == 0

    rows = readRows(capsys.readouterr().out)

    for row in rows:
        r = float(row["r"])
        expected = float(row["f"]) * 6e-6 * 2.0 * (1.0 - r)

        assert float(row["scaled"]) == pytest.approx(expected, rel=1e-8)

def test_sweep_prefactor_needs_its_parameters(caplog):
    assert main(["sweep", "--target", "fig3", "--with-prefactor", "--beta-g", "1e-6"]) == 2
    assert "--mass" in caplog.text

@pytest.mark.parametrize("arguments", [
    ["sweep", "--target", "fig3", "--r", "0.5"],
    ["sweep", "--target", "fig3", "--min", "0.9", "--max", "0.5"],
    ["sweep", "--target", "fig3", "--steps", "1"],
    ["sweep", "--target", "fig4", "--min", "0.5"],
])
def test_sweep_invalid_grids(arguments, capsys):
    assert main(arguments) == 2
    assert capsys.readouterr().out == ""

def test_validate_selected_checks(capsys):
    arguments = ["validate", "--only", "fourth-moment", "--only", "carnot-figure-values", "--only", "otto-printed-form"]

    assert main(arguments) == 0

    rows = readRows(capsys.readouterr().out)

    assert [row["check"] for row in rows] == ["carnot-figure-values", "otto-printed-form", "fourth-moment"]
    assert all(row["status"] == "pass" for row in rows)

def test_validate_breakdown_regime(capsys):
    assert main(["validate", "--only", "closed-form-validity", "--beta-gamma", "5"]) == 0

    row = readRows(capsys.readouterr().out)[0]

    assert row["status"] == "pass"
    assert "disagreement" in row["detail"]

def test_validate_unknown_check(caplog):
    assert main(["validate", "--only", "no-such-check"]) == 2
    assert "no-such-check" in caplog.text

def test_validate_rejects_bad_settings(caplog):
    assert main(["validate", "--only", "fourth-moment", "--steps", "1"]) == 2
    assert "--steps must be at least 2" in caplog.text

def test_version(capsys):
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out

def test_help_mentions_units_and_exit_codes():
    text = " ".join(buildParser().format_help().split())

    assert "hbar" in text
    assert "exit codes" in text

def test_number_format():
    from heatengine.cli.report import formatNumber, formatCell

    assert formatNumber(0.5) == "0.5"
    assert formatNumber(2.0 / 3.0) == "0.666666667"
    assert formatNumber(1e-5) == "1e-05"
    assert formatNumber(123456789012.0) == "1.23456789e+11"
    assert formatNumber(float("nan")) == "nan"
    assert formatCell(None) == ""

def test_report_rows_must_match_columns():
    from heatengine.cli.report import Report
    from heatengine.errors import ContractError

    report = Report(("a", "b"))

    with pytest.raises(ContractError):
        report.addRow({"a": 1})

    with pytest.raises(ContractError):
        report.addRow({"a": 1, "b": 2, "c": 3})
