import json

import pytest

from portsim import get_preset, run_scenario, serialize_report
from portsim.cli import main
from conftest import make_scenario_dict


def write_scenario(tmp_path, name="scenario.json", **overrides):
    path = tmp_path / name
    path.write_text(json.dumps(make_scenario_dict(**overrides)))
    return path


def test_run_preset_csv(capsys):
    assert main(["run", "yangshan-phase4", "--format", "csv"]) == 0
    captured = capsys.readouterr()
    assert "optimized_total_mwh,708750,MWh" in captured.out
    assert "scenario: yangshan-phase4" in captured.err  # summary goes to stderr


def test_run_data_stream_is_exactly_the_report(tmp_path):
    out = tmp_path / "report.json"
    assert main(["run", "yangshan-phase4", "--output", str(out)]) == 0
    expected = serialize_report(run_scenario(get_preset("yangshan-phase4")), "json")
    assert out.read_bytes() == expected


def test_run_is_idempotent(tmp_path):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert main(["run", "yangshan-phase4", "--format", "csv", "--output", str(first)]) == 0
    assert main(["run", "yangshan-phase4", "--format", "csv", "--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_run_scenario_file(tmp_path, capsys):
    path = write_scenario(tmp_path)
    assert main(["run", str(path)]) == 0
    raw = json.loads(capsys.readouterr().out)
    assert raw["scenario_name"] == "test-port"
    assert raw["energy"]["baseline_total"] == 100000.0


def test_validate_reports_share_violation(tmp_path, capsys):
    path = write_scenario(
        tmp_path,
        name="bad-shares.json",
        shares={"equipment_share": 0.5, "transport_share": 0.3, "buildings_share": 0.3},
    )
    assert main(["validate", str(path)]) == 1
    captured = capsys.readouterr()
    assert "shares sum to 1.1" in captured.err
    assert captured.err.startswith("scenario:")


def test_validate_accepts_preset(capsys):
    assert main(["validate", "yangshan-phase4"]) == 0
    assert "valid: yangshan-phase4" in capsys.readouterr().out


def test_dispatch_solves_reference_matrix(tmp_path, capsys):
    path = tmp_path / "paper-matrix.csv"
    path.write_text("420,350,450\n450,400,280\n420,360,390\n")
    assert main(["dispatch", str(path)]) == 0
    out = capsys.readouterr().out
    assert out == "0 -> 1\n1 -> 2\n2 -> 0\ntotal 1050\n"


def test_dispatch_reports_unassigned_rows(tmp_path, capsys):
    path = tmp_path / "tall.csv"
    path.write_text("1,2\n2,4\n3,6\n")
    assert main(["dispatch", str(path)]) == 0
    out = capsys.readouterr().out
    assert "2 -> unassigned" in out
    assert "total 4" in out


def test_presets_lists_bundled_scenarios(capsys):
    assert main(["presets"]) == 0
    out = capsys.readouterr().out
    assert "yangshan-phase4" in out
    assert "yangshan-phase4-stated-shares" in out


def test_unknown_preset_is_a_validation_error(capsys):
    assert main(["run", "atlantis"]) == 1
    assert "unknown preset" in capsys.readouterr().err


def test_missing_file_is_an_input_error(capsys):
    assert main(["dispatch", "no-such-file.csv"]) == 1
    assert "cannot read" in capsys.readouterr().err


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2


def test_bad_weights_format_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["run", "yangshan-phase4", "--weights", "1,2"])
    assert excinfo.value.code == 2


def test_shares_override_changes_emissions(capsys):
    # the stated 50/30/20 split drops the baseline to 551,250 kg
    assert main(["run", "yangshan-phase4", "--shares", "0.5,0.3,0.2"]) == 0
    raw = json.loads(capsys.readouterr().out)
    assert raw["emissions"]["baseline_emissions"] == 551250.0


def test_invalid_shares_override_fails_validation(capsys):
    assert main(["run", "yangshan-phase4", "--shares", "0.5,0.3,0.3"]) == 1
    assert "shares sum to 1.1" in capsys.readouterr().err


def test_weights_override_changes_score(capsys):
    assert main(["run", "yangshan-phase4", "--weights", "1,1,1,0"]) == 0
    raw = json.loads(capsys.readouterr().out)
    assert raw["objective"]["total"] == 559125.0 + 708750.0 + 1050.0
    assert raw["objective"]["renewables_term"] == 0.0


def test_existing_file_beats_preset_name(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    write_scenario(tmp_path, name="yangshan-phase4")
    assert main(["validate", "yangshan-phase4"]) == 0
    assert "valid: test-port" in capsys.readouterr().out
