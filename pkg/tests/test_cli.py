import json

import jsonschema
import pytest

from hallforge.cli import SCHEMA_PATH, RunConfig, main, parse_bound, parse_window, run_suite
from hallforge.quiver import ConfigError

SCHEMA = json.loads(SCHEMA_PATH.read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_helpers():
    assert parse_bound("2,3") == (2, 3)
    assert parse_window("-2:2") == (-2, 2)
    for bad in ("2:1", "x:1", "3"):
        with pytest.raises(ConfigError):
            parse_window(bad)
    with pytest.raises(ConfigError):
        parse_bound("1,-1")


def test_eval_lattice(capsys):
    code, out, _ = run(capsys, "eval", "--algebra", "lattice", "--expr", "Z{0}[S1]*Z{0}[S2]", "--json")
    assert code == 0
    rows = json.loads(out)
    assert rows == [{"sites": [[0, "S2+S1"]], "k": [0, 0], "coeff": {"a": "1", "b": "0"}}]


def test_eval_heis_text(capsys):
    code, out, _ = run(capsys, "eval", "--algebra", "heis", "--expr", "Zp[S1]*Zm[S1]")
    assert code == 0
    assert len(out.strip().splitlines()) == 2


def test_eval_unit_and_zero(capsys):
    code, out, _ = run(capsys, "eval", "--algebra", "B", "--expr", "K[(0,0)]", "--json")
    assert code == 0 and json.loads(out) == [{"k": [0, 0], "obj": "0", "coeff": {"a": "1", "b": "0"}}]
    code, out, _ = run(capsys, "eval", "--algebra", "B", "--expr", "[S1] - [S1]")
    assert code == 0 and out.strip() == "0"


@pytest.mark.parametrize("argv", [
    ["eval", "--algebra", "lattice", "--expr", "Z{0}[S9]"],
    ["eval", "--algebra", "lattice", "--expr", "Zp[S1]"],
    ["eval", "--algebra", "lattice", "--expr", "Z{0}[S1] *"],
    ["verify", "--suite", "serre", "--window", "3:1"],
    ["verify", "--suite", "serre", "--config", "no-such-file.json"],
    ["verify", "--suite", "serre", "--config", "A3"],
    ["verify", "--suite", "tilt"],
    ["verify", "--suite", "nope"],
])
def test_exit_code_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_eval_out_of_table(capsys):
    code, _, err = run(capsys, "eval", "--algebra", "lattice", "--expr", "Z{0}[P^2]*Z{0}[P]")
    assert code == 1 and "P" in err


def test_verify_serre_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "serre", "--json")
    assert code == 0
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    assert rep["pass"] and rep["notes"]["serre_signed"] is True
    serre = [r for r in rep["records"] if r["check"] == "serre"]
    for m in range(-2, 3):
        assert len([r for r in serre if r["instance"]["site"] == m]) >= 2


def test_verify_hopf_zero_category(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hopf", "--bound", "0,0", "--json")
    assert code == 0
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    assert rep["pass"]


def test_tilt_discover_check_and_corrupt(capsys, tmp_path):
    path = tmp_path / "tilt.json"
    code, out, _ = run(capsys, "tilt", "discover", "--target", "A2op", "--out", str(path))
    assert code == 0 and path.exists() and "tilt 0:" in out
    code, _, _ = run(capsys, "verify", "--suite", "tilt", "--tilt", str(path), "--window", "0:1")
    assert code == 0
    data = json.loads(path.read_text())
    data["map"][0]["to"], data["map"][1]["to"] = data["map"][1]["to"], data["map"][0]["to"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    report = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "tilt", "--tilt", str(bad), "--window", "0:1",
                       "--report", str(report))
    assert code == 1
    assert "failing" in out
    rep = json.loads(report.read_text())
    jsonschema.validate(rep, SCHEMA)
    assert not rep["pass"] and rep["summary"]["failed"] > 0


def test_tilt_corrupt_flag(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "tilt", "--target", "A2op", "--corrupt", "shift",
                     "--window", "0:1")
    assert code == 1


def test_table_commands(capsys, tmp_path):
    out_path = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "build", "--bound", "1,1", "--out", str(out_path))
    assert code == 0 and "classes: 5" in out
    code, out, _ = run(capsys, "table", "info", "--bound", "1,1", "--json")
    info = json.loads(out)
    assert [o["name"] for o in info["objects"]] == ["0", "S2", "S1", "S2+S1", "P"]


@pytest.mark.parametrize("suite", ["hall", "splice", "oracles"])
def test_run_suite_small(suite):
    rep = run_suite(suite, RunConfig(config="A2", q=3, bound=(1, 1)))
    jsonschema.validate(rep, SCHEMA)
    assert rep["pass"] and rep["summary"]["checked"] > 0


def test_schema_rejects_malformed():
    rep = run_suite("hall", RunConfig(config="A2", q=2, bound=(1, 1)))
    rep.pop("summary")
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(rep, SCHEMA)
