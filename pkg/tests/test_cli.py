import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from wvgpower import load_scenario, shapley_shubik
from wvgpower.cli import main
from wvgpower.io import reports_from_document


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, doc, name="game.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def table_rows(out):
    rows = {}
    for line in out.splitlines():
        parts = line.split()
        if len(parts) >= 3 and parts[1].isdigit():
            rows[parts[0]] = parts[2:]
    return rows


@pytest.fixture
def may_file(tmp_path):
    from wvgpower.scenarios import scenario_text
    path = tmp_path / "may.json"
    path.write_text(scenario_text("may2012"), encoding="utf-8")
    return str(path)


def test_compute_may_ssi_pgi(capsys, may_file):
    code, out, _ = run(capsys, "compute", may_file, "--indices", "ssi,pgi")
    assert code == 0
    rows = table_rows(out)
    assert rows["ND"] == ["0.46", "0.21"]
    assert rows["SYRIZA"] == ["0.16", "0.10"]
    assert rows["KKE"] == ["0.09", "0.15"]
    assert "ranking PGI: ND > PASOK=ANEL=KKE > GD=DIMAR > SYRIZA" in out


def test_compute_quota_override_coleman(capsys, tmp_path):
    june = load_scenario("june2012")
    from wvgpower.io import game_document
    path = write(tmp_path, game_document(june.game))
    code, out, _ = run(capsys, "compute", path, "--quota", "180", "--indices", "coleman")
    assert code == 0
    rows = table_rows(out)
    assert rows["ND"] == ["1.00", "0.58"]
    assert rows["SYRIZA"] == ["0.36", "0.21"]
    assert rows["KKE"] == ["0.02", "0.01"]


def test_compute_complete_graph_myerson_equals_ssi(capsys, tmp_path):
    names = ["A", "B", "C", "D"]
    doc = {"quota": 6, "parties": [{"name": n, "weight": w} for n, w in zip(names, [4, 3, 2, 1])],
           "edges": [[a, b] for i, a in enumerate(names) for b in names[i + 1:]]}
    code, out, _ = run(capsys, "compute", write(tmp_path, doc), "--indices", "ssi,myerson",
                       "--output", "machine")
    assert code == 0
    ssi, my = reports_from_document(json.loads(out))
    assert ssi.values == my.values


def test_compute_literal(capsys):
    code, out, _ = run(capsys, "compute", "--game-literal", "[3; 2,1,1]", "--indices", "ssi",
                       "--output", "machine")
    assert code == 0
    doc = json.loads(out)
    assert doc["indices"][0]["values"] == {"A": "2/3", "B": "1/6", "C": "1/6"}


def test_myerson_without_edges_fails(capsys):
    code, _, err = run(capsys, "compute", "--game-literal", "[3; 2,1,1]", "--indices", "myerson")
    assert code == 1
    assert "edges" in err


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"quota": 3,\n "parties": [}', encoding="utf-8")
    code, _, err = run(capsys, "compute", str(path))
    assert code == 1
    assert "line 2" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["compute", "--engine", "quantum"])
    assert info.value.code == 1


def test_cap_exceeded_exit_code(capsys):
    literal = "[16; " + ", ".join(["1"] * 31) + "]"
    code, _, err = run(capsys, "compute", "--game-literal", literal, "--indices", "pgi")
    assert code == 2
    code, out, _ = run(capsys, "compute", "--game-literal", literal, "--indices", "ssi")
    assert code == 0


def test_non_majority_quota_warns(capsys):
    code, _, err = run(capsys, "compute", "--game-literal", "[2; 1,1,1,1]", "--indices", "ssi")
    assert code == 0
    assert "warning" in err


def test_csv_output_round_trips(capsys, may_file):
    code, out, _ = run(capsys, "compute", may_file, "--indices", "ssi", "--output", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    exact = shapley_shubik(load_scenario("may2012").game).as_dict()
    assert {r["party"]: F(int(r["numerator"]), int(r["denominator"])) for r in rows} == exact
    assert {r["index"] for r in rows} == {"SSI"}


def test_output_is_deterministic(capsys, may_file):
    outs = {run(capsys, "compute", may_file, "--output", "machine")[1] for _ in range(3)}
    assert len(outs) == 1
    assert "version" not in json.loads(outs.pop())


def test_include_version(capsys, may_file):
    from wvgpower import __version__
    _, out, _ = run(capsys, "compute", may_file, "--output", "machine", "--include-version")
    assert json.loads(out)["version"] == __version__


def test_scenario_dec2014_golden_line(capsys):
    code, out, _ = run(capsys, "scenario", "dec2014")
    assert code == 0
    assert "ND ColemanPrevent = 1.00, golden 1, delta 0" in out


def test_scenario_may_myerson_gd(capsys):
    code, out, _ = run(capsys, "scenario", "may2012", "--indices", "myerson")
    assert table_rows(out)["GD"] == ["0.00"]


def test_scenario_engines_agree(capsys):
    code, _, _ = run(capsys, "scenario", "june2012", "--engine", "both", "--check")
    assert code == 0


def test_scenario_check_flags_mismatch(capsys):
    # the published May Myerson row is not reproducible from the published graph
    code, out, err = run(capsys, "scenario", "may2012", "--indices", "myerson", "--check")
    assert code == 3
    assert "MISMATCH" in out


def test_scenario_unknown(capsys):
    code, _, err = run(capsys, "scenario", "jan2015")
    assert code == 1
    assert "jan2015" in err


def test_scenario_machine_output_has_diff(capsys):
    code, out, _ = run(capsys, "scenario", "dec2014", "--output", "machine")
    doc = json.loads(out)
    assert code == 0
    assert all(d["ok"] for d in doc["golden_diff"])
    assert len(doc["golden_diff"]) == 28


def test_list_scenarios(capsys):
    code, out, _ = run(capsys, "list-scenarios")
    assert code == 0
    assert "dec2014  [180; 129, 71, 33, 20, 18, 17, 12]" in out


def test_apportion_may(capsys, tmp_path):
    from wvgpower.scenarios import scenario_text
    doc = json.loads(scenario_text("may2012"))
    votes_only = write(tmp_path, {"votes": doc["votes"]})
    emitted = tmp_path / "induced.json"
    code, out, _ = run(capsys, "apportion", votes_only, "--emit-game", str(emitted))
    assert code == 0
    assert "induced game [151; 108, 52, 41, 33, 26, 21, 19]" in out
    assert "+bonus" in out.splitlines()[1]
    code, out, _ = run(capsys, "compute", str(emitted), "--indices", "ssi")
    assert table_rows(out)["ND"] == ["0.46"]


def test_apportion_single_party(capsys, tmp_path):
    path = write(tmp_path, {"votes": [{"name": "A", "percent": "45"}, {"name": "B", "percent": "2"}]})
    code, out, _ = run(capsys, "apportion", path, "--output", "machine")
    assert code == 0
    assert json.loads(out)["seats"] == {"A": 300, "B": 0}


def test_apportion_tie(capsys, tmp_path):
    path = write(tmp_path, {"votes": [{"name": "A", "percent": "30"}, {"name": "B", "percent": "30"}]})
    code, _, err = run(capsys, "apportion", path)
    assert code == 1
    assert "tie" in err


def test_compute_from_votes_only(capsys, tmp_path):
    path = write(tmp_path, {"votes": [{"name": "A", "count": 500}, {"name": "B", "count": 300},
                                      {"name": "C", "count": 200}]})
    code, out, _ = run(capsys, "compute", path, "--indices", "ssi")
    assert code == 0
    assert "game [151; 175, 75, 50]" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wvgpower.cli", "list-scenarios"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "may2012" in proc.stdout
