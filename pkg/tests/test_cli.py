import csv
import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from coxpyramids.cli import main
from coxpyramids.coxeter import pyramid_diagram

from published_data import TABLE2


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def schema(name):
    return json.loads(resources.files("coxpyramids").joinpath("schemas", f"{name}.json").read_text())


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 33
    assert lines[0] == "(2,3,2,3)"
    assert lines == sorted(lines)


def test_enumerate_json(capsys):
    _, out, _ = run(capsys, "enumerate", "--format", "json")
    assert [tuple(q) for q in json.loads(out)] == sorted(TABLE2)


def test_growth_2324_denominator(capsys):
    code, out, _ = run(capsys, "growth", "2,3,2,4", "--verify-perron-numeric")
    data = json.loads(out)
    jsonschema.validate(data, schema("growth_report"))
    assert code == 0
    # (t - 1)(t^7 + t^6 + 2t^5 + t^4 + 2t^3 + t - 1)
    assert data["g"] == [-1, 1, 0, 2, 1, 2, 1, 1]
    assert data["denominator_text"] == "(t - 1) * (-1 + t + 2*t^3 + t^4 + 2*t^5 + t^6 + t^7)"
    assert data["series"][:2] == [1, 5] and len(data["series"]) == 31
    assert data["numeric_root_check"] is True


def test_growth_text(capsys):
    code, out, _ = run(capsys, "growth", "3,3,3,3", "--format", "text")
    assert code == 0 and "tau         2.41421356237" in out


def test_growth_from_diagram(tmp_path, capsys):
    p = tmp_path / "d.json"
    d = pyramid_diagram((3, 3, 3, 3)).to_json()
    jsonschema.validate(d, schema("diagram"))
    p.write_text(json.dumps(d))
    code, out, _ = run(capsys, "growth", "--diagram", str(p), "--series-depth", "6")
    assert code == 0
    assert json.loads(out)["series"][:2] == [1, 5]


def test_volume_json(capsys):
    code, out, _ = run(capsys, "volume", "3,3,3,3", "--oracle-volume")
    data = json.loads(out)
    jsonschema.validate(data, schema("volume_report"))
    assert data["total"] == pytest.approx(0.610644, abs=1e-6)
    assert data["oracle"] == pytest.approx(data["total"], abs=1e-8)


def test_perron_json(capsys):
    code, out, _ = run(capsys, "perron", "3,3,5,5")
    data = json.loads(out)
    jsonschema.validate(data, schema("perron"))
    assert data["j"] == 2 and data["support_gcd"] == 1


def test_order_outputs(capsys):
    code, out, _ = run(capsys, "order")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "order", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("order"))
    assert data["monotonicity"]["violations"] == []
    exc = {(tuple(a), tuple(b)) for a, b, _, _ in data["monotonicity"]["converse_exceptions"]}
    assert ((2, 3, 3, 3), (2, 4, 2, 4)) in exc


def test_report_csv(capsys):
    code, out, _ = run(capsys, "report", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "l", "m", "n", "growth_rate", "volume", "perron_j", "denominator"]
    assert len(rows) == 34
    by_q = {tuple(map(int, r[:4])): r for r in rows[1:]}
    r = by_q[(3, 3, 3, 3)]
    assert float(r[4]) == pytest.approx(2.41421, abs=5e-6)
    assert float(r[5]) == pytest.approx(0.610644, abs=1e-6)
    for q, (tau, vol) in TABLE2.items():
        assert float(by_q[q][4]) == pytest.approx(tau, abs=5e-5)
        assert float(by_q[q][5]) == pytest.approx(vol, abs=1e-5)


def test_report_json_schema(capsys):
    _, out, _ = run(capsys, "report", "--format", "json", "--oracle-volume", "--verify-perron-numeric")
    data = json.loads(out)
    jsonschema.validate(data, schema("report"))
    assert len(data) == 33 and all(r["numeric_root_check"] for r in data)


def test_report_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "report", "--format", "json")
    _, parallel, _ = run(capsys, "report", "--format", "json", "--jobs", "2")
    assert serial == parallel


def test_output_file(tmp_path, capsys):
    p = tmp_path / "out.csv"
    code, out, _ = run(capsys, "report", "-o", str(p))
    assert code == 0 and out == ""
    assert len(p.read_text().splitlines()) == 34


def test_deterministic_across_processes(tmp_path):
    outs = []
    for i in range(2):
        p = tmp_path / f"r{i}.json"
        subprocess.run([sys.executable, "-m", "coxpyramids", "report", "--format", "json", "-o", str(p)], check=True)
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


def test_noncanonical_input_is_canonicalized(capsys):
    code, out, err = run(capsys, "volume", "4,2,3,3")
    assert code == 0
    assert json.loads(out)["quadruple"] == [2, 4, 3, 3]
    assert "canonical form (2,4,3,3)" in err


def test_domain_error(capsys):
    code, _, err = run(capsys, "growth", "2,4,2,5")
    assert code == 3
    assert "CD=(4,5)" in err


def test_degenerate_is_domain_error(capsys):
    code, _, err = run(capsys, "volume", "2,2,3,3")
    assert code == 3 and "degenerate" in err


@pytest.mark.parametrize("argv", [
    ["growth", "2,3,2"],
    ["growth", "x,y,z,w"],
    ["volume"],
    ["report", "--eps", "-1"],
    ["report", "--series-depth", "1"],
    ["nonsense"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_invariant_failure_exit_code(capsys):
    # j_max = 1 cannot certify (3,3,5,5), which needs (t+1)^2
    code, _, err = run(capsys, "perron", "3,3,5,5", "--j-max", "1")
    assert code == 4 and "no Perron certificate" in err
