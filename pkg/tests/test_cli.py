import csv
import io
import json

import pytest

from wsiqr.cli import main
from wsiqr.spectrum import energy_formula_hulthen
from wsiqr.params import PotentialSpec, QuantumNumbers

HUL = ["--family", "hulthen", "--a-fm", "10", "--v0-mev", "0.2", "--mass-term", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(line for line in io.StringIO(text) if not line.startswith("#")))


def test_spectrum_default_table(capsys):
    code, out, _ = run(capsys, "spectrum")
    table = rows(out)
    assert code == 0
    assert len(table) == 6
    assert all(r["E_closed"] == "" and r["valid"] == "false" for r in table)
    assert all(float(r["E_oracle_exact"]) < 0 for r in table if r["E_oracle_exact"])
    flags = table[0]["flags"]
    assert "closed:DegenerateConditionError" in flags


def test_spectrum_hulthen_matches_formula(capsys):
    code, out, _ = run(capsys, "spectrum", *HUL, "--l-max", "0", "--no-oracle")
    assert code == 0
    spec = PotentialSpec.hulthen(0.1, 0.2, mass_term=1.0)
    for r in rows(out):
        qn = QuantumNumbers(int(r["n"]), int(r["l"]), int(r["D"]))
        assert float(r["E_closed"]) == pytest.approx(energy_formula_hulthen(qn, spec), rel=1e-13)
        assert float(r["E_numeric_iqr"]) == pytest.approx(float(r["E_closed"]), abs=1e-10)


def test_json_and_csv_deterministic(capsys):
    outs = [run(capsys, "spectrum", *HUL, "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    data = json.loads(outs[0])
    assert data["spec"]["family"] == "hulthen"
    assert len(data["rows"]) == 6
    a = run(capsys, "spectrum", *HUL)[1]
    b = run(capsys, "spectrum", *HUL)[1]
    assert a == b


def test_wavefunction(capsys):
    code, out, _ = run(capsys, "wavefunction", *HUL, "-n", "1", "--samples", "50")
    table = rows(out)
    assert code == 0 and len(table) == 50
    assert "# E=-0.16" in out


def test_wavefunction_no_state(capsys):
    code, _, err = run(capsys, "wavefunction", "-n", "0")
    assert code == 3
    assert "no bound state" in err


def test_usage_errors(capsys):
    assert run(capsys, "spectrum", "--dims", "")[0] == 64
    assert run(capsys, "spectrum", "--dims", "1")[0] == 64
    assert run(capsys, "wavefunction", *HUL, "--samples", "0")[0] == 64
    assert run(capsys, "frobnicate")[0] == 64
    assert run(capsys, "verify", "--only", "c99")[0] == 64
    assert run(capsys, "spectrum", "--a-fm", "-1")[0] == 64


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("family = hulthen\na_fm = 10\nv0_mev = 0.2\nmass_term = 1\nn_max = 0\n")
    code, out, _ = run(capsys, "spectrum", "--config", str(cfg), "--no-oracle", "--l-max", "0")
    assert code == 0
    assert float(rows(out)[0]["E_closed"]) == pytest.approx(-0.9025, rel=1e-13)
    cfg.write_text("colour = blue\n")
    assert run(capsys, "spectrum", "--config", str(cfg))[0] == 64
    assert run(capsys, "spectrum", "--config", str(tmp_path / "missing"))[0] == 64


def test_out_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out, _ = run(capsys, "spectrum", *HUL, "--no-oracle", "--out", str(path))
    assert code == 0 and out == ""
    assert len(rows(path.read_text())) == 6


def test_verify_appendix_only(capsys):
    code, out, _ = run(capsys, "verify", "--only", "appendix")
    assert code == 0
    assert "[PASS] C10 appendix" in out
    assert "C1 " not in out


def test_verify_fault_injection(capsys):
    code, out, _ = run(capsys, "verify", "--only", "pekeris", "--inject-fault", "d2")
    assert code == 1
    assert "[FAIL] C1 pekeris" in out


def test_verify_byte_identical(capsys):
    a = run(capsys, "verify", "--only", "c1", "--only", "c10", "--seed", "7")[1]
    b = run(capsys, "verify", "--only", "c1", "--only", "c10", "--seed", "7")[1]
    assert a == b


def test_degeneracy_command(capsys):
    code, out, _ = run(capsys, "degeneracy", "--family", "hulthen", "--a-fm", "20",
                       "--v0-mev", "0.1", "--mass-term", "1")
    assert code == 0
    assert len(rows(out)) == 5
    assert "bit_identical=True" in out
    assert run(capsys, "degeneracy")[0] == 3


def test_appendix_check(capsys):
    code, out, _ = run(capsys, "appendix-check", "--draws", "25")
    assert code == 0
    assert len(rows(out)) == 5 * 25  # one row per identity per draw
    assert run(capsys, "appendix-check", "--draws", "0")[0] == 64
