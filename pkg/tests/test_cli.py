"""CLI behaviour: exact output, stable formatting, exit codes."""

import csv
import io
import json
import subprocess
import sys

import pytest

from zerodiag import cli
from zerodiag.mwlat import Certificate


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, ["--format", "json"] + argv)
    return code, json.loads(out)


def test_search_finds_the_smallest_triple(capsys):
    code, out = run(capsys, ["search", "--max", "114"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["a", "b", "c", "eig1", "eig2", "eig3"]
    assert lines[2].split() == ["26", "51", "114", "136", "-19", "-117"]
    assert len(lines) == 3


def test_search_json_is_deterministic(capsys):
    code1, out1 = run(capsys, ["--format", "json", "search", "--max", "114"])
    code2, out2 = run(capsys, ["--format", "json", "search", "--max", "114"])
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["rows"] == [["26", "51", "114", "136", "-19", "-117"]]
    assert payload["failed"] == 0


def test_param_table_and_evaluation(capsys):
    code, payload = run_json(capsys, ["param"])
    assert code == 0
    fields = dict(payload["rows"])
    assert fields["degree"] == "4"
    assert fields["trivial integer parameters"] == "-2 -1 0 1 2 4 10"

    code, payload = run_json(capsys, ["param", "--at", "3"])
    assert code == 0
    fields = dict(payload["rows"])
    assert fields["point"] == "[190 : -55 : -135 : 125 : 99 : 57]"
    assert fields["eigenvalues"] == "(190, -55, -135)"


def test_param_at_rational_value(capsys):
    code, payload = run_json(capsys, ["param", "--at", "1/2"])
    assert code == 0
    fields = dict(payload["rows"])
    assert fields["t"] == "1/2"
    # the image point is projective with integral coprime coordinates
    coords = fields["point"].strip("[]").split(" : ")
    assert all(int(c) or True for c in coords)


def test_mult_two_emits_degree_eight_parametrization(capsys):
    code, payload = run_json(capsys, ["mult", "--n", "2", "--emit-param"])
    assert code == 0
    fields = dict(payload["rows"])
    assert fields["degree"] == "8"
    assert fields["x"] == "-12*t^2 + 20*t^4 + -8*t^6 + 1*t^8"
    assert fields["u"].startswith("(4 + -8*t^2")


def test_mult_zero_is_infinity(capsys):
    code, payload = run_json(capsys, ["mult", "--n", "0"])
    assert code == 0
    assert ["result", "point at infinity"] in payload["rows"]


def test_fibers_csv_round_trips(capsys):
    code, out = run(capsys, ["--format", "csv", "fibers"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["place", "type", "components", "simple"]
    assert rows[1:] == [
        ["-2", "I4", "4", "4"],
        ["-1", "I0*", "5", "4"],
        ["0", "I2", "2", "2"],
        ["1", "I0*", "5", "4"],
        ["2", "I4", "4", "4"],
        ["inf", "I2", "2", "2"],
    ]


def test_height_gram_default_sections(capsys):
    code, payload = run_json(capsys, ["height"])
    assert code == 0
    assert payload["columns"] == ["section", "O", "P", "Q", "T1", "T2"]
    gram = {row[0]: row[1:] for row in payload["rows"]}
    assert gram["P"] == ["0", "3/2", "0", "0", "0"]
    assert gram["Q"] == ["0", "0", "1/2", "0", "0"]
    assert gram["O"] == ["0"] * 5


def test_height_subset(capsys):
    code, payload = run_json(capsys, ["height", "--sections", "P,Q"])
    assert code == 0
    assert payload["rows"] == [["P", "3/2", "0"], ["Q", "0", "1/2"]]


def test_descent_certificate_passes(capsys):
    code, payload = run_json(capsys, ["descent"])
    assert code == 0
    assert payload["failed"] == 0
    statuses = {row[3] for row in payload["rows"]}
    assert statuses == {"pass", "assumed"}
    claims = [row[0] for row in payload["rows"]]
    assert "descent.scaled_disc" in claims
    assert "torsion.order" in claims


def test_descent_failure_sets_exit_code(capsys, monkeypatch):
    bad = Certificate("torsion",
                      [("torsion.order", 8),
                       ("torsion.structure", "(Z/2)^2")],
                      ok=False)
    monkeypatch.setattr(cli.mwlat, "torsion_certificate", lambda: bad)
    code, payload = run_json(capsys, ["descent"])
    assert code == 1
    assert payload["failed"] == 2  # wrong order and cert flag
    failing = [row[0] for row in payload["rows"] if row[3] == "fail"]
    assert "torsion.order" in failing


def test_lattice_forms_annotated_for_det_48(capsys):
    code, payload = run_json(capsys, ["lattice-forms"])
    assert code == 0
    rows = payload["rows"]
    assert [r[0] for r in rows] == [
        "[[2, 0], [0, 24]]", "[[4, 0], [0, 12]]",
        "[[6, 0], [0, 8]]", "[[8, 4], [4, 8]]"]
    assert rows[0][1:3] == ["yes", "yes"]
    assert all(r[1:3] == ["no", "no"] for r in rows[1:])
    assert [r[3] for r in rows] == ["no", "yes", "no", "yes"]


def test_lattice_forms_other_determinant(capsys):
    code, payload = run_json(capsys, ["lattice-forms", "--det", "8"])
    assert code == 0
    assert payload["columns"] == ["gram"]
    assert payload["rows"] == [["[[2, 0], [0, 4]]"]]


def test_ns_verify_passes(capsys):
    code, payload = run_json(capsys, ["ns", "verify"])
    assert code == 0
    assert payload["failed"] == 0
    claims = dict((row[0], row[1]) for row in payload["rows"])
    assert claims["ns.disc"] == "-48"
    assert claims["ns.fibers.components"] == "22"


def test_ns_count_classes(capsys):
    code, payload = run_json(capsys, ["ns", "count-classes",
                                      "--degree", "2", "--genus", "0"])
    assert code == 0
    assert ["count", "441"] in payload["rows"]


def test_ns_catalogue(capsys):
    code, payload = run_json(capsys, ["ns", "catalogue"])
    assert code == 0
    sizes = dict(payload["rows"])
    assert sizes["total"] == "441"
    assert sizes["strict transforms"] == "63"
    assert sizes["matches lattice enumeration"] == "yes"


def test_orbits(capsys):
    code, payload = run_json(capsys, ["orbits"])
    assert code == 0
    claims = dict((row[0], row[1]) for row in payload["rows"])
    assert claims["orbit.group_order"] == "144"
    assert claims["orbit.double_points"] == "12"
    assert claims["orbit.jacobian_rank"] == "(2)"


def test_verify_all_green(capsys):
    code, out = run(capsys, ["verify-all"])
    assert code == 0
    assert "0 failed" in out
    assert "fail\n" not in out


def test_bad_usage_exits_2(capsys, monkeypatch):
    with pytest.raises(SystemExit) as e:
        cli.main(["no-such-command"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        cli.main(["--format", "xml", "fibers"])
    assert e.value.code == 2

    assert cli.main(["ns", "count-classes", "--degree", "3",
                     "--genus", "0"]) == 2
    assert cli.main(["height", "--sections", "P,R"]) == 2
    assert cli.main(["mult", "--n", "2", "--section", "R"]) == 2
    capsys.readouterr()

    monkeypatch.setenv("ZERODIAG_WORKERS", "zero")
    assert cli.main(["search", "--max", "30"]) == 2
    monkeypatch.setenv("ZERODIAG_WORKERS", "0")
    assert cli.main(["search", "--max", "30"]) == 2
    capsys.readouterr()


def test_worker_env_is_honoured(capsys, monkeypatch):
    monkeypatch.setenv("ZERODIAG_WORKERS", "2")
    code, payload = run_json(capsys, ["search", "--max", "114"])
    assert code == 0
    assert payload["rows"] == [["26", "51", "114", "136", "-19", "-117"]]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zerodiag.cli", "param"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "degree" in proc.stdout
