import json

import pytest

from ghilb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_group_command(capsys):
    code, out, _ = run(capsys, "group", "--group", "7:1,2,4")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 7
    assert len(payload["junior_elements"]) == 3
    assert payload["ages"]["[1, 2, 4]"] == "1"


def test_group_command_invalid_spec_exits_two(capsys):
    code, out, err = run(capsys, "group", "--group", "4:1,1,1")
    assert code == 2
    assert "error" in err


def test_quiver_command(capsys, tmp_path):
    dot_path = tmp_path / "q.dot"
    code, out, _ = run(capsys, "quiver", "--group", "2:1,1,0", "--dot", str(dot_path))
    assert code == 0
    payload = json.loads(out)
    assert payload["matrices"]["a1"] == [[1, 2], [2, 1]]
    assert payload["intersection"] == [[0, 0], [0, 0]]
    assert dot_path.read_text().startswith("digraph mckay {")


def test_fixed_points_command(capsys):
    code, out, _ = run(capsys, "fixed-points", "--group", "2:1,1,0;2:1,0,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4
    assert payload["oracle_agreement"] is True
    assert all(fp["count_identity"] for fp in payload["fixed_points"])


def test_fan_command(capsys):
    code, out, _ = run(capsys, "fan", "--group", "3:1,1,1")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["cones"]) == 3
    assert ["1/3", "1/3", "1/3"] in payload["rays"]
    assert all(flag["smooth"] and flag["crepant"] for flag in payload["charts"])


@pytest.mark.parametrize("spec", ["7:1,2,4", "3:1,1,1"])
def test_verify_command_passes(capsys, spec):
    code, out, err = run(capsys, "verify", "--group", spec, "--samples", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert "PASS" in err


def test_verify_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "verify", "--group", "2:1,1,0", "--seed", "3", "--out", str(a))[0] == 0
    assert run(capsys, "verify", "--group", "2:1,1,0", "--seed", "3", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_max_pairs_caps_work(capsys):
    code, out, _ = run(
        capsys, "verify", "--group", "5:1,2,2", "--max-pairs", "6", "--samples", "1"
    )
    assert code == 0
    payload = json.loads(out)
    koszul_check = next(c for c in payload["checks"] if c["name"] == "koszul_pairs")
    assert len(koszul_check["details"]["pairs"]) == 6


def test_out_file_written(capsys, tmp_path):
    path = tmp_path / "group.json"
    code, out, _ = run(capsys, "group", "--group", "3:1,1,1", "--out", str(path))
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["order"] == 3


def test_bad_flag_values_exit_two(capsys):
    code, _, err = run(capsys, "verify", "--group", "3:1,1,1", "--oracle-cap", "0")
    assert code == 2
