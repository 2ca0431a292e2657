import io
import json
import sys

import pytest

from equifgl.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_fgl_emit_p(capsys):
    code, out, _ = run_cli(["fgl", "--emit", "p", "--cutoff", "3"], capsys)
    assert code == 0
    assert out.splitlines()[:3] == ["p0 = 0", "p1 = 2", "p2 = 2*b1"]


def test_fgl_json_deterministic(capsys):
    code, out1, _ = run_cli(["fgl", "--emit", "m", "--cutoff", "4",
                             "--format", "json"], capsys)
    assert code == 0
    json.loads(out1)
    _, out2, _ = run_cli(["fgl", "--emit", "m", "--cutoff", "4",
                          "--format", "json"], capsys)
    assert out1 == out2


def test_pi_verify_exit_codes(capsys):
    code, out, _ = run_cli(["pi", "--m", "1", "--n", "1", "--verify=-q2"],
                           capsys)
    assert code == 0 and "pass" in out
    code, out, _ = run_cli(["pi", "--m", "1", "--n", "1", "--verify=q2"],
                           capsys)
    assert code == 1


def test_pi_verify_flag_fixup(capsys):
    # a leading minus sign in the value must not be read as an option
    code, _, _ = run_cli(["pi", "--m", "1", "--n", "1", "--verify", "-q2"],
                         capsys)
    assert code == 0


def test_ring_phi(capsys):
    code, out, _ = run_cli(["ring", "--op", "phi", "--expr", "q2"], capsys)
    assert code == 0
    assert "u^-1" in out


def test_ring_bad_expr(capsys):
    code, _, err = run_cli(["ring", "--op", "phi", "--expr", "q2 +"], capsys)
    assert code == 1
    json.loads(err)


def test_lattice_json(capsys):
    code, out, _ = run_cli(["lattice", "--degree", "4", "--format", "json"],
                           capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["rank"] == 2


def test_chart_text(capsys):
    code, out, _ = run_cli(["chart", "k", "--t-range", "-2..2",
                            "--s-range", "-2..2"], capsys)
    assert code == 0
    assert "□" in out


def test_chart_negative_range_fixup(capsys):
    code, _, _ = run_cli(["chart", "k", "--t-range", "-4..0",
                          "--s-range", "-4..0"], capsys)
    assert code == 0


def test_eliminate_random(capsys):
    code, out, _ = run_cli(["eliminate", "--random", "5", "--seed", "3"],
                           capsys)
    assert code == 0
    assert "trial 4" in out
    assert "reexpands=True" in out


def test_efgl_change_basis(capsys):
    code, out, _ = run_cli(["efgl", "--flag", "1,s,1,s", "--trunc", "4",
                            "change-basis"], capsys)
    assert code == 0
    assert "matrix" in out


def test_audit_matches_golden(capsys):
    import os
    golden = os.path.join(os.path.dirname(__file__), "golden",
                          "convention_audit.json")
    code, out, _ = run_cli(["audit"], capsys)
    assert code == 0
    with open(golden) as fh:
        assert json.loads(out) == json.load(fh)


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg"
    cfg.write_text("cutoff = 3\n")
    code, out, _ = run_cli(["--config", str(cfg), "fgl", "--emit", "p"],
                           capsys)
    assert code == 0
    assert len(out.splitlines()) == 3
