import json
import argparse

import pytest

from mpzeta.cli import main, parse_complex, RunConfig


def test_eval(capsys):
    assert main(["-q", "eval", "--s", "2"]) == 0
    out = capsys.readouterr().out
    assert "1.6449340668e+00" in out
    assert out.startswith("L(s)")


def test_eval_json(tmp_path):
    fn = str(tmp_path/"eval.json")
    assert main(["-q", "eval", "--spec", "dedekind", "--dK", "-4", "--s", "2", "--out", fn]) == 0
    with open(fn) as f:
        data = json.load(f)
    assert abs(data["L"][0] - 1.5067030099229851) < 1e-10
    assert len(data["config_hash"]) == 64


def test_usage_errors(capsys):
    assert main([]) == 1
    assert main(["-q", "eval", "--s", "two"]) == 1
    assert main(["-q", "boundary", "--curve", "99z9"]) == 1
    assert main(["-q", "boundary"]) == 1
    assert main(["-q", "boundary", "--curve", "11a1", "--t-step", "-0.1"]) == 1
    assert main(["-q", "explicit", "--spec", "ZE"]) == 1


def test_boundary_empty_grid(capsys):
    argv = ["-q", "boundary", "--curve", "11a1", "--t-from", "1", "--t-to", "0"]
    assert main(argv) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "t,theta"
    assert lines[1].startswith("# config-hash=")
    assert len(lines[1]) == len("# config-hash=") + 64
    assert len(lines) == 2
    assert main(argv) == 0
    assert capsys.readouterr().out == out


def test_boundary_strict(capsys):
    argv = ["-q", "boundary", "--curve", "11a1", "--method", "theta", "--method", "bessel2",
            "--t-from", "3", "--t-to", "3.2", "--t-step", "0.1", "--tol", "1e-30"]
    assert main(argv) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "t,theta,bessel2,diff"
    assert len(lines) == 5
    assert main(argv + ["--strict"]) == 2


def test_explicit(tmp_path):
    fn = str(tmp_path/"explicit.json")
    assert main(["-q", "explicit", "--out", fn]) == 0
    with open(fn) as f:
        data = json.load(f)
    assert abs(data["difference"]) < 1e-8
    assert "config_hash" in data
    assert main(["-q", "explicit", "--strict", "--family", "gauss", "--x-lo", "0.4", "--x-hi", "3",
                 "--out", fn]) == 0


def test_ordinates(tmp_path):
    fn = str(tmp_path/"ordinates.json")
    assert main(["-q", "ordinates", "--T", "10", "--H", "2", "--out", fn]) == 0
    with open(fn) as f:
        data = json.load(f)
    assert data["pass"]
    assert data["T"] == 10.0


def test_signscan(tmp_path):
    fn = str(tmp_path/"sign.json")
    assert main(["-q", "signscan", "--curve", "11a1", "--t-from", "0", "--t-to", "1", "--out", fn]) == 0
    with open(fn) as f:
        data = json.load(f)
    assert data["sign_changes"] == []
    assert data["derivative_order"] == 0


def test_zeros(tmp_path):
    fn = str(tmp_path/"zeros.csv")
    assert main(["-q", "zeros", "--height", "26", "--out", fn]) == 0
    with open(fn) as f:
        lines = f.read().splitlines()
    assert lines[0] == "gamma"
    assert len(lines) == 5
    assert abs(float(lines[1]) - 14.134725141734693) < 1e-8
    assert lines[4].startswith("# config-hash=")


@pytest.mark.slow
def test_certify(capsys):
    assert main(["-q", "certify"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["pass"]
    assert main(["-q", "certify", "--perturb", "0.01", "--strict"]) == 2
    data = json.loads(capsys.readouterr().out)
    assert not data["pass"]


def test_run_config(tmp_path):
    with pytest.raises(ValueError):
        RunConfig("boundary", grids={"t_step": -0.1})
    with pytest.raises(ValueError):
        RunConfig("boundary", tolerances={"tol": 0.0})
    with pytest.raises(ValueError):
        RunConfig("boundary", paths={"zero_file": str(tmp_path/"missing.txt")})
    plain = RunConfig("boundary", "11a1", {"t_step": 0.1}, {"tol": 1e-8})
    placed = RunConfig("boundary", "11a1", {"t_step": 0.1}, {"tol": 1e-8},
                       {"out": "table.csv", "cache_dir": str(tmp_path)})
    assert plain.config_hash() == placed.config_hash()
    assert plain.config_hash() != RunConfig("boundary", "11a1", {"t_step": 0.2}, {"tol": 1e-8}).config_hash()


def test_parse_complex():
    assert parse_complex("2") == 2.0
    assert parse_complex("0.5+14.1i") == complex(0.5, 14.1)
    assert parse_complex("0.5 - 2j") == complex(0.5, -2.0)
    with pytest.raises(argparse.ArgumentTypeError):
        parse_complex("abc")
