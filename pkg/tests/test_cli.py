"""Command-line interface: output contracts, determinism, exit codes."""
import json

import pytest

from polylab.cli import build_parser, dispatch


def run_cli(capsys, *argv):
    try:
        code = dispatch(list(argv))
    except SystemExit as exc:  # argparse errors
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_factor_subcommand(capsys):
    code, out, err = run_cli(capsys, "factor", "--poly", "[1,1,1,1]", "--k", "2")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "reducible"
    assert ["1", "1"] in [f["coeffs"] for f in report["factors"]]
    assert "seed: 0" in err


def test_factor_methods_agree(capsys):
    outs = []
    for method in ("subset", "enumerate"):
        _, out, _ = run_cli(capsys, "factor", "--poly", "[-1,1,-1,1,1,1,1]",
                            "--k", "2", "--M", "2", "--method", method)
        outs.append(json.loads(out)["factors"])
    assert outs[0] == outs[1]


def test_classify_method(capsys):
    code, out, _ = run_cli(capsys, "factor", "--poly", "[1,1,1]",
                           "--method", "classify")
    assert code == 0
    assert json.loads(out)["status"] == "irreducible"


def test_charpoly_explicit_matrix(capsys):
    code, out, _ = run_cli(capsys, "charpoly", "--matrix", "[[0,1],[1,0]]")
    assert code == 0
    assert json.loads(out) == ["-1", "0", "1"]  # z^2 - 1


def test_charpoly_sampled(capsys):
    code, out, _ = run_cli(capsys, "charpoly", "--model", "iid-sign",
                           "--n", "4", "--seed", "3")
    assert code == 0
    coeffs = json.loads(out)
    assert len(coeffs) == 5 and coeffs[-1] == "1"


def test_sample_subcommand(capsys):
    code, out, _ = run_cli(capsys, "sample", "--model", "rademacher-poly",
                           "--n", "6", "--count", "3", "--seed", "1")
    assert code == 0
    data = json.loads(out)
    assert data["seed"] == 1
    assert len(data["samples"]) == 3
    assert all(s[-1] == "1" for s in data["samples"])


def test_model_flag_validation(capsys):
    code, _, _ = run_cli(capsys, "sample", "--model", "rademacher-poly",
                         "--n", "6", "--p", "0.5")
    assert code not in (0, None)


def test_ffcount(capsys):
    code, out, _ = run_cli(capsys, "ffcount", "--q", "2", "--n", "4")
    assert code == 0 and out.strip() == "3"


def test_census(capsys):
    code, out, _ = run_cli(capsys, "census", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["reducible"] == 4 and data["total"] == 8
    code, out, _ = run_cli(capsys, "census", "--n", "3", "--format", "text")
    assert "4/8" in out


def test_bounds_subcommand(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--k", "2", "--M", "2")
    assert code == 0
    data = json.loads(out)
    assert data["product"] == "81"
    assert data["lower_ok"] and data["upper_ok"] and data["sum_ok"]
    code, out, _ = run_cli(capsys, "bounds", "--case", "iv", "--n", "100",
                           "--B", "2", "--m", "2", "--K", "3")
    assert code == 0
    assert json.loads(out)["Bprime"] == 38.0


def test_experiment_validate_exit_code(capsys):
    code, out, _ = run_cli(capsys, "experiment", "--validate", "--model",
                           "rademacher-poly", "--n", "8", "--k", "1",
                           "--trials", "1000", "--seed", "0")
    assert code == 0
    assert json.loads(out)["holds"] is True


def test_experiment_config_csv(capsys, tmp_path):
    config = {
        "spec": {"model": "rademacher-poly", "n": 7},
        "statistic": {"kind": "integer-root", "x": 1},
        "trials": 500,
        "seed": 2,
    }
    path = tmp_path / "config.json"
    path.write_text(json.dumps(config))
    code, out, _ = run_cli(capsys, "experiment", "--config", str(path),
                           "--format", "csv", "--workers", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("model,n,statistic")
    assert lines[1].split(",")[0] == "rademacher-poly"


def test_control_subcommand(capsys, tmp_path):
    graph = {"n": 3, "edges": [[0, 1], [1, 2]]}
    path = tmp_path / "graph.json"
    path.write_text(json.dumps(graph))
    code, out, _ = run_cli(capsys, "control", "--graph", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["controllable"] is False and data["automorphisms"] == 2
    code, out, _ = run_cli(capsys, "control", "--n", "6", "--p", "0.5",
                           "--seed", "4")
    assert code in (0, 1)


def test_out_flag_writes_file(capsys, tmp_path):
    path = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "ffcount", "--q", "3", "--n", "3",
                           "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().strip() == "8"


def test_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("POLYLAB_SEED", "77")
    _, out_env, err = run_cli(capsys, "sample", "--model", "rademacher-poly",
                              "--n", "5", "--count", "1")
    assert "seed: 77" in err
    monkeypatch.delenv("POLYLAB_SEED")
    _, out_77, _ = run_cli(capsys, "sample", "--model", "rademacher-poly",
                           "--n", "5", "--count", "1", "--seed", "77")
    assert out_env == out_77


def test_byte_identical_repeated_invocations(capsys):
    invocations = [
        ("factor", "--poly", "[1,1,1,1]", "--k", "2"),
        ("factor", "--poly", "[-1,1,-1,1,1]", "--method", "classify"),
        ("charpoly", "--matrix", "[[1,1],[1,-1]]"),
        ("charpoly", "--model", "erdos-renyi", "--n", "5", "--p", "0.5",
         "--seed", "6"),
        ("sample", "--model", "permutation", "--n", "6", "--count", "4",
         "--seed", "9"),
        ("bounds", "--k", "3", "--M", "2"),
        ("bounds", "--case", "i", "--n", "10000000"),
        ("ffcount", "--q", "2", "--n", "12"),
        ("census", "--n", "5"),
        ("experiment", "--validate", "--model", "rademacher-poly", "--n", "8",
         "--k", "1", "--trials", "512", "--seed", "3"),
    ]
    assert len(invocations) == 10
    for argv in invocations:
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second and first


def test_help_snapshots(capsys):
    expected_flags = {
        "factor": ["--poly", "--k", "--M", "--method", "--seed", "--format", "--out"],
        "charpoly": ["--matrix", "--model", "--n", "--seed"],
        "sample": ["--model", "--n", "--N", "--p", "--rho", "--m", "--s", "--B",
                   "--mean-zero", "--count", "--seed"],
        "experiment": ["--config", "--validate", "--k", "--M", "--trials",
                       "--exclude", "--workers", "--seed"],
        "bounds": ["--k", "--M", "--case", "--n", "--epsilon", "--c", "--cp",
                   "--C", "--B", "--m", "--K"],
        "ffcount": ["--q", "--n"],
        "control": ["--graph", "--model", "--n", "--p", "--seed"],
        "census": ["--n", "--format"],
    }
    for sub, flags in expected_flags.items():
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args([sub, "--help"])
        assert exc.value.code == 0
        out = capsys.readouterr().out
        for flag in flags:
            assert flag in out, (sub, flag)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["no-such-command"])
    assert exc.value.code == 2
