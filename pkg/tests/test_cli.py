import json

import pytest

from watlab import cli
from watlab.presets import PRESET_NAMES, preset_config


def small_preset(**overrides):
    doc = preset_config("blaschke-half")
    doc["n_max"] = 32
    doc["grid"] = [512]
    doc["checks"] = [
        {"id": "weighted_series", "N": [0], "k": [0]},
        {"id": "mean_ii", "p": [10], "k": [0]},
        {"id": "szego", "grid": 4096},
        {"id": "identity", "n": [1, 2], "k": [0], "grid": 256},
    ]
    doc.update(overrides)
    return doc


def write_config(tmp_path, doc, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run(args):
    return cli.main(args)


def test_check_small_config_passes(tmp_path, capsys):
    cfg = write_config(tmp_path, small_preset())
    code = run(["check", "--config", cfg, "--out", str(tmp_path / "out")])
    assert code == cli.EXIT_OK
    stdout = capsys.readouterr().out
    assert "checks passed" in stdout
    assert "FAIL" not in stdout
    out = tmp_path / "out"
    assert (out / "table.csv").exists()
    assert (out / "reports.jsonl").exists()
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["subcommand"] == "check"
    assert sorted(manifest["outputs"]) == ["reports.jsonl", "table.csv"]
    assert len(manifest["config_sha256"]) == 64


def test_check_deterministic_outputs(tmp_path):
    cfg = write_config(tmp_path, small_preset())
    for name in ("a", "b"):
        assert run(["check", "--config", cfg, "--out", str(tmp_path / name)]) == 0
    for fname in ("table.csv", "reports.jsonl", "manifest.json"):
        assert (tmp_path / "a" / fname).read_bytes() == (
            tmp_path / "b" / fname
        ).read_bytes()


def test_table_subcommand(tmp_path):
    cfg = write_config(tmp_path, small_preset())
    code = run(["table", "--config", cfg, "--out", str(tmp_path / "out")])
    assert code == cli.EXIT_OK
    text = (tmp_path / "out" / "table.csv").read_text()
    assert "n,k,re,im,abs2" in text


def test_explore_subcommand(tmp_path):
    cfg = write_config(tmp_path, small_preset(n_max=128))
    code = run(["explore", "--config", cfg, "--out", str(tmp_path / "out")])
    assert code == cli.EXIT_OK
    summary = json.loads((tmp_path / "out" / "summary.json").read_text())
    assert "tail_inv_n" in summary
    assert (tmp_path / "out" / "plots" / "tail_inv_n.dat").exists()


def test_szego_subcommand(tmp_path, capsys):
    cfg = write_config(tmp_path, small_preset())
    assert run(["szego", "--config", cfg]) == cli.EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["check"] == "szego"
    assert doc["pass"]


def test_constants_subcommand(capsys):
    assert run(["constants", "1"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "gamma=3.0" in out


def test_preset_flag(tmp_path):
    code = run(
        [
            "check", "--preset", "constant", "--out", str(tmp_path / "out"),
            "--n-max", "32", "--checks", "weighted_series,szego",
        ]
    )
    assert code == cli.EXIT_OK
    reports = [
        json.loads(line)
        for line in (tmp_path / "out" / "reports.jsonl").read_text().splitlines()
    ]
    assert {r["check"] for r in reports} == {"weighted_series", "szego"}


def test_flag_overrides_recorded(tmp_path):
    run(
        [
            "table", "--preset", "blaschke-half", "--out", str(tmp_path / "out"),
            "--n-max", "16", "--grid", "512", "--k-window", "2", "--tol-e", "1e-8",
        ]
    )
    manifest = json.loads((tmp_path / "out" / "manifest.json").read_text())
    assert manifest["config"]["n_max"] == 16
    assert manifest["config"]["grid"] == [512]
    assert manifest["config"]["k_window"] == 2
    assert manifest["config"]["e_tol"] == 1e-8


def test_usage_errors(tmp_path, capsys):
    assert run([]) == cli.EXIT_USAGE
    assert run(["check"]) == cli.EXIT_USAGE  # neither --config nor --preset
    assert run(["check", "--preset", "nope"]) == cli.EXIT_USAGE
    assert run(["frobnicate"]) == cli.EXIT_USAGE
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["check", "--config", str(bad)]) == cli.EXIT_USAGE
    unknown = write_config(tmp_path, small_preset(bogus_field=1), "unknown.json")
    assert run(["check", "--config", unknown]) == cli.EXIT_USAGE
    capsys.readouterr()


def test_config_and_preset_conflict(tmp_path):
    cfg = write_config(tmp_path, small_preset())
    assert run(["check", "--config", cfg, "--preset", "constant"]) == cli.EXIT_USAGE


def test_hypothesis_exit_nu_in_halfspace(tmp_path):
    doc = small_preset()
    doc["nu"] = [-1]  # lies in S itself, not in -S
    cfg = write_config(tmp_path, doc)
    assert run(["table", "--config", cfg, "--out", str(tmp_path / "o")]) == cli.EXIT_HYPOTHESIS


def test_hypothesis_exit_zero_mean(tmp_path):
    doc = small_preset()
    doc["symbol"] = {"dimension": 1, "spectrum": [{"index": [1], "re": 1.0}]}
    cfg = write_config(tmp_path, doc)
    assert run(["table", "--config", cfg, "--out", str(tmp_path / "o")]) == cli.EXIT_HYPOTHESIS


def test_hypothesis_exit_not_vanishing(tmp_path):
    doc = small_preset()
    doc["symbol"] = {
        "dimension": 1,
        "spectrum": [{"index": [0], "re": 0.5}, {"index": [-1], "re": 0.25}],
    }
    cfg = write_config(tmp_path, doc)
    assert run(["table", "--config", cfg, "--out", str(tmp_path / "o")]) == cli.EXIT_HYPOTHESIS


def test_hypothesis_exit_sup_norm(tmp_path):
    doc = small_preset()
    doc["symbol"] = {
        "dimension": 1,
        "spectrum": [{"index": [0], "re": 0.9}, {"index": [1], "re": 0.9}],
    }
    cfg = write_config(tmp_path, doc)
    assert run(["table", "--config", cfg, "--out", str(tmp_path / "o")]) == cli.EXIT_HYPOTHESIS


def test_check_failure_exit(tmp_path, monkeypatch):
    import watlab.cli as cli_mod

    def failing_check(table, N, k, C, tol=1e-9):
        from watlab.bounds import BoundReport

        return BoundReport("weighted_series", {"N": N, "k": k}, 2.0, 1.0, tol, False)

    monkeypatch.setattr(cli_mod, "check_weighted_series", failing_check)
    cfg = write_config(tmp_path, small_preset())
    code = run(
        [
            "check", "--config", cfg, "--out", str(tmp_path / "out"),
            "--checks", "weighted_series",
        ]
    )
    assert code == cli.EXIT_CHECK_FAILED


@pytest.mark.parametrize("preset", PRESET_NAMES)
def test_presets_parse(preset):
    from watlab.config import RunConfig

    cfg = RunConfig.from_dict(preset_config(preset))
    assert cfg.symbol.dimension == len(cfg.nu)
