import json

import pytest

from fermatrl.cli import main, parse_seeds


def test_parse_seeds():
    assert parse_seeds("1-3,7") == [1, 2, 3, 7]
    assert parse_seeds("") == []


def test_oracle_default_config(capsys):
    assert main(["oracle", "--config", "paper_default.json"]) == 0
    out = capsys.readouterr().out
    assert "state=(21, 37)" in out
    assert "ys=(21.4161, 37.3057)" in out


def test_oracle_uniform(capsys):
    assert main([
        "oracle", "--config", "paper_default.json",
        "--set", "medium.indices=[1,1,1]", "--set", "medium.end=[150,0]",
    ]) == 0
    assert "state=(0, 0) T=150.000000" in capsys.readouterr().out


def test_oracle_refuses_huge_space(capsys):
    code = main([
        "oracle", "--config", "paper_default.json",
        "--set", "medium.height=1000000", "--set", "medium.indices=[1,1,1,1,1]",
        "--set", "medium.end=[250,0]", "--set", "s_ini=[0,0,0,0]",
    ])
    assert code != 0
    assert "refused" in capsys.readouterr().err


def test_train_writes_outputs(tmp_path, capsys):
    assert main(["train", "--config", "paper_default.json", "--out", str(tmp_path)]) == 0
    assert "state=(21, 37)" in capsys.readouterr().out
    for name in ("rounds.csv", "summary.json", "qtable.json", "path.svg", "convergence.svg"):
        assert (tmp_path / name).exists()


def test_train_zero_episodes(tmp_path, capsys):
    assert main(["train", "--config", "paper_default.json", "--out", str(tmp_path),
                 "--set", "agent.episodes=0"]) == 0
    assert "no episodes" in capsys.readouterr().out
    data = json.loads((tmp_path / "summary.json").read_text())
    assert data["training"]["episode_best_T"] == []


def test_train_bad_config(capsys):
    assert main(["train", "--config", "paper_default.json", "--set", "medium.indices=[-1,1,1]"]) != 0
    assert "medium.indices" in capsys.readouterr().err


def test_train_unknown_key(capsys):
    assert main(["train", "--config", "paper_default.json", "--set", "agent.lr=0.1"]) != 0
    assert "agent.lr" in capsys.readouterr().err


def test_missing_config(capsys):
    assert main(["train", "--config", "/nonexistent.json"]) != 0


def test_render(tmp_path):
    assert main(["train", "--config", "paper_default.json", "--out", str(tmp_path / "a"),
                 "--set", "agent.episodes=5"]) == 0
    assert main(["render", "--config", "paper_default.json", "--out", str(tmp_path / "b"),
                 "--set", "agent.episodes=5", "--csv", str(tmp_path / "a" / "rounds.csv")]) == 0
    assert (tmp_path / "a" / "path.svg").read_bytes() == (tmp_path / "b" / "path.svg").read_bytes()
    # the CSV keeps 6 significant digits, so only the structure is compared here
    a, b = ((tmp_path / d / "convergence.svg").read_text() for d in "ab")
    assert a.count("<polyline") == b.count("<polyline") == 1  # default selection: last episode


def test_sweep_single_seed_matches_train(tmp_path):
    args = ["--config", "paper_default.json", "--set", "agent.episodes=10"]
    assert main(["train", *args, "--set", "agent.seed=4", "--out", str(tmp_path / "t")]) == 0
    assert main(["sweep", *args, "--seeds", "4", "--out", str(tmp_path / "s")]) == 0
    assert (tmp_path / "t" / "summary.json").read_bytes() == (tmp_path / "s" / "seed_4" / "summary.json").read_bytes()
    agg = json.loads((tmp_path / "s" / "sweep_summary.json").read_text())
    assert agg["seeds"] == [4] and agg["failed"] == 0


def test_sweep_aggregate(tmp_path):
    assert main(["sweep", "--config", "paper_default.json", "--seeds", "1-3", "--jobs", "2",
                 "--out", str(tmp_path)]) == 0
    agg = json.loads((tmp_path / "sweep_summary.json").read_text())
    assert [p["seed"] for p in agg["per_seed"]] == [1, 2, 3]
    conv = [p["converged"] for p in agg["per_seed"]]
    assert agg["convergence_rate"] == pytest.approx(sum(conv) / 3)


def test_sweep_empty_seeds(capsys):
    assert main(["sweep", "--config", "paper_default.json", "--seeds", ""]) != 0
    assert "seed" in capsys.readouterr().err
