# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import json
import os

import pytest

from mlbalance import (
    ConfigError,
    DatasetParseError,
    DivergedTrainingError,
    GenerationStarvationError,
    MLBalanceEnvError,
    NonFiniteLossError,
    NothingToSampleError,
    UndefinedMetricError,
    __version__,
    read_dataset,
    write_dataset_file,
)
from mlbalance.cli import (
    CommandRunner,
    EXIT_DIVERGED,
    EXIT_INPUT,
    EXIT_NOTHING_TO_SAMPLE,
    EXIT_OK,
    EXIT_STARVATION,
    exit_code_for,
    run,
)
from tests.utils import imbalanced_dataset, read_metadata_string, save_metadata_string

FAST_TRAINING = ["--epochs", "2", "--hidden-dim", "8", "--latent-dim", "2", "--batch-size", "16"]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("MLBALANCE_SEED", raising=False)
    monkeypatch.delenv("MLBALANCE_LOGGING", raising=False)


@pytest.fixture
def dataset():
    return imbalanced_dataset(n=120, d=6, q=4, rare=(3,), prevalence=0.05, seed=1)


@pytest.fixture
def data_file(tmp_path, dataset):
    return write_dataset_file(dataset, str(tmp_path / "data.csv"))


def _read_json(path):
    return json.loads(read_metadata_string(str(path)))


def test_unit_cli_stats(tmp_path, capsys, dataset, data_file):
    out = tmp_path / "stats"
    code = run(["stats", "--input", data_file, "--label-count", "4", "--out", str(out)])
    assert code == EXIT_OK
    printed = json.loads(capsys.readouterr().out)
    written = _read_json(out / "stats.json")
    assert printed == written
    assert (written["n"], written["d"], written["q"]) == (120, 6, 4)
    counts = [int(dataset.Y[:, j].sum()) for j in range(4)]
    assert [row["n1"] for row in written["per_label"]] == counts
    assert [row["name"] for row in written["per_label"]] == ["L0", "L1", "L2", "L3"]
    assert written["minority_labels"] == [3]
    assert os.path.isfile(out / "resolved_config.json")


def test_unit_cli_missing_input(tmp_path, capsys):
    missing = str(tmp_path / "absent.csv")
    code = run(["stats", "--input", missing, "--label-count", "2", "--out", str(tmp_path)])
    assert code == EXIT_INPUT
    assert missing in capsys.readouterr().err


def test_unit_cli_missing_label_information(tmp_path, capsys, data_file):
    code = run(["stats", "--input", data_file, "--out", str(tmp_path / "out")])
    assert code == EXIT_INPUT
    assert "--label-count" in capsys.readouterr().err


def test_unit_cli_parse_error(tmp_path, capsys):
    broken = str(tmp_path / "broken.csv")
    save_metadata_string(broken, "a,b,L\n1,2,1\n3,x,0\n")
    code = run(["stats", "--input", broken, "--label-count", "1", "--out", str(tmp_path / "out")])
    assert code == EXIT_INPUT
    assert "line" in capsys.readouterr().err


def test_unit_cli_precedence(tmp_path, monkeypatch, data_file):
    monkeypatch.setenv("MLBALANCE_SEED", "7")
    out = tmp_path / "env"
    assert run(["stats", "--input", data_file, "--label-count", "4", "--out", str(out)]) == EXIT_OK
    resolved = _read_json(out / "resolved_config.json")
    assert resolved["seed"] == 7
    assert resolved["epochs"] == 100

    settings = str(tmp_path / "settings.json")
    save_metadata_string(settings, json.dumps({"seed": 5, "epochs": 3, "p": 0.2}))
    out = tmp_path / "file"
    args = ["stats", "--input", data_file, "--label-count", "4", "--out", str(out)]
    assert run(args + ["--config", settings, "--epochs", "4"]) == EXIT_OK
    resolved = _read_json(out / "resolved_config.json")
    assert resolved["seed"] == 5
    assert resolved["epochs"] == 4
    assert resolved["p"] == 0.2


def test_unit_cli_env_error(tmp_path, monkeypatch, capsys, data_file):
    monkeypatch.setenv("MLBALANCE_SEED", "abc")
    code = run(["stats", "--input", data_file, "--label-count", "4", "--out", str(tmp_path)])
    assert code == EXIT_INPUT
    assert "MLBALANCE_SEED" in capsys.readouterr().err


def test_unit_cli_config_unknown_key(tmp_path, capsys, data_file):
    settings = str(tmp_path / "settings.json")
    save_metadata_string(settings, json.dumps({"sead": 1}))
    code = run(["stats", "--input", data_file, "--label-count", "4", "--config", settings])
    assert code == EXIT_INPUT
    assert "sead" in capsys.readouterr().err


input_output = [
    (["--p", "0"], "sampling rate"),
    (["--val-frac", "0.6", "--test-frac", "0.5"], "--val-frac"),
    (["--alpha", "0"], "alpha"),
    (["--k", "0"], "k"),
]


@pytest.mark.parametrize("extra, message", input_output)
def test_unit_cli_invalid_values(tmp_path, capsys, data_file, extra, message):
    code = run(["stats", "--input", data_file, "--label-count", "4", "--out", str(tmp_path)] + extra)
    assert code == EXIT_INPUT
    assert message in capsys.readouterr().err


def test_unit_cli_train(tmp_path, data_file):
    first, second, replay = tmp_path / "a", tmp_path / "b", tmp_path / "c"
    base = ["train", "--input", data_file, "--label-count", "4", "--seed", "3"] + FAST_TRAINING
    assert run(base + ["--out", str(first)]) == EXIT_OK
    assert run(base + ["--out", str(second)]) == EXIT_OK
    model = read_metadata_string(str(first / "model.json"))
    assert read_metadata_string(str(second / "model.json")) == model
    log = read_metadata_string(str(first / "loss_log.csv")).splitlines()
    assert log[0] == "epoch,phi,psi,gamma,total,mean_val_f1"
    assert len(log) == 3

    resolved = str(first / "resolved_config.json")
    assert run(["train", "--config", resolved, "--out", str(replay)]) == EXIT_OK
    assert read_metadata_string(str(replay / "model.json")) == model


def test_unit_cli_sample_nothing_to_sample(tmp_path, data_file):
    args = ["sample", "--input", data_file, "--label-count", "4", "--out", str(tmp_path)]
    assert run(args + FAST_TRAINING + ["--imr-threshold", "1000"]) == EXIT_NOTHING_TO_SAMPLE


def test_unit_cli_sample_nothing_to_sample_skips_training(tmp_path, monkeypatch, data_file):
    def no_training(*_args, **_kwargs):
        raise AssertionError("the model must not be trained without minority labels")

    monkeypatch.setattr(CommandRunner, "train_model", no_training)
    args = ["sample", "--input", data_file, "--label-count", "4", "--out", str(tmp_path)]
    assert run(args + FAST_TRAINING + ["--imr-threshold", "1000"]) == EXIT_NOTHING_TO_SAMPLE


def test_unit_cli_sample_mlros(tmp_path, capsys, data_file):
    out = tmp_path / "mlros"
    args = ["sample", "--input", data_file, "--label-count", "4", "--out", str(out)]
    assert run(args + ["--sampler", "mlros", "--p", "0.1"]) == EXIT_OK
    provenance = _read_json(out / "provenance.json")
    assert json.loads(capsys.readouterr().out) == provenance
    assert provenance["method"] == "mlros"
    assert provenance["num"] == 12
    assert provenance["accepted"] == 12
    assert (provenance["n_before"], provenance["n_after"]) == (120, 132)
    assert provenance["minority_labels"] == [3]
    assert "k" not in provenance
    assert provenance["mean_ir_after"] < provenance["mean_ir_before"]
    assert read_dataset(str(out / "augmented.csv"), label_count=4).n == 132


def test_unit_cli_sample_aemlo_with_model(tmp_path, data_file):
    trained = tmp_path / "trained"
    common = ["--input", data_file, "--label-count", "4", "--seed", "2"] + FAST_TRAINING
    assert run(["train", "--out", str(trained)] + common) == EXIT_OK

    out = tmp_path / "sampled"
    model = str(trained / "model.json")
    code = run(["sample", "--out", str(out), "--model", model, "--max-attempts", "100000"] + common)
    if code == EXIT_STARVATION:
        pytest.skip("two training epochs left every decoded label vector empty")
    assert code == EXIT_OK
    provenance = _read_json(out / "provenance.json")
    assert provenance["method"] == "aemlo"
    assert provenance["accepted"] == provenance["num"] == 12
    assert provenance["attempts"] == provenance["accepted"] + provenance["rejected_all_zero"]
    augmented = read_dataset(str(out / "augmented.csv"), label_count=4)
    assert augmented.n == 132
    assert (augmented.Y[120:].sum(axis=1) > 0).all()


def test_unit_cli_eval(tmp_path, data_file):
    out = tmp_path / "eval"
    args = ["eval", "--input", data_file, "--label-count", "4", "--out", str(out), "--br-epochs", "50"]
    assert run(args) == EXIT_OK
    report = _read_json(out / "eval_report.json")
    assert report["classifier"] == "br"
    assert report["n_test"] == 24
    for name in ("macro_f", "macro_auc", "ranking_loss"):
        assert 0.0 <= report[name] <= 1.0


def test_unit_cli_eval_test_input(tmp_path, dataset, data_file):
    test_file = write_dataset_file(dataset.subset(range(30)), str(tmp_path / "test.csv"))
    out = tmp_path / "eval"
    args = ["eval", "--input", data_file, "--test-input", test_file, "--label-count", "4"]
    assert run(args + ["--out", str(out), "--classifier", "mlknn", "--k", "3"]) == EXIT_OK
    report = _read_json(out / "eval_report.json")
    assert report["classifier"] == "mlknn"
    assert report["n_test"] == 30


def test_unit_cli_pipeline_without_sampler(tmp_path, capsys, data_file):
    out = tmp_path / "pipeline"
    args = ["pipeline", "--input", data_file, "--label-count", "4", "--out", str(out)]
    assert run(args + ["--sampler", "none", "--br-epochs", "50"]) == EXIT_OK
    report = _read_json(out / "pipeline_report.json")
    assert json.loads(capsys.readouterr().out) == report
    assert report["baseline"] == report["augmented"]
    assert report["delta"] == {"macro_f": 0.0, "macro_auc": 0.0, "ranking_loss": 0.0}
    audit = report["leakage_audit"]
    assert audit["synthetic_rows"] == 0
    assert audit["splits_disjoint"] and audit["seeds_from_train"] and audit["test_untouched"]
    assert audit["train_rows"] + audit["validation_rows"] + audit["test_rows"] == 120


def test_unit_cli_pipeline_mlsmote(tmp_path, data_file):
    out = tmp_path / "pipeline"
    args = ["pipeline", "--input", data_file, "--label-count", "4", "--out", str(out)]
    args += ["--sampler", "mlsmote", "--smote-k", "3", "--classifier", "mlknn", "--k", "5"]
    assert run(args) == EXIT_OK
    report = _read_json(out / "pipeline_report.json")
    provenance = report["provenance"]
    assert provenance["method"] == "mlsmote"
    assert provenance["k"] == 3
    assert report["leakage_audit"]["synthetic_rows"] == provenance["num"]
    assert set(report["wall_clock_seconds"]) >= {"split", "baseline_classifier", "augmented_classifier"}


def test_unit_cli_version(capsys):
    with pytest.raises(SystemExit) as info:
        run(["--version"])
    assert info.value.code == 0
    assert f"mlbalance {__version__}" in capsys.readouterr().out


exit_codes = [
    (NothingToSampleError(), EXIT_NOTHING_TO_SAMPLE),
    (GenerationStarvationError("starved", attempts=10, accepted=1), EXIT_STARVATION),
    (DivergedTrainingError("nan", epoch=1, batch=0), EXIT_DIVERGED),
    (NonFiniteLossError("nan"), EXIT_DIVERGED),
    (ConfigError("bad"), EXIT_INPUT),
    (DatasetParseError("bad", line=3), EXIT_INPUT),
    (UndefinedMetricError("none"), EXIT_INPUT),
    (MLBalanceEnvError("bad"), EXIT_INPUT),
    (FileNotFoundError("absent"), EXIT_INPUT),
    (RuntimeError("other"), 1),
]


@pytest.mark.parametrize("err, code", exit_codes)
def test_unit_cli_exit_codes(err, code):
    assert exit_code_for(err) == code
