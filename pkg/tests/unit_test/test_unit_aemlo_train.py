# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import json
import math

import numpy as np
import pytest

import mlbalance.aemlo.trainer as trainer_module
from mlbalance import (
    AemloTrainer,
    ConfigError,
    DatasetSchemaError,
    DivergedTrainingError,
    TrainConfig,
    load_model,
    save_model,
    train,
    write_loss_log,
)
from mlbalance.aemlo import LossTerms
from tests.utils import make_dataset, random_dataset


def _small_config(**overrides):
    values = dict(latent_dim=2, hidden_dim=8, epochs=3, batch_size=8, seed=4)
    values.update(overrides)
    return TrainConfig(**values)


def _sets():
    return random_dataset(40, 5, 3, seed=1), random_dataset(12, 5, 3, seed=2)


input_output = [
    dict(alpha=0.0),
    dict(beta=-1.0),
    dict(lambda_ortho=-0.1),
    dict(lambda_sim=-0.1),
    dict(epochs=0),
    dict(batch_size=0),
    dict(hidden_dim=0),
    dict(latent_dim=0),
    dict(latent_dim=5, batch_size=4),
    dict(lr=0.0),
    dict(leaky_slope=1.0),
]


@pytest.mark.parametrize("overrides", input_output)
def test_unit_aemlo_train_config_rejects(overrides):
    with pytest.raises(ConfigError):
        TrainConfig(**overrides).check()


def test_unit_aemlo_train_config_resolve():
    assert TrainConfig().check()
    resolved = TrainConfig().resolve(20, 6)
    assert resolved.batch_size == 20
    assert resolved.latent_dim == 6
    small = TrainConfig().resolve(3, 6)
    assert (small.batch_size, small.latent_dim) == (3, 3)
    assert TrainConfig(latent_dim=4).resolve(100, 50).latent_dim == 4
    assert TrainConfig().resolve(1000, 100).latent_dim == 32


def test_unit_aemlo_train_fit():
    train_set, validation_set = _sets()
    trainer = AemloTrainer(_small_config())
    model = trainer.fit(train_set, validation_set)
    assert (model.d, model.q, model.latent_dim) == (5, 3, 2)
    assert ((model.thresholds > 0) & (model.thresholds < 1)).all()
    assert [record.epoch for record in trainer.history.epochs] == [1, 2, 3]
    for record in trainer.history.epochs:
        assert math.isfinite(record.total)
        assert 0.0 <= record.mean_val_f1 <= 1.0
        assert record.total == pytest.approx(
            record.phi + model.config.alpha * record.psi + model.config.beta * record.gamma
        )


def test_unit_aemlo_train_deterministic():
    train_set, validation_set = _sets()
    first = save_model(train(train_set, validation_set, _small_config()))
    second = save_model(train(train_set, validation_set, _small_config()))
    assert first == second
    other = save_model(train(train_set, validation_set, _small_config(seed=5)))
    assert other != first


def test_unit_aemlo_train_loss_log():
    train_set, validation_set = _sets()
    trainer = AemloTrainer(_small_config())
    trainer.fit(train_set, validation_set)
    lines = write_loss_log(trainer.history).splitlines()
    assert lines[0] == "epoch,phi,psi,gamma,total,mean_val_f1"
    assert len(lines) == 4
    assert lines[1].split(",")[0] == "1"


def test_unit_aemlo_train_schema_mismatch():
    train_set, _ = _sets()
    renamed = make_dataset(train_set.X[:5], train_set.Y[:5], label_names=["a", "b", "c"])
    with pytest.raises(DatasetSchemaError):
        train(train_set, renamed, _small_config())


def test_unit_aemlo_train_invalid_config():
    train_set, validation_set = _sets()
    with pytest.raises(ConfigError):
        train(train_set, validation_set, _small_config(alpha=0.0))


def test_unit_aemlo_train_divergence(monkeypatch):
    def diverging(model, Xb, Yb, config, weights=None):
        nan = float("nan")
        terms = LossTerms(phi=nan, m=nan, s=nan, psi=nan, gamma=nan, total=nan)
        return terms, [np.zeros_like(p) for p in model.parameters()]

    monkeypatch.setattr(trainer_module, "loss_and_gradients", diverging)
    train_set, validation_set = _sets()
    with pytest.raises(DivergedTrainingError) as info:
        train(train_set, validation_set, _small_config())
    assert info.value.epoch == 1
    assert info.value.batch == 0


def test_unit_aemlo_train_persistence():
    train_set, validation_set = _sets()
    model = train(train_set, validation_set, _small_config(epochs=1))
    text = save_model(model)
    restored = load_model(text)
    assert save_model(restored) == text
    assert np.array_equal(restored.thresholds, model.thresholds)
    for ours, theirs in zip(model.parameters(), restored.parameters()):
        assert np.array_equal(ours, theirs)

    data = json.loads(text)
    assert data["format"] == "mlbalance.aemlo"
    assert data["version"] == 1
    assert data["feature_names"] == train_set.feature_names
    assert data["label_names"] == train_set.label_names
    assert restored.feature_names == train_set.feature_names
    assert restored.label_names == train_set.label_names


persistence_errors = [
    "not json",
    json.dumps({"format": "something.else", "version": 1}),
    json.dumps({"format": "mlbalance.aemlo", "version": 2}),
]


@pytest.mark.parametrize("text", persistence_errors)
def test_unit_aemlo_train_persistence_errors(text):
    with pytest.raises(ConfigError):
        load_model(text)
