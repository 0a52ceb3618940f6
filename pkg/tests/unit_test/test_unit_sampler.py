# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from mlbalance import (
    AemloSampler,
    ConfigError,
    DatasetSchemaError,
    GenerationStarvationError,
    NothingToSampleError,
    SamplingConfig,
    ShapeMismatchError,
    TrainConfig,
    augment,
    generate,
    mlros,
    mlrus,
    mlsmote,
    normalize_features,
    substream,
)
from mlbalance.aemlo import decode_label_scores, encode_features, init_model
from mlbalance.common import SAMPLER_STREAM
from tests.utils import make_dataset, ten_instance_fixture, six_instance_fixture

FDY_BIAS = 11


def _model(dataset, label_bias=None, seed=0):
    _, scaler = normalize_features(dataset)
    config = TrainConfig(latent_dim=2, hidden_dim=8, batch_size=8)
    model = init_model(dataset.d, dataset.q, config, np.random.default_rng(seed), scaler)
    if label_bias is not None:
        params = model.parameters()
        params[FDY_BIAS] = np.full(dataset.q, float(label_bias))
        model = model.with_parameters(params)
    return model


def _replay_slots(seed, pool_size, draws):
    rng = substream(seed, SAMPLER_STREAM)
    return [int(rng.integers(pool_size)) for _ in range(draws)]


def test_unit_sampler_generate():
    dataset = ten_instance_fixture()
    model = _model(dataset, label_bias=50.0)
    config = SamplingConfig(p=0.5, imr_threshold=3.0, seed=2)
    result = AemloSampler(config).generate_with_report(model, dataset)

    assert result.minority_labels == [2]
    assert result.minority_instances == [0, 1]
    assert result.accepted == len(result.instances) == 5
    assert result.attempts == 5
    assert result.rejected_all_zero == 0
    expected = [[0, 1][slot] for slot in _replay_slots(2, 2, 5)]
    assert [instance.seed_index for instance in result.instances] == expected
    for instance in result.instances:
        assert instance.x.shape == (2,)
        assert instance.y.tolist() == [1, 1, 1]
        assert np.isfinite(instance.x).all()

    by_seed = {}
    for instance in result.instances:
        by_seed.setdefault(instance.seed_index, instance.x)
        assert np.array_equal(by_seed[instance.seed_index], instance.x)


def test_unit_sampler_deterministic():
    dataset = ten_instance_fixture()
    model = _model(dataset, label_bias=50.0)
    config = SamplingConfig(p=0.5, imr_threshold=3.0, seed=9)
    first = generate(model, dataset, config)
    second = generate(model, dataset, config)
    assert [i.seed_index for i in first] == [i.seed_index for i in second]
    for a, b in zip(first, second):
        assert np.array_equal(a.x, b.x)
        assert np.array_equal(a.y, b.y)


def test_unit_sampler_rejects_all_zero_labels():
    dataset = ten_instance_fixture()
    model = _model(dataset, seed=3)
    pool = [0, 1]
    latent = encode_features(model, model.scaler.transform(dataset.X[pool]))
    scores = decode_label_scores(model, latent)
    assert scores[0, 0] != scores[1, 0]
    # only the higher scoring seed turns label 0 on
    on_slot = int(np.argmax(scores[:, 0]))
    thresholds = np.array([scores[:, 0].mean(), 1.0 - 1e-12, 1.0 - 1e-12])
    model = model.with_thresholds(thresholds)

    config = SamplingConfig(p=0.3, imr_threshold=3.0, seed=1)
    result = AemloSampler(config).generate_with_report(model, dataset)

    accepted, rejected, attempts = 0, 0, 0
    rng = substream(1, SAMPLER_STREAM)
    while accepted < 3:
        attempts += 1
        if int(rng.integers(2)) == on_slot:
            accepted += 1
        else:
            rejected += 1
    assert (result.accepted, result.rejected_all_zero, result.attempts) == (3, rejected, attempts)
    for instance in result.instances:
        assert instance.seed_index == pool[on_slot]
        assert instance.y.tolist() == [1, 0, 0]


def test_unit_sampler_starvation():
    dataset = ten_instance_fixture()
    model = _model(dataset, label_bias=-50.0)
    config = SamplingConfig(p=0.5, imr_threshold=3.0, max_attempts=7)
    with pytest.raises(GenerationStarvationError) as info:
        generate(model, dataset, config)
    assert info.value.attempts == 7
    assert info.value.accepted == 0
    assert info.value.acceptance_rate == 0.0


def test_unit_sampler_nothing_to_sample():
    dataset = ten_instance_fixture()
    model = _model(dataset, label_bias=50.0)
    with pytest.raises(NothingToSampleError):
        generate(model, dataset, SamplingConfig(p=0.5, imr_threshold=100.0))


def test_unit_sampler_rounds_to_zero():
    dataset = ten_instance_fixture()
    model = _model(dataset, label_bias=50.0)
    result = AemloSampler(SamplingConfig(p=0.01, imr_threshold=3.0)).generate_with_report(model, dataset)
    assert result.instances == []
    assert result.attempts == 0


input_output = [
    dict(p=0.0),
    dict(p=1.5),
    dict(p=0.5, max_attempts=-1),
    # fewer attempts than instances requested
    dict(p=0.5, max_attempts=3),
]


@pytest.mark.parametrize("overrides", input_output)
def test_unit_sampler_config_rejects(overrides):
    dataset = ten_instance_fixture()
    model = _model(dataset, label_bias=50.0)
    with pytest.raises(ConfigError):
        generate(model, dataset, SamplingConfig(imr_threshold=3.0, **overrides))


def test_unit_sampler_config_budget():
    assert SamplingConfig(p=0.1).num(25) == 3
    assert SamplingConfig().attempt_budget(4) == 400
    assert SamplingConfig(max_attempts=9).attempt_budget(4) == 9


def test_unit_sampler_shape_mismatch():
    dataset = ten_instance_fixture()
    other = make_dataset(np.zeros((10, 3)), dataset.Y)
    with pytest.raises(ShapeMismatchError):
        generate(_model(other, label_bias=50.0), dataset, SamplingConfig(p=0.5, imr_threshold=3.0))


schema_mismatches = [
    dict(feature_names=["a", "b"]),
    dict(label_names=["x", "y", "z"]),
]


@pytest.mark.parametrize("names", schema_mismatches)
def test_unit_sampler_schema_mismatch(names):
    dataset = ten_instance_fixture()
    renamed = make_dataset(dataset.X, dataset.Y, **names)
    model = _model(dataset, label_bias=50.0).with_schema(renamed)
    with pytest.raises(DatasetSchemaError):
        generate(model, dataset, SamplingConfig(p=0.5, imr_threshold=3.0))
    # the schema the model was trained on passes
    assert len(generate(model, renamed, SamplingConfig(p=0.5, imr_threshold=3.0))) == 5


def test_unit_sampler_augment():
    dataset = ten_instance_fixture()
    model = _model(dataset, label_bias=50.0)
    synthetic = generate(model, dataset, SamplingConfig(p=0.5, imr_threshold=3.0))
    augmented = augment(dataset, synthetic)
    assert augmented.n == 15
    assert augmented.label_names == dataset.label_names
    assert np.array_equal(augmented.X[:10], dataset.X)
    assert np.array_equal(augmented.Y[:10], dataset.Y)
    for row, instance in enumerate(synthetic, start=10):
        assert np.array_equal(augmented.X[row], instance.x)
        assert np.array_equal(augmented.Y[row], instance.y)
    assert augment(dataset, []) is dataset


def test_unit_sampler_mlros():
    dataset = ten_instance_fixture()
    resampled = mlros(dataset, p=0.3, imr_threshold=3.0, seed=4)
    picks = np.array([0, 1])[substream(4, SAMPLER_STREAM).integers(2, size=3)]
    assert resampled.n == 13
    assert np.array_equal(resampled.X[:10], dataset.X)
    assert np.array_equal(resampled.X[10:], dataset.X[picks])
    assert np.array_equal(resampled.Y[10:], dataset.Y[picks])
    assert (resampled.Y[10:, 2] == 1).all()


def test_unit_sampler_mlros_without_minority():
    dataset = ten_instance_fixture()
    assert mlros(dataset, p=0.3, imr_threshold=100.0) is dataset
    with pytest.raises(ConfigError):
        mlros(dataset, p=0.0, imr_threshold=3.0)


def test_unit_sampler_mlrus():
    dataset = ten_instance_fixture()
    resampled = mlrus(dataset, p=0.2, imr_threshold=3.0, seed=6)
    removed = substream(6, SAMPLER_STREAM).choice(np.array([2, 3, 4, 5, 7]), size=2, replace=False)
    kept = [row for row in range(10) if row not in set(removed.tolist())]
    assert resampled.n == 8
    assert np.array_equal(resampled.X, dataset.X[kept])
    assert np.array_equal(resampled.Y, dataset.Y[kept])


def test_unit_sampler_mlrus_small_pool():
    dataset = ten_instance_fixture()
    resampled = mlrus(dataset, p=0.9, imr_threshold=3.0)
    # the whole pool goes; minority rows and rows without a majority label stay
    assert np.array_equal(resampled.X, dataset.X[[0, 1, 6, 8, 9]])
    with pytest.raises(ConfigError):
        mlrus(dataset, p=1.0, imr_threshold=3.0)


def test_unit_sampler_mlrus_empty_pool():
    Y = np.zeros((30, 3), dtype=np.int64)
    Y[0:3, 1] = 1
    Y[3:6, 2] = 1
    Y[[0, 1, 3, 4], 0] = 1
    dataset = make_dataset(np.arange(60, dtype=np.float64).reshape(30, 2), Y)
    resampled = mlrus(dataset, p=0.2, imr_threshold=3.0)
    assert resampled.n == 30
    assert np.array_equal(resampled.Y, dataset.Y)


def _smote_oracle(dataset, groups, seed):
    X = dataset.X[:4]
    rng = substream(seed, SAMPLER_STREAM)
    rows = []
    for s in range(4):
        r = groups[s][int(rng.integers(len(groups[s])))]
        u = rng.random()
        rows.append(X[s] + u * (X[r] - X[s]))
    return np.vstack(rows)


mlsmote_cases = [
    (2, {0: [1, 2], 1: [0, 2], 2: [0, 1], 3: [2, 1]}, [[1, 1, 1]] * 4),
    (1, {0: [1], 1: [0], 2: [0], 3: [2]}, [[1, 0, 1], [1, 0, 1], [1, 1, 1], [1, 1, 1]]),
]


@pytest.mark.parametrize("k, groups, labels", mlsmote_cases)
def test_unit_sampler_mlsmote(k, groups, labels):
    dataset = six_instance_fixture()
    resampled = mlsmote(dataset, k=k, imr_threshold=0.5, seed=3)
    assert resampled.n == 10
    assert np.array_equal(resampled.X[:6], dataset.X)
    np.testing.assert_allclose(resampled.X[6:], _smote_oracle(dataset, groups, 3), rtol=0, atol=1e-12)
    assert resampled.Y[6:].tolist() == labels


def test_unit_sampler_mlsmote_large_k():
    dataset = six_instance_fixture()
    resampled = mlsmote(dataset, k=10, imr_threshold=0.5, seed=3)
    assert resampled.n == 10
    # each synthetic row lies on a segment between two positives of the minority label
    assert (resampled.X[6:] >= 0).all()
    assert (resampled.X[6:] <= 5).all()
    assert resampled.Y[6:].tolist() == [[1, 1, 1]] * 4


def test_unit_sampler_mlsmote_skips():
    Y = np.zeros((8, 2), dtype=np.int64)
    Y[:6, 0] = 1
    Y[6, 1] = 1
    dataset = make_dataset(np.arange(16, dtype=np.float64).reshape(8, 2), Y)
    assert mlsmote(dataset, imr_threshold=3.0) is dataset
    with pytest.raises(ConfigError):
        mlsmote(dataset, k=0)
