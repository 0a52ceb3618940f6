# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import json
import math

import numpy as np
import pytest

from mlbalance import (
    DegenerateProfileError,
    compute_profile,
    majority_labels,
    minority_instances,
    minority_labels,
    stats_report,
)
from tests.utils import labels_with_counts, make_dataset


def _dataset(n, counts):
    Y = labels_with_counts(n, counts)
    return make_dataset(np.zeros((n, 1)), Y)


def test_unit_imbalance_profile_three_labels():
    profile = compute_profile(_dataset(20, [10, 5, 2]))
    assert profile.n1 == [10, 5, 2]
    assert profile.n0 == [10, 15, 18]
    assert profile.irlbl == [1.0, 2.0, 5.0]
    assert profile.imr == [1.0, 3.0, 9.0]
    assert profile.mean_ir == pytest.approx(8.0 / 3.0, abs=1e-12)
    assert profile.cvir == pytest.approx(0.7806, abs=1e-4)
    assert profile.card == pytest.approx(17.0 / 20.0)
    assert profile.den == pytest.approx(17.0 / 60.0)


def test_unit_imbalance_profile_symmetric():
    profile = compute_profile(_dataset(10, [4, 4, 4]))
    assert profile.irlbl == [1.0, 1.0, 1.0]
    assert profile.mean_ir == 1.0
    assert profile.cvir == 0.0
    assert minority_labels(profile) == []


def test_unit_imbalance_minority_labels():
    profile = compute_profile(_dataset(100, [50, 4, 20]))
    assert profile.irlbl == [1.0, 12.5, 2.5]
    assert profile.imr == [1.0, 24.0, 4.0]
    assert profile.mean_ir == pytest.approx(16.0 / 3.0)
    assert minority_labels(profile) == [1]
    assert minority_labels(profile, math.inf) == []
    assert majority_labels(profile) == [0, 2]


def test_unit_imbalance_minority_labels_antitone():
    rng = np.random.default_rng(0)
    for _ in range(20):
        counts = rng.integers(1, 40, size=6).tolist()
        profile = compute_profile(_dataset(60, counts))
        thresholds = sorted(rng.uniform(0.5, 30.0, size=5))
        sets = [set(minority_labels(profile, t)) for t in thresholds]
        for low, high in zip(sets, sets[1:]):
            assert high <= low


def test_unit_imbalance_zero_support_label():
    profile = compute_profile(_dataset(10, [5, 0, 1]))
    assert math.isinf(profile.irlbl[1])
    assert profile.mean_ir == pytest.approx((1.0 + 5.0) / 2.0)
    assert 1 not in minority_labels(profile, 0.0)
    rendered = json.loads(profile.to_strict_json())
    assert rendered["irlbl"][1] is None


def test_unit_imbalance_label_on_every_instance():
    profile = compute_profile(_dataset(4, [4, 1]))
    assert profile.irlbl == [1.0, 4.0]
    assert math.isinf(profile.imr[0])


def test_unit_imbalance_degenerate():
    with pytest.raises(DegenerateProfileError):
        compute_profile(_dataset(5, [0, 0]))


def test_unit_imbalance_brute_force_recount():
    rng = np.random.default_rng(5)
    Y = (rng.random((37, 5)) < 0.3).astype(int)
    Y[0] = 1
    profile = compute_profile(make_dataset(np.zeros((37, 1)), Y))
    counts = [sum(int(Y[i, j]) for i in range(37)) for j in range(5)]
    assert profile.n1 == counts
    assert profile.irlbl == [max(counts) / c for c in counts]


input_output = [
    ([[1, 0], [0, 1], [0, 0]], [0], [0]),
    ([[1, 0], [0, 1], [0, 0]], [1], [1]),
    ([[1, 0], [0, 1], [0, 0]], [], []),
    ([[1, 0], [1, 1], [0, 1]], [0, 1], [0, 1, 2]),
]


@pytest.mark.parametrize("Y, ls, expected", input_output)
def test_unit_imbalance_minority_instances(Y, ls, expected):
    dataset = make_dataset(np.zeros((len(Y), 1)), Y)
    assert minority_instances(dataset, ls) == expected


def test_unit_imbalance_minority_instances_brute_force():
    rng = np.random.default_rng(9)
    Y = (rng.random((50, 4)) < 0.2).astype(int)
    dataset = make_dataset(np.zeros((50, 1)), Y)
    ls = [1, 3]
    union = sorted({i for j in ls for i in range(50) if Y[i, j] == 1})
    assert minority_instances(dataset, ls) == union


def test_unit_imbalance_stats_report():
    dataset = _dataset(100, [50, 4, 20])
    report = stats_report(compute_profile(dataset), 10.0)
    assert [row.name for row in report.per_label] == ["L0", "L1", "L2"]
    assert report.per_label[1].n1 == 4
    assert report.minority_labels == [1]
    assert report.eval("per_label.1.irlbl") == "12.5"
