# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from mlbalance import (
    DatasetSchemaError,
    DatasetValidationError,
    MultiLabelDataset,
    ShapeMismatchError,
)
from tests.utils import make_dataset

input_output = [
    ([[1.0]], [[2]], DatasetValidationError),
    ([[np.nan]], [[1]], DatasetValidationError),
    ([[np.inf]], [[1]], DatasetValidationError),
    ([[1.0], [2.0]], [[1]], DatasetSchemaError),
    (np.zeros((0, 1)), np.zeros((0, 1)), DatasetSchemaError),
    (np.zeros((2, 0)), [[1], [0]], DatasetSchemaError),
]


@pytest.mark.parametrize("X, Y, expected", input_output)
def test_unit_dataset_invariants(X, Y, expected):
    X = np.asarray(X, dtype=np.float64)
    Y = np.asarray(Y)
    with pytest.raises(expected):
        MultiLabelDataset(
            X=X,
            Y=Y,
            feature_names=[f"f{j}" for j in range(X.shape[1])] if X.ndim == 2 else [],
            label_names=[f"L{j}" for j in range(Y.shape[1])] if Y.ndim == 2 else [],
        )


def test_unit_dataset_names_unique():
    with pytest.raises(DatasetSchemaError):
        make_dataset([[1.0]], [[1]], feature_names=["x"], label_names=["x"])
    with pytest.raises(DatasetSchemaError):
        make_dataset([[1.0]], [[1]], feature_names=["a", "b"])


def test_unit_dataset_is_read_only():
    source = np.array([[1.0, 2.0]])
    dataset = make_dataset(source, [[1]])
    source[0, 0] = 9.0
    assert dataset.X[0, 0] == 1.0
    with pytest.raises(ValueError):
        dataset.X[0, 0] = 5.0


def test_unit_dataset_append_and_subset():
    dataset = make_dataset(np.arange(10.0).reshape(5, 2), np.eye(5, 3, dtype=int))
    grown = dataset.append_rows(np.ones((3, 2)), np.ones((3, 3)))
    assert grown.n == 8
    assert np.array_equal(grown.X[:5], dataset.X)
    assert np.array_equal(grown.Y[:5], dataset.Y)
    assert dataset.subset([4, 0]).X.tolist() == [[8.0, 9.0], [0.0, 1.0]]
    with pytest.raises(ShapeMismatchError):
        dataset.append_rows(np.ones((1, 3)), np.ones((1, 3)))
