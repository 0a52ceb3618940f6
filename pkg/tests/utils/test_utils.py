# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import numpy as np

from .utils import (
    create_dirs,
    save_metadata_string,
    read_metadata_string,
    labels_with_counts,
    imbalanced_dataset,
    ten_instance_fixture,
    six_instance_fixture,
)


def test_create_dirs(tmp_path):
    test_dir = tmp_path / "test_dir"
    test_file = test_dir / "test_file.txt"
    create_dirs(str(test_file))
    assert test_dir.exists()


def test_save_and_read_metadata_string(tmp_path):
    test_file = tmp_path / "nested" / "test_file.txt"
    save_metadata_string(str(test_file), "test_data")
    assert read_metadata_string(str(test_file)) == "test_data"


def test_labels_with_counts():
    Y = labels_with_counts(5, [3, 0, 5])
    assert Y.sum(axis=0).tolist() == [3, 0, 5]


def test_imbalanced_dataset_rare_counts():
    dataset = imbalanced_dataset(n=500, d=20, q=6, seed=1)
    assert (dataset.n, dataset.d, dataset.q) == (500, 20, 6)
    assert dataset.Y[:, 4].sum() == 20
    assert dataset.Y[:, 5].sum() == 20


def test_fixture_counts():
    assert ten_instance_fixture().Y.sum(axis=0).tolist() == [5, 5, 2]
    assert six_instance_fixture().Y.sum(axis=0).tolist() == [5, 5, 4]
    assert np.isfinite(six_instance_fixture().X).all()
