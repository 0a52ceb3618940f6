# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import os
from typing import List, Optional, Sequence

import numpy as np

from mlbalance import MultiLabelDataset


def create_dirs(fullpath: str) -> None:
    basedir = os.path.dirname(fullpath)
    os.makedirs(basedir, mode=0o700, exist_ok=True)


def save_metadata_string(filename: str, data: str) -> None:
    # create directory
    create_dirs(str(filename))

    # save metadata
    with open(filename, "w", encoding="utf-8") as data_file:
        data_file.write(data)


def read_metadata_string(filename: str) -> str:
    with open(filename, "r", encoding="utf-8") as data_file:
        return data_file.read()


def make_dataset(
    X: Sequence[Sequence[float]],
    Y: Sequence[Sequence[int]],
    feature_names: Optional[List[str]] = None,
    label_names: Optional[List[str]] = None,
) -> MultiLabelDataset:
    X = np.asarray(X, dtype=np.float64)
    Y = np.asarray(Y, dtype=np.int64)
    if feature_names is None:
        feature_names = [f"f{j}" for j in range(X.shape[1])]
    if label_names is None:
        label_names = [f"L{j}" for j in range(Y.shape[1])]
    return MultiLabelDataset(X=X, Y=Y, feature_names=feature_names, label_names=label_names)


def labels_with_counts(n: int, counts: Sequence[int]) -> np.ndarray:
    """
    n x q label matrix whose column j is on for its first counts[j] rows.
    """
    Y = np.zeros((n, len(counts)), dtype=np.int64)
    for j, count in enumerate(counts):
        Y[:count, j] = 1
    return Y


def random_dataset(n: int, d: int, q: int, seed: int, density: float = 0.4) -> MultiLabelDataset:
    """
    Unit-range features with labels that depend on them linearly, so the
    label structure is learnable.
    """
    rng = np.random.default_rng(seed)
    X = rng.random((n, d))
    A = rng.normal(size=(d, q))
    logits = (X - 0.5) @ A
    cut = np.quantile(logits, 1.0 - density, axis=0)
    Y = (logits >= cut).astype(np.int64)
    # every label keeps one positive and one negative
    Y[0, :] = 1
    Y[1, :] = 0
    return make_dataset(X, Y)


def imbalanced_dataset(
    n: int = 500,
    d: int = 20,
    q: int = 6,
    rare: Sequence[int] = (4, 5),
    prevalence: float = 0.04,
    seed: int = 0,
) -> MultiLabelDataset:
    """
    Common labels around 30-50% prevalence plus ``rare`` labels on exactly
    ``round(prevalence * n)`` instances each. Features are a noisy linear
    image of the labels.
    """
    rng = np.random.default_rng(seed)
    Y = np.zeros((n, q), dtype=np.int64)
    common = [j for j in range(q) if j not in rare]
    for j in common:
        Y[:, j] = (rng.random(n) < rng.uniform(0.3, 0.5)).astype(np.int64)
    count = int(round(prevalence * n))
    for j in rare:
        Y[rng.choice(n, size=count, replace=False), j] = 1
    A = rng.normal(0.0, 1.0, size=(q, d))
    X = Y @ A + rng.normal(0.0, 0.5, size=(n, d))
    return make_dataset(X, Y)


def ten_instance_fixture() -> MultiLabelDataset:
    """
    n1 = [5, 5, 2]: with an ImR threshold of 3 the only minority label is
    L2 (rows 0 and 1), and five other rows carry a majority label.
    """
    Y = [
        [1, 0, 1],
        [0, 1, 1],
        [1, 1, 0],
        [1, 0, 0],
        [1, 1, 0],
        [0, 1, 0],
        [0, 0, 0],
        [1, 1, 0],
        [0, 0, 0],
        [0, 0, 0],
    ]
    X = np.arange(20, dtype=np.float64).reshape(10, 2)
    return make_dataset(X, Y)


def six_instance_fixture() -> MultiLabelDataset:
    """
    L2 is the minority label (rows 0-3); neighbor distances among its
    positives are tie-free.
    """
    X = [[0, 0], [1, 0], [0, 3], [5, 5], [10, 0], [0, 10]]
    Y = [
        [1, 1, 1],
        [1, 0, 1],
        [1, 1, 1],
        [1, 1, 1],
        [1, 1, 0],
        [0, 1, 0],
    ]
    return make_dataset(X, Y)
