# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import numpy as np

from ..common import ConfigError, DatasetSchemaError, SPLIT_STREAM, round_half_up, substream
from .dataset import DatasetSplit, MultiLabelDataset


def split(
    dataset: MultiLabelDataset,
    validation_fraction: float,
    test_fraction: float,
    seed: int,
) -> DatasetSplit:
    """
    Partition rows into train / validation / test by a seeded uniform shuffle.

    Held-out sizes are round(n * fraction) with halves rounded up; rows keep
    their source order inside each split.

    Raises:
        ConfigError: Fractions negative or summing to 1 or more.
        DatasetSchemaError: The validation or train split would be empty.
    """
    if validation_fraction < 0 or test_fraction < 0:
        raise ConfigError("split fractions must be non-negative")
    if validation_fraction + test_fraction >= 1:
        raise ConfigError(
            f"validation fraction {validation_fraction} + test fraction {test_fraction} must be < 1"
        )

    n = dataset.n
    n_test = round_half_up(n * test_fraction)
    n_val = round_half_up(n * validation_fraction)
    if n_val < 1:
        raise DatasetSchemaError(
            f"validation split of {n} rows at fraction {validation_fraction} would be empty"
        )
    if n_val + n_test >= n:
        raise DatasetSchemaError(f"training split of {n} rows would be empty")

    order = substream(seed, SPLIT_STREAM).permutation(n)
    test_index = np.sort(order[:n_test])
    validation_index = np.sort(order[n_test : n_test + n_val])
    train_index = np.sort(order[n_test + n_val :])

    return DatasetSplit(
        train=dataset.subset(train_index),
        validation=dataset.subset(validation_index),
        test=dataset.subset(test_index) if n_test else None,
        train_index=train_index.tolist(),
        validation_index=validation_index.tolist(),
        test_index=test_index.tolist(),
    )
