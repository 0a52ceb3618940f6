# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

"""
Resampling baselines driven by the same minority label set as generation:
random replication (MLROS), random removal (MLRUS) and neighbor
interpolation (MLSMOTE).
"""

from typing import List

import numpy as np
from sklearn.neighbors import NearestNeighbors

from ..common import ConfigError, SAMPLER_STREAM, round_half_up, substream
from ..data_io import MultiLabelDataset
from ..imbalance import (
    DEFAULT_IMR_THRESHOLD,
    compute_profile,
    majority_labels,
    minority_instances,
    minority_labels,
)
from ..utils import get_logger

DEFAULT_NEIGHBORS = 5

_logger = get_logger(__name__)


def mlros(
    dataset: MultiLabelDataset,
    p: float,
    imr_threshold: float = DEFAULT_IMR_THRESHOLD,
    seed: int = 0,
) -> MultiLabelDataset:
    """
    Append ``round(p * n)`` copies of minority instances drawn uniformly with
    replacement. Without minority instances the dataset is returned as is.
    """
    if not 0 < p <= 1:
        raise ConfigError(f"sampling rate p={p} must lie in (0, 1]")
    ls = minority_labels(compute_profile(dataset), imr_threshold)
    pool = np.asarray(minority_instances(dataset, ls), dtype=np.int64)
    if pool.size == 0:
        _logger.warning("mlros: no minority instances; dataset left unchanged")
        return dataset

    num = round_half_up(p * dataset.n)
    rng = substream(seed, SAMPLER_STREAM)
    picks = pool[rng.integers(len(pool), size=num)]
    _logger.info("mlros: replicating %d of %d minority instances", num, len(pool))
    return dataset.append_rows(dataset.X[picks], dataset.Y[picks])


def mlrus(
    dataset: MultiLabelDataset,
    p: float,
    imr_threshold: float = DEFAULT_IMR_THRESHOLD,
    seed: int = 0,
) -> MultiLabelDataset:
    """
    Remove ``round(p * n)`` instances drawn without replacement from those
    outside the minority set that carry a majority label (IRlbl < MeanIR).
    Minority instances are never removed; a pool smaller than the quota is
    removed entirely.
    """
    if not 0 < p < 1:
        raise ConfigError(f"removal rate p={p} must lie in (0, 1)")
    profile = compute_profile(dataset)
    protected = np.zeros(dataset.n, dtype=bool)
    protected[minority_instances(dataset, minority_labels(profile, imr_threshold))] = True

    majority = majority_labels(profile)
    carries_majority = (
        dataset.Y[:, majority].any(axis=1) if majority else np.zeros(dataset.n, dtype=bool)
    )
    pool = np.flatnonzero(carries_majority & ~protected)

    quota = round_half_up(p * dataset.n)
    # at least one row survives
    quota = min(quota, dataset.n - 1)
    if len(pool) <= quota:
        if len(pool) < quota:
            _logger.warning(
                "mlrus: eligible pool of %d is smaller than the quota %d; removing the whole pool",
                len(pool),
                quota,
            )
        removed = pool
    else:
        removed = substream(seed, SAMPLER_STREAM).choice(pool, size=quota, replace=False)

    keep = np.ones(dataset.n, dtype=bool)
    keep[removed] = False
    _logger.info("mlrus: removing %d instances", int((~keep).sum()))
    return dataset.subset(np.flatnonzero(keep))


def mlsmote(
    dataset: MultiLabelDataset,
    k: int = DEFAULT_NEIGHBORS,
    imr_threshold: float = DEFAULT_IMR_THRESHOLD,
    seed: int = 0,
) -> MultiLabelDataset:
    """
    For every minority label and every instance carrying it, interpolate
    towards one of its k nearest neighbors among that label's positives.

    The synthetic label vector keeps a label when more than half of the
    instance and its neighbors carry it. Labels with fewer than two positive
    instances are skipped.
    """
    if k < 1:
        raise ConfigError("k must be at least 1")
    ls = minority_labels(compute_profile(dataset), imr_threshold)
    rng = substream(seed, SAMPLER_STREAM)
    new_X: List[np.ndarray] = []
    new_Y: List[np.ndarray] = []

    for label in ls:
        positives = np.flatnonzero(dataset.Y[:, label])
        if len(positives) < 2:
            _logger.warning(
                "mlsmote: label '%s' has %d positive instance(s); skipped",
                dataset.label_names[label],
                len(positives),
            )
            continue
        k_eff = min(k, len(positives) - 1)
        X_pos = dataset.X[positives]
        Y_pos = dataset.Y[positives]
        # without query points each instance is excluded from its own neighbors
        neighbors = (
            NearestNeighbors(n_neighbors=k_eff, algorithm="brute")
            .fit(X_pos)
            .kneighbors(return_distance=False)
        )
        for s in range(len(positives)):
            group = neighbors[s]
            r = group[rng.integers(k_eff)]
            u = rng.random()
            new_X.append(X_pos[s] + u * (X_pos[r] - X_pos[s]))
            votes = Y_pos[s] + Y_pos[group].sum(axis=0)
            new_Y.append((votes > (k_eff + 1) / 2.0).astype(np.int64))
        _logger.verbose(
            "mlsmote: label '%s' produced %d instances", dataset.label_names[label], len(positives)
        )

    if not new_X:
        _logger.warning("mlsmote: nothing generated; dataset left unchanged")
        return dataset
    return dataset.append_rows(np.vstack(new_X), np.vstack(new_Y))
