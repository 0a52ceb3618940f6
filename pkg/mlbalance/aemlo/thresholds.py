# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import numpy as np

from ..common import ShapeMismatchError
from ..data_io import MultiLabelDataset
from .model import AemloModel, cross_modal_scores

DEFAULT_THRESHOLD = 0.5
_LOWEST_THRESHOLD = float(np.nextafter(0.0, 1.0))
_HIGHEST_THRESHOLD = float(np.nextafter(1.0, 0.0))


def f1_per_label(truths: np.ndarray, predictions: np.ndarray) -> np.ndarray:
    """
    F1 of every column of two n x q binary matrices; 0 where a column has no
    true and no predicted positive.
    """
    truths = np.asarray(truths) > 0
    predictions = np.asarray(predictions) > 0
    tp = np.sum(truths & predictions, axis=0)
    denom = np.sum(truths, axis=0) + np.sum(predictions, axis=0)
    return np.where(denom > 0, 2.0 * tp / np.maximum(denom, 1), 0.0)


def best_threshold(scores: np.ndarray, truths: np.ndarray) -> float:
    """
    The F1-maximizing threshold for one label.

    Candidates are the midpoints between consecutive distinct scores plus
    0.5. Ties go to the candidate nearest 0.5, then to the smaller one. A
    label without positives gets 0.5. The result always lies strictly
    between 0 and 1, also for saturated sigmoid scores.
    """
    scores = np.asarray(scores, dtype=np.float64)
    truths = np.asarray(truths) > 0
    if not truths.any():
        return DEFAULT_THRESHOLD

    distinct = np.unique(scores)
    midpoints = (distinct[:-1] + distinct[1:]) / 2.0
    # midpoints next to 0.0 or 1.0 can round onto the endpoint
    midpoints = np.clip(midpoints, _LOWEST_THRESHOLD, _HIGHEST_THRESHOLD)
    candidates = np.append(midpoints, DEFAULT_THRESHOLD)

    predicted = scores[None, :] >= candidates[:, None]
    tp = np.sum(predicted & truths[None, :], axis=1)
    denom = np.sum(predicted, axis=1) + truths.sum()
    f1 = 2.0 * tp / denom

    best = f1 == f1.max()
    tied = candidates[best]
    # primary key last: distance to 0.5, then the value itself
    order = np.lexsort((tied, np.abs(tied - DEFAULT_THRESHOLD)))
    return float(tied[order[0]])


def calibrate_thresholds(model: AemloModel, validation_set: MultiLabelDataset) -> np.ndarray:
    """
    Per-label thresholds maximizing validation F1 of the cross-modal scores.

    ``validation_set`` holds unit-range features (scaled like the training set).

    Returns:
        np.ndarray: Length-q thresholds.
    """
    if validation_set.q != model.q:
        raise ShapeMismatchError(
            f"validation set has {validation_set.q} labels, model has {model.q}"
        )
    scores = cross_modal_scores(model, validation_set.X)
    Y = validation_set.Y
    return np.array([best_threshold(scores[:, j], Y[:, j]) for j in range(model.q)])


def binarize(scores: np.ndarray, thresholds: np.ndarray) -> np.ndarray:
    """
    1 where a score reaches its label's threshold (``>=``), else 0. Accepts a
    length-q vector or an n x q matrix of scores.
    """
    scores = np.asarray(scores, dtype=np.float64)
    thresholds = np.asarray(thresholds, dtype=np.float64)
    if scores.shape[-1] != thresholds.shape[-1]:
        raise ShapeMismatchError(
            f"{scores.shape[-1]} scores per instance for {thresholds.shape[-1]} thresholds"
        )
    return (scores >= thresholds).astype(np.int64)
