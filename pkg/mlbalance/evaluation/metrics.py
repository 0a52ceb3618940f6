# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import List, Optional, Tuple, Union

import numpy as np
from sklearn.metrics import f1_score, roc_auc_score

from ..common import ShapeMismatchError, UndefinedMetricError
from ..aemlo import ranking_loss_exact
from .response import Prediction


def _matched(a: np.ndarray, b: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape or a.ndim != 2:
        raise ShapeMismatchError(f"shapes {a.shape} and {b.shape} must be equal n x q matrices")
    return a, b


def per_label_f1(predicted: np.ndarray, truth: np.ndarray) -> np.ndarray:
    """F1 per label; 0 for labels without true or predicted positives."""
    predicted, truth = _matched(predicted, truth)
    predicted = predicted.astype(np.int64)
    truth = truth.astype(np.int64)
    if truth.shape[1] == 1:
        # a single column is read as a binary target, not an indicator matrix
        value = f1_score(truth[:, 0], predicted[:, 0], average="binary", zero_division=0)
        return np.array([value], dtype=np.float64)
    return np.asarray(
        f1_score(truth, predicted, average=None, zero_division=0), dtype=np.float64
    )


def macro_f(pred: Union[Prediction, np.ndarray], truth: np.ndarray) -> float:
    """Mean per-label F1 over all q labels."""
    labels = pred.labels if isinstance(pred, Prediction) else pred
    return float(per_label_f1(labels, truth).mean())


def per_label_auc(scores: np.ndarray, truth: np.ndarray) -> Tuple[List[Optional[float]], List[int]]:
    """
    ROC AUC per label (ties count one half) and the labels skipped because the
    truth column has no positive or no negative.
    """
    scores, truth = _matched(scores, truth)
    values: List[Optional[float]] = []
    skipped: List[int] = []
    for j in range(truth.shape[1]):
        column = truth[:, j]
        if column.min() == column.max():
            values.append(None)
            skipped.append(j)
            continue
        values.append(float(roc_auc_score(column, scores[:, j])))
    return values, skipped


def macro_auc(scores: np.ndarray, truth: np.ndarray) -> float:
    """
    Mean AUC over labels with both classes present.

    Raises:
        UndefinedMetricError: No label has both classes.
    """
    values, _ = per_label_auc(scores, truth)
    defined = [v for v in values if v is not None]
    if not defined:
        raise UndefinedMetricError("Macro-AUC is undefined: every label is constant in the truth")
    return float(np.mean(defined))


def ranking_loss_metric(scores: np.ndarray, truth: np.ndarray) -> float:
    """
    Ranking loss of n x q classifier scores: the share of positive/negative
    label pairs ordered wrongly (ties count as wrong), averaged over instances
    with both kinds of label.

    Raises:
        UndefinedMetricError: No instance has both a positive and a negative label.
    """
    scores, truth = _matched(scores, truth)
    return ranking_loss_exact(scores.T, truth.T)
