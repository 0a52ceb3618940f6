# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import List, Optional

from dataclasses import dataclass, field

import numpy as np

from ..common import BaseResponse, ShapeMismatchError


@dataclass(frozen=True, eq=False)
class Prediction:
    """
    Classifier output for n instances.

    Attributes:
        scores (np.ndarray): n x q real scores, higher meaning more likely.
        labels (np.ndarray): n x q binary decisions.
    """

    scores: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        scores = np.asarray(self.scores, dtype=np.float64)
        labels = np.asarray(self.labels, dtype=np.int64)
        if scores.shape != labels.shape or scores.ndim != 2:
            raise ShapeMismatchError(
                f"scores {scores.shape} and labels {labels.shape} must be equal n x q matrices"
            )
        object.__setattr__(self, "scores", scores)
        object.__setattr__(self, "labels", labels)


@dataclass
class EvalReport(BaseResponse):  # pylint: disable=too-many-instance-attributes
    """
    Metrics of one classifier on one test set.

    ``macro_f`` averages ``per_label_f`` over every label; ``macro_auc``
    averages the defined entries of ``per_label_auc``, whose undefined
    entries (labels listed in ``skipped_labels``) are None.
    """

    classifier: str = ""
    n_test: int = 0
    macro_f: float = 0.0
    macro_auc: float = 0.0
    ranking_loss: float = 0.0
    per_label_f: List[float] = field(default_factory=list)
    per_label_auc: List[Optional[float]] = field(default_factory=list)
    skipped_labels: List[int] = field(default_factory=list)
    label_names: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)


@dataclass
class MetricDelta(BaseResponse):
    """Augmented minus baseline."""

    macro_f: float = 0.0
    macro_auc: float = 0.0
    ranking_loss: float = 0.0

    @classmethod
    def between(cls, baseline: EvalReport, augmented: EvalReport) -> "MetricDelta":
        return cls(
            macro_f=augmented.macro_f - baseline.macro_f,
            macro_auc=augmented.macro_auc - baseline.macro_auc,
            ranking_loss=augmented.ranking_loss - baseline.ranking_loss,
        )
