# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import Any, List, Optional, Union

import numpy as np
from typing_extensions import Protocol

from ..common import ClassifierKind, ShapeMismatchError
from ..data_io import MultiLabelDataset
from ..utils import get_logger
from .binary_relevance import BR_NOTE, BRModel, BinaryRelevanceTrainer
from .metrics import macro_auc, per_label_auc, per_label_f1, ranking_loss_metric
from .mlknn import MLkNNModel, MLkNNTrainer
from .options import BRConfig, MLkNNConfig
from .response import EvalReport, Prediction

_logger = get_logger(__name__)


class Classifier(Protocol):
    """Anything that scores and labels feature rows."""

    name: str

    def predict(self, X: np.ndarray) -> Prediction:
        ...


def predict(model: Union[BRModel, MLkNNModel, Classifier], X: np.ndarray) -> Prediction:
    """Run a trained classifier on n x d feature rows."""
    return model.predict(X)


def train_classifier(
    kind: Union[ClassifierKind, str],
    train_set: MultiLabelDataset,
    config: Optional[Union[BRConfig, MLkNNConfig]] = None,
) -> Any:
    """
    Train one of the built-in classifiers with its default configuration
    unless ``config`` is given.
    """
    kind = ClassifierKind(str(kind).lower())
    if kind == ClassifierKind.BR:
        br_config = config if isinstance(config, BRConfig) else BRConfig()
        return BinaryRelevanceTrainer(br_config).fit(train_set)
    knn_config = config if isinstance(config, MLkNNConfig) else MLkNNConfig()
    return MLkNNTrainer(knn_config).fit(train_set)


def evaluate(classifier: Classifier, test_set: MultiLabelDataset) -> EvalReport:
    """
    Predict ``test_set`` and compute Macro-F, Macro-AUC and ranking loss.

    Raises:
        UndefinedMetricError: Every label is constant on the test set, or no
            instance has both a positive and a negative label.
    """
    prediction = predict(classifier, test_set.X)
    if prediction.scores.shape != test_set.Y.shape:
        raise ShapeMismatchError(
            f"prediction {prediction.scores.shape} does not match test labels {test_set.Y.shape}"
        )
    f1 = per_label_f1(prediction.labels, test_set.Y)
    aucs, skipped = per_label_auc(prediction.scores, test_set.Y)
    if skipped:
        _logger.warning(
            "Macro-AUC skips labels constant in the test set: %s",
            ", ".join(test_set.label_names[j] for j in skipped),
        )

    notes: List[str] = []
    name = getattr(classifier, "name", type(classifier).__name__)
    if name == "br":
        notes.append(BR_NOTE)
    return EvalReport(
        classifier=name,
        n_test=test_set.n,
        macro_f=float(f1.mean()),
        macro_auc=macro_auc(prediction.scores, test_set.Y),
        ranking_loss=ranking_loss_metric(prediction.scores, test_set.Y),
        per_label_f=f1.tolist(),
        per_label_auc=aucs,
        skipped_labels=skipped,
        label_names=list(test_set.label_names),
        notes=notes,
    )
