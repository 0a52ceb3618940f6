# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import logging
import math

from dataclasses import dataclass

import numpy as np

from ..utils import verboselogs
from ..common import CLASSIFIER_STREAM, DivergedTrainingError, ShapeMismatchError, substream
from ..data_io import MultiLabelDataset
from ..neural_core import sigmoid
from .options import BRConfig
from .response import Prediction

BR_NOTE = (
    "BR base learner is L2-regularized logistic regression (full-batch gradient "
    "descent) in place of an SVM"
)


@dataclass(frozen=True, eq=False)
class BRModel:
    """
    One logistic regression per label over standardized features.

    Attributes:
        W (np.ndarray): d x q weights.
        b (np.ndarray): Length-q biases.
        mean (np.ndarray): Feature means of the training set.
        scale (np.ndarray): Feature standard deviations (1 for constant features).
        constant (np.ndarray): Length-q, -1 for trained labels, else the constant 0/1 value.
    """

    W: np.ndarray
    b: np.ndarray
    mean: np.ndarray
    scale: np.ndarray
    constant: np.ndarray

    name = "br"

    def predict(self, X: np.ndarray) -> Prediction:
        """
        Per-label probabilities, thresholded at 0.5. Constant labels score and
        predict their constant.
        """
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        if X.shape[1] != self.W.shape[0]:
            raise ShapeMismatchError(f"model expects {self.W.shape[0]} features, got {X.shape[1]}")
        scores = sigmoid(((X - self.mean) / self.scale) @ self.W + self.b)
        fixed = self.constant >= 0
        scores[:, fixed] = self.constant[fixed].astype(np.float64)
        return Prediction(scores=scores, labels=(scores >= 0.5).astype(np.int64))


class BinaryRelevanceTrainer:
    """
    Fits all per-label logistic regressions at once; labels are independent,
    so the vectorized update equals fitting them one by one.
    """

    _logger: verboselogs.VerboseLogger
    _config: BRConfig

    def __init__(self, config: BRConfig):
        self._logger = verboselogs.VerboseLogger(__name__)
        self._logger.addHandler(logging.StreamHandler())
        self._logger.setLevel(config.verbose)
        self._config = config

    def fit(self, train_set: MultiLabelDataset) -> BRModel:
        """
        Raises:
            DivergedTrainingError: The loss became non-finite.
        """
        self._logger.debug("BinaryRelevanceTrainer.fit ENTER")
        config = self._config
        config.check()
        self._logger.info("train: n=%d d=%d q=%d", train_set.n, train_set.d, train_set.q)
        self._logger.info("config: %s", config.to_json())

        X, Y = train_set.X, train_set.Y.astype(np.float64)
        mean = X.mean(axis=0)
        scale = X.std(axis=0)
        scale = np.where(scale > 0, scale, 1.0)
        Z = (X - mean) / scale

        positives = Y.sum(axis=0)
        constant = np.full(train_set.q, -1, dtype=np.int64)
        constant[positives == 0] = 0
        constant[positives == train_set.n] = 1

        rng = substream(config.seed, CLASSIFIER_STREAM)
        W = rng.normal(0.0, 0.01, size=(train_set.d, train_set.q))
        b = np.zeros(train_set.q)
        n = float(train_set.n)
        for epoch in range(1, config.epochs + 1):
            logits = Z @ W + b
            loss = np.mean(np.logaddexp(0.0, logits) - Y * logits, axis=0)
            loss = loss + 0.5 * config.reg_strength * np.sum(W * W, axis=0)
            total = float(loss.sum())
            if not math.isfinite(total):
                self._logger.error("BR loss diverged at epoch %d", epoch)
                self._logger.debug("BinaryRelevanceTrainer.fit LEAVE")
                raise DivergedTrainingError("non-finite BR loss", epoch=epoch, batch=0)
            residual = (sigmoid(logits) - Y) / n
            W = W - config.lr * (Z.T @ residual + config.reg_strength * W)
            b = b - config.lr * residual.sum(axis=0)
            if epoch == 1 or epoch == config.epochs:
                self._logger.verbose("epoch %d: summed log-loss %.6g", epoch, total)

        model = BRModel(W=W, b=b, mean=mean, scale=scale, constant=constant)
        self._logger.notice("fit succeeded")
        self._logger.debug("BinaryRelevanceTrainer.fit LEAVE")
        return model


def train_br(
    train_set: MultiLabelDataset,
    reg_strength: float = 1e-4,
    epochs: int = 500,
    seed: int = 0,
    lr: float = 0.5,
) -> BRModel:
    """
    Train binary relevance with logistic regression base learners.
    """
    config = BRConfig(reg_strength=reg_strength, epochs=epochs, lr=lr, seed=seed)
    return BinaryRelevanceTrainer(config).fit(train_set)
