# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import logging

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from ..utils import verboselogs
from ..common import ConfigError, ShapeMismatchError
from ..data_io import MultiLabelDataset
from .options import MLkNNConfig
from .response import Prediction


def _nearest(distances: np.ndarray, k: int) -> np.ndarray:
    # stable sort: equal distances keep the lower training index first
    return np.argsort(distances, axis=1, kind="stable")[:, :k]


@dataclass(frozen=True, eq=False)
class MLkNNModel:
    """
    Multi-label k-nearest neighbors: a Bayesian decision per label from the
    number of neighbors carrying it.

    Attributes:
        X (np.ndarray): Training features.
        Y (np.ndarray): Training labels.
        k (int): Neighbors per query.
        prior1 (np.ndarray): P(label on), length q.
        cond1 (np.ndarray): q x (k+1), P(c neighbors carry the label | label on).
        cond0 (np.ndarray): q x (k+1), P(c neighbors carry the label | label off).
    """

    X: np.ndarray
    Y: np.ndarray
    k: int
    prior1: np.ndarray
    cond1: np.ndarray
    cond0: np.ndarray

    name = "mlknn"

    def neighbor_counts(self, X: np.ndarray) -> np.ndarray:
        """Per query and label, how many of the k nearest training rows carry the label."""
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        if X.shape[1] != self.X.shape[1]:
            raise ShapeMismatchError(f"model expects {self.X.shape[1]} features, got {X.shape[1]}")
        neighbors = _nearest(cdist(X, self.X, metric="euclidean"), self.k)
        return self.Y[neighbors].sum(axis=1)

    def predict(self, X: np.ndarray) -> Prediction:
        """
        Scores are posterior probabilities; a label is on when its posterior
        is at least that of its absence.
        """
        counts = self.neighbor_counts(X)
        labels_idx = np.arange(self.Y.shape[1])
        p1 = self.prior1 * self.cond1[labels_idx, counts]
        p0 = (1.0 - self.prior1) * self.cond0[labels_idx, counts]
        return Prediction(scores=p1 / (p1 + p0), labels=(p1 >= p0).astype(np.int64))


class MLkNNTrainer:
    """
    Estimates smoothed priors and neighbor-count likelihoods from the
    training set, each instance excluded from its own neighborhood.
    """

    _logger: verboselogs.VerboseLogger
    _config: MLkNNConfig

    def __init__(self, config: MLkNNConfig):
        self._logger = verboselogs.VerboseLogger(__name__)
        self._logger.addHandler(logging.StreamHandler())
        self._logger.setLevel(config.verbose)
        self._config = config

    def fit(self, train_set: MultiLabelDataset) -> MLkNNModel:
        """
        Raises:
            ConfigError: ``k`` is not smaller than the training size.
        """
        self._logger.debug("MLkNNTrainer.fit ENTER")
        self._config.check()
        k, s = self._config.k, self._config.smoothing
        n, q = train_set.n, train_set.q
        if k >= n:
            self._logger.error("k=%d needs more than %d training rows", k, n)
            self._logger.debug("MLkNNTrainer.fit LEAVE")
            raise ConfigError(f"k={k} must be smaller than the {n} training instances")
        self._logger.info("train: n=%d q=%d k=%d s=%g", n, q, k, s)

        X, Y = train_set.X, train_set.Y
        prior1 = (s + Y.sum(axis=0)) / (2.0 * s + n)

        distances = cdist(X, X, metric="euclidean")
        np.fill_diagonal(distances, np.inf)
        counts = Y[_nearest(distances, k)].sum(axis=1)

        c1 = np.zeros((q, k + 1))
        c0 = np.zeros((q, k + 1))
        for j in range(q):
            on = Y[:, j] == 1
            c1[j] = np.bincount(counts[on, j], minlength=k + 1)
            c0[j] = np.bincount(counts[~on, j], minlength=k + 1)
        cond1 = (s + c1) / (s * (k + 1) + c1.sum(axis=1, keepdims=True))
        cond0 = (s + c0) / (s * (k + 1) + c0.sum(axis=1, keepdims=True))

        model = MLkNNModel(X=X, Y=Y, k=k, prior1=prior1, cond1=cond1, cond0=cond0)
        self._logger.verbose("priors: %s", np.round(prior1, 4).tolist())
        self._logger.notice("fit succeeded")
        self._logger.debug("MLkNNTrainer.fit LEAVE")
        return model


def train_mlknn(train_set: MultiLabelDataset, k: int = 10, smoothing: float = 1.0) -> MLkNNModel:
    """
    Train MLkNN with Euclidean distance and Laplace smoothing ``smoothing``.
    """
    return MLkNNTrainer(MLkNNConfig(k=k, smoothing=smoothing)).fit(train_set)
