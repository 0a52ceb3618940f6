# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import Optional
import logging
import math

import numpy as np

from ..utils import verboselogs
from ..common import (
    DatasetSchemaError,
    DivergedTrainingError,
    INIT_STREAM,
    SHUFFLE_STREAM,
    substream,
)
from ..data_io import FeatureScaler, MultiLabelDataset
from ..neural_core import adam_init, adam_step
from .losses import loss_and_gradients
from .model import AemloModel, cross_modal_scores, init_model
from .options import TrainConfig
from .response import EpochRecord, TrainingHistory
from .thresholds import binarize, calibrate_thresholds, f1_per_label


def _all_finite(arrays) -> bool:
    return all(np.all(np.isfinite(a)) for a in arrays)


class AemloTrainer:
    """
    Trains the encoders and decoders with Adam on shuffled mini-batches and
    recalibrates the label thresholds on the validation set after every epoch.
    """

    _logger: verboselogs.VerboseLogger
    _config: TrainConfig
    _history: TrainingHistory

    def __init__(self, config: TrainConfig):
        self._logger = verboselogs.VerboseLogger(__name__)
        self._logger.addHandler(logging.StreamHandler())
        self._logger.setLevel(config.verbose)
        self._config = config
        self._history = TrainingHistory()

    @property
    def history(self) -> TrainingHistory:
        """Per-epoch records of the last :meth:`fit`."""
        return self._history

    def _mean_validation_f1(self, model: AemloModel, validation_set: MultiLabelDataset) -> float:
        scores = cross_modal_scores(model, validation_set.X)
        predicted = binarize(scores, model.thresholds)
        present = validation_set.Y.sum(axis=0) > 0
        if not present.any():
            return 0.0
        return float(f1_per_label(validation_set.Y, predicted)[present].mean())

    def fit(
        self,
        train_set: MultiLabelDataset,
        validation_set: MultiLabelDataset,
        scaler: Optional[FeatureScaler] = None,
    ) -> AemloModel:
        """
        Train a model.

        Args:
            train_set (MultiLabelDataset): Training rows with unit-range features.
            validation_set (MultiLabelDataset): Rows scaled with the training statistics.
            scaler (Optional[FeatureScaler]): Stored on the model to map generated
                features back to the original scale; identity when omitted.

        Returns:
            AemloModel: Final parameters with the last calibrated thresholds.

        Raises:
            ConfigError: Invalid configuration.
            DatasetSchemaError: Train and validation schemas differ.
            DivergedTrainingError: A batch produced a non-finite loss or gradient.
        """
        self._logger.debug("AemloTrainer.fit ENTER")

        if not train_set.same_schema(validation_set):
            self._logger.error("train and validation schemas differ")
            self._logger.debug("AemloTrainer.fit LEAVE")
            raise DatasetSchemaError("train and validation sets must share a schema")

        self._config.check()
        config = self._config.resolve(train_set.n, train_set.q)
        config.check()
        self._logger.info("train: n=%d d=%d q=%d", train_set.n, train_set.d, train_set.q)
        self._logger.info("validation: n=%d", validation_set.n)
        self._logger.info("config: %s", config.to_json())

        if scaler is None:
            scaler = FeatureScaler.identity(train_set.d)
        model = init_model(
            train_set.d, train_set.q, config, substream(config.seed, INIT_STREAM), scaler
        ).with_schema(train_set)
        state = adam_init(model.parameters(), lr=config.lr)
        shuffle_rng = substream(config.seed, SHUFFLE_STREAM)
        latent = int(config.latent_dim)  # type: ignore
        self._history = TrainingHistory()

        X, Y = train_set.X, train_set.Y.astype(np.float64)
        for epoch in range(1, config.epochs + 1):
            order = shuffle_rng.permutation(train_set.n)
            sums = np.zeros(4)
            batches = 0
            for batch, start in enumerate(range(0, train_set.n, config.batch_size)):
                idx = order[start : start + config.batch_size]
                if len(idx) < latent:
                    self._logger.spam("epoch %d: dropping trailing batch of %d", epoch, len(idx))
                    continue
                terms, grads = loss_and_gradients(model, X[idx].T, Y[idx].T, config)
                if not (math.isfinite(terms.total) and _all_finite(grads)):
                    self._logger.error("loss diverged at epoch %d, batch %d", epoch, batch)
                    self._logger.debug("AemloTrainer.fit LEAVE")
                    raise DivergedTrainingError(
                        f"non-finite loss {terms.total}", epoch=epoch, batch=batch
                    )
                params, state = adam_step(state, model.parameters(), grads)
                if not _all_finite(params):
                    self._logger.error("parameters diverged at epoch %d, batch %d", epoch, batch)
                    self._logger.debug("AemloTrainer.fit LEAVE")
                    raise DivergedTrainingError(
                        "non-finite parameters after update", epoch=epoch, batch=batch
                    )
                model = model.with_parameters(params)
                sums += (terms.phi, terms.psi, terms.gamma, terms.total)
                batches += 1
                self._logger.spam("epoch %d batch %d: total %.6g", epoch, batch, terms.total)

            model = model.with_thresholds(calibrate_thresholds(model, validation_set))
            phi, psi, gamma, total = (sums / max(batches, 1)).tolist()
            record = EpochRecord(
                epoch=epoch,
                phi=phi,
                psi=psi,
                gamma=gamma,
                total=total,
                mean_val_f1=self._mean_validation_f1(model, validation_set),
            )
            self._history.epochs.append(record)
            self._logger.verbose(
                "epoch %d: total %.6g (phi %.6g, psi %.6g, gamma %.6g), val F1 %.4f",
                epoch, total, phi, psi, gamma, record.mean_val_f1,
            )

        self._logger.notice("fit succeeded")
        self._logger.debug("AemloTrainer.fit LEAVE")
        return model


def train(
    train_set: MultiLabelDataset,
    validation_set: MultiLabelDataset,
    config: TrainConfig,
    scaler: Optional[FeatureScaler] = None,
) -> AemloModel:
    """
    Train a model with :class:`AemloTrainer`; see :meth:`AemloTrainer.fit`.
    """
    return AemloTrainer(config).fit(train_set, validation_set, scaler)
