# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import List, Sequence
import logging

import numpy as np

from ..utils import verboselogs
from ..common import (
    DatasetSchemaError,
    GenerationStarvationError,
    NothingToSampleError,
    SAMPLER_STREAM,
    ShapeMismatchError,
    substream,
)
from ..data_io import MultiLabelDataset
from ..imbalance import compute_profile, minority_instances, minority_labels
from ..aemlo import AemloModel, binarize, decode_features, decode_label_scores, encode_features
from .options import SamplingConfig
from .response import SamplingResult, SyntheticInstance


class AemloSampler:
    """
    Decodes minority instances of the training set through the feature
    encoder into new feature and label vectors.
    """

    _logger: verboselogs.VerboseLogger
    _config: SamplingConfig

    def __init__(self, config: SamplingConfig):
        self._logger = verboselogs.VerboseLogger(__name__)
        self._logger.addHandler(logging.StreamHandler())
        self._logger.setLevel(config.verbose)
        self._config = config

    def generate_with_report(
        self, model: AemloModel, train_set: MultiLabelDataset
    ) -> SamplingResult:
        """
        Generate ``round(p * n)`` instances.

        Each attempt draws a seed uniformly from the minority instances,
        decodes its features with the feature decoder and its labels with the
        label decoder plus thresholds, and rejects the candidate when no label
        is on.

        Args:
            model (AemloModel): A model trained on ``train_set``'s schema.
            train_set (MultiLabelDataset): Training rows in the original scale.

        Returns:
            SamplingResult: Instances and counts.

        Raises:
            NothingToSampleError: No minority labels at the configured threshold.
            GenerationStarvationError: The attempt budget ran out.
            ShapeMismatchError: The model has another number of features or labels.
            DatasetSchemaError: The model was trained on other feature or label names.
        """
        self._logger.debug("AemloSampler.generate_with_report ENTER")

        try:
            model.check_schema(train_set)
        except (ShapeMismatchError, DatasetSchemaError):
            self._logger.error("model does not fit the dataset")
            self._logger.debug("AemloSampler.generate_with_report LEAVE")
            raise

        num = self._config.num(train_set.n)
        self._config.check(num)
        budget = self._config.attempt_budget(num)

        profile = compute_profile(train_set)
        ls = minority_labels(profile, self._config.imr_threshold)
        if num == 0:
            self._logger.notice("p * n rounds to 0; nothing generated")
            self._logger.debug("AemloSampler.generate_with_report LEAVE")
            return SamplingResult(
                instances=[],
                accepted=0,
                rejected_all_zero=0,
                attempts=0,
                minority_labels=ls,
                minority_instances=minority_instances(train_set, ls),
            )
        if not ls:
            self._logger.warning("no minority labels at ImR threshold %g", self._config.imr_threshold)
            self._logger.debug("AemloSampler.generate_with_report LEAVE")
            raise NothingToSampleError()
        pool = minority_instances(train_set, ls)
        self._logger.info("minority labels: %s", ls)
        self._logger.info("minority instances: %d, num: %d, budget: %d", len(pool), num, budget)

        # the model is fixed, so every seed decodes to the same candidate
        latent = encode_features(model, model.scaler.transform(train_set.X[pool]))
        features = model.scaler.inverse_transform(decode_features(model, latent))
        labels = binarize(decode_label_scores(model, latent), model.thresholds)

        rng = substream(self._config.seed, SAMPLER_STREAM)
        instances: List[SyntheticInstance] = []
        attempts = 0
        rejected = 0
        while len(instances) < num:
            if attempts >= budget:
                self._logger.error("attempt budget exhausted after %d attempts", attempts)
                self._logger.debug("AemloSampler.generate_with_report LEAVE")
                raise GenerationStarvationError(
                    f"accepted {len(instances)} of {num} requested instances",
                    attempts=attempts,
                    accepted=len(instances),
                )
            attempts += 1
            slot = int(rng.integers(len(pool)))
            if not labels[slot].any():
                rejected += 1
                self._logger.spam("rejected all-zero candidate from seed %d", pool[slot])
                continue
            instances.append(
                SyntheticInstance(
                    x=features[slot].copy(), y=labels[slot].copy(), seed_index=pool[slot]
                )
            )

        result = SamplingResult(
            instances=instances,
            accepted=len(instances),
            rejected_all_zero=rejected,
            attempts=attempts,
            minority_labels=ls,
            minority_instances=pool,
        )
        self._logger.verbose(
            "accepted %d, rejected %d, attempts %d", result.accepted, rejected, attempts
        )
        self._logger.notice("generate succeeded")
        self._logger.debug("AemloSampler.generate_with_report LEAVE")
        return result

    def generate(self, model: AemloModel, train_set: MultiLabelDataset) -> List[SyntheticInstance]:
        """The instances of :meth:`generate_with_report`."""
        return self.generate_with_report(model, train_set).instances


def generate(
    model: AemloModel, train_set: MultiLabelDataset, config: SamplingConfig
) -> List[SyntheticInstance]:
    """
    Generate synthetic minority instances; see :meth:`AemloSampler.generate_with_report`.
    """
    return AemloSampler(config).generate(model, train_set)


def augment(
    dataset: MultiLabelDataset, synthetic: Sequence[SyntheticInstance]
) -> MultiLabelDataset:
    """
    Append synthetic instances after the rows of ``dataset``, in order.

    Raises:
        ShapeMismatchError: An instance has the wrong number of features or labels.
    """
    if not synthetic:
        return dataset
    X = np.vstack([np.atleast_2d(instance.x) for instance in synthetic])
    Y = np.vstack([np.atleast_2d(instance.y) for instance in synthetic])
    return dataset.append_rows(X, Y)
