# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import json
import logging
import os
import time
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..utils import verboselogs
from ..common import (
    BaseResponse,
    ClassifierKind,
    ConfigError,
    DatasetFormat,
    NothingToSampleError,
    SamplerKind,
)
from ..data_io import (
    DatasetSplit,
    MultiLabelDataset,
    apply_scaler,
    infer_format,
    load_label_names,
    normalize_features,
    read_dataset,
    split,
    write_dataset_file,
)
from ..imbalance import StatsReport, compute_profile, minority_labels, stats_report
from ..aemlo import AemloModel, AemloTrainer, TrainingHistory, load_model, save_model, write_loss_log
from ..evaluation import EvalReport, MetricDelta, evaluate, train_classifier
from ..sampler import AemloSampler, Provenance, augment, mlros, mlrus, mlsmote
from .options import RunConfig
from .response import LeakageAudit, PipelineReport

RESOLVED_CONFIG = "resolved_config.json"
MODEL_FILE = "model.json"
LOSS_LOG = "loss_log.csv"
PROVENANCE = "provenance.json"
STATS_REPORT = "stats.json"
EVAL_REPORT = "eval_report.json"
PIPELINE_REPORT = "pipeline_report.json"


class CommandRunner:
    """
    Runs the CLI workflows for one resolved :class:`RunConfig`, writing
    every artifact into ``config.out``.
    """

    _logger: verboselogs.VerboseLogger
    _config: RunConfig

    def __init__(self, config: RunConfig):
        self._logger = verboselogs.VerboseLogger(__name__)
        self._logger.addHandler(logging.StreamHandler())
        self._logger.setLevel(config.verbose)
        self._config = config

    # output helpers

    def _path(self, name: str) -> str:
        os.makedirs(self._config.out, exist_ok=True)
        return os.path.join(self._config.out, name)

    def _write_text(self, name: str, text: str) -> str:
        path = self._path(name)
        with open(path, "w", encoding="utf-8", newline="") as file:
            file.write(text)
        self._logger.info("wrote %s", path)
        return path

    def _write_json(self, name: str, response: BaseResponse) -> str:
        return self._write_text(name, response.to_strict_json(indent=2) + "\n")

    def write_resolved_config(self) -> str:
        """Materialized settings of this run."""
        return self._write_text(
            RESOLVED_CONFIG, json.dumps(self._config.to_dict(), indent=2, sort_keys=True) + "\n"
        )

    # input helpers

    def _label_names(self) -> Optional[List[str]]:
        if self._config.labels:
            return load_label_names(self._config.labels)
        return None

    def _format_of(self, path: str) -> DatasetFormat:
        explicit = self._config.dataset_format()
        return explicit if explicit is not None else infer_format(path)

    def _read(self, path: str) -> MultiLabelDataset:
        names = self._label_names()
        if names is None and self._config.label_count is None:
            raise ConfigError(f"{path}: pass --labels or --label-count to identify label columns")
        dataset = read_dataset(
            path, self._format_of(path), label_names=names, label_count=self._config.label_count
        )
        self._logger.info("read %s: n=%d d=%d q=%d", path, dataset.n, dataset.d, dataset.q)
        return dataset

    def load_input(self) -> MultiLabelDataset:
        return self._read(str(self._config.input))

    def _split(self, dataset: MultiLabelDataset, test_fraction: Optional[float] = None) -> DatasetSplit:
        test = self._config.test_frac if test_fraction is None else test_fraction
        return split(dataset, self._config.val_frac, test, self._config.seed)

    # building blocks

    def train_model(
        self, train_rows: MultiLabelDataset, validation_rows: MultiLabelDataset
    ) -> Tuple[AemloModel, TrainingHistory]:
        """
        Scale with training statistics and fit the encoder/decoder model.
        """
        train_scaled, scaler = normalize_features(train_rows)
        validation_scaled = apply_scaler(validation_rows, scaler)
        trainer = AemloTrainer(self._config.train_config())
        model = trainer.fit(train_scaled, validation_scaled, scaler)
        return model, trainer.history

    def resample(
        self,
        train_rows: MultiLabelDataset,
        validation_rows: Optional[MultiLabelDataset],
        timings: Dict[str, float],
    ) -> Tuple[MultiLabelDataset, Provenance, List[int]]:
        """
        Apply the configured sampler to ``train_rows``.

        Returns:
            Tuple[MultiLabelDataset, Provenance, List[int]]: The resampled
            rows, the provenance record and the generation seed rows (AEMLO only).

        Raises:
            NothingToSampleError: AEMLO was asked for instances but there are
                no minority labels; raised before any training.
        """
        config = self._config
        kind = SamplerKind(config.sampler)
        profile = compute_profile(train_rows)
        provenance = Provenance(
            method=str(kind),
            p=config.p,
            num=config.sampling_config().num(train_rows.n),
            seed=config.seed,
            minority_labels=minority_labels(profile, config.imr_threshold),
            n_before=train_rows.n,
            mean_ir_before=profile.mean_ir,
        )
        seeds: List[int] = []

        if kind == SamplerKind.AEMLO:
            if provenance.num > 0 and not provenance.minority_labels:
                self._logger.warning(
                    "no minority labels at ImR threshold %g", config.imr_threshold
                )
                raise NothingToSampleError()
            start = time.perf_counter()
            if config.model:
                with open(config.model, "r", encoding="utf-8") as file:
                    model = load_model(file.read())
            else:
                if validation_rows is None:
                    parts = self._split(train_rows, test_fraction=0.0)
                    train_part, validation_rows = parts.train, parts.validation
                else:
                    train_part = train_rows
                model, _ = self.train_model(train_part, validation_rows)
            timings["sampler_training"] = time.perf_counter() - start

            start = time.perf_counter()
            result = AemloSampler(config.sampling_config()).generate_with_report(model, train_rows)
            timings["generation"] = time.perf_counter() - start
            resampled = augment(train_rows, result.instances)
            provenance.accepted = result.accepted
            provenance.rejected_all_zero = result.rejected_all_zero
            provenance.attempts = result.attempts
            seeds = [instance.seed_index for instance in result.instances]
        else:
            start = time.perf_counter()
            if kind == SamplerKind.MLROS:
                resampled = mlros(train_rows, config.p, config.imr_threshold, config.seed)
            elif kind == SamplerKind.MLRUS:
                resampled = mlrus(train_rows, config.p, config.imr_threshold, config.seed)
            elif kind == SamplerKind.MLSMOTE:
                resampled = mlsmote(train_rows, config.smote_k, config.imr_threshold, config.seed)
                provenance.k = config.smote_k
                provenance.num = resampled.n - train_rows.n
            else:
                resampled = train_rows
                provenance.num = 0
            timings["generation"] = time.perf_counter() - start
            # rows added, or removed for mlrus
            provenance.accepted = abs(resampled.n - train_rows.n)

        provenance.n_after = resampled.n
        provenance.mean_ir_after = compute_profile(resampled).mean_ir
        self._logger.verbose("provenance: %s", provenance.to_json())
        return resampled, provenance, seeds

    def _classifier_config(self):
        if ClassifierKind(self._config.classifier) == ClassifierKind.BR:
            return self._config.br_config()
        return self._config.mlknn_config()

    def _evaluate(self, train_rows: MultiLabelDataset, test_rows: MultiLabelDataset) -> EvalReport:
        classifier = train_classifier(self._config.classifier, train_rows, self._classifier_config())
        return evaluate(classifier, test_rows)

    # commands

    def cmd_stats(self) -> StatsReport:
        """Imbalance profile and minority labels of the input."""
        self._logger.debug("CommandRunner.cmd_stats ENTER")
        report = stats_report(compute_profile(self.load_input()), self._config.imr_threshold)
        self._write_json(STATS_REPORT, report)
        self._logger.notice("stats succeeded")
        self._logger.debug("CommandRunner.cmd_stats LEAVE")
        return report

    def cmd_train(self) -> AemloModel:
        """Train on the training split; writes the model and the loss log."""
        self._logger.debug("CommandRunner.cmd_train ENTER")
        parts = self._split(self.load_input())
        model, history = self.train_model(parts.train, parts.validation)
        self._write_text(MODEL_FILE, save_model(model))
        self._write_text(LOSS_LOG, write_loss_log(history))
        self._logger.notice("train succeeded")
        self._logger.debug("CommandRunner.cmd_train LEAVE")
        return model

    def cmd_sample(self) -> Provenance:
        """Resample the whole input; writes the new dataset and its provenance."""
        self._logger.debug("CommandRunner.cmd_sample ENTER")
        dataset = self.load_input()
        resampled, provenance, _ = self.resample(dataset, None, {})
        fmt = self._format_of(str(self._config.input))
        write_dataset_file(resampled, self._path(f"augmented.{fmt}"), fmt)
        self._write_json(PROVENANCE, provenance)
        self._logger.notice("sample succeeded")
        self._logger.debug("CommandRunner.cmd_sample LEAVE")
        return provenance

    def cmd_eval(self) -> EvalReport:
        """
        Train the classifier on the input (minus the test split unless
        ``--test-input`` is given) and evaluate it.
        """
        self._logger.debug("CommandRunner.cmd_eval ENTER")
        dataset = self.load_input()
        if self._config.test_input:
            train_rows, test_rows = dataset, self._read(self._config.test_input)
            if not train_rows.same_schema(test_rows):
                raise ConfigError("test input does not share the input's feature and label names")
        else:
            parts = self._split(dataset)
            if parts.test is None:
                raise ConfigError("--test-frac leaves no test rows; raise it or pass --test-input")
            train_rows = dataset.subset(sorted(parts.train_index + parts.validation_index))
            test_rows = parts.test
        report = self._evaluate(train_rows, test_rows)
        self._write_json(EVAL_REPORT, report)
        self._logger.notice("eval succeeded")
        self._logger.debug("CommandRunner.cmd_eval LEAVE")
        return report

    def cmd_pipeline(self) -> PipelineReport:
        """
        Split once, then evaluate the classifier trained on the original and
        on the resampled training split against the same test split.
        """
        self._logger.debug("CommandRunner.cmd_pipeline ENTER")
        timings: Dict[str, float] = {}
        dataset = self.load_input()

        start = time.perf_counter()
        parts = self._split(dataset)
        timings["split"] = time.perf_counter() - start
        if parts.test is None:
            raise ConfigError("pipeline needs --test-frac > 0 leaving at least one test row")

        start = time.perf_counter()
        baseline = self._evaluate(parts.train, parts.test)
        timings["baseline_classifier"] = time.perf_counter() - start

        resampled, provenance, seeds = self.resample(parts.train, parts.validation, timings)

        start = time.perf_counter()
        augmented = self._evaluate(resampled, parts.test)
        timings["augmented_classifier"] = time.perf_counter() - start

        indices = [set(parts.train_index), set(parts.validation_index), set(parts.test_index)]
        audit = LeakageAudit(
            train_rows=parts.train.n,
            validation_rows=parts.validation.n,
            test_rows=parts.test.n,
            synthetic_rows=max(resampled.n - parts.train.n, 0),
            splits_disjoint=not (
                indices[0] & indices[1] or indices[0] & indices[2] or indices[1] & indices[2]
            ),
            seeds_from_train=all(0 <= s < parts.train.n for s in seeds),
            test_untouched=parts.test.equals(
                dataset.subset(np.asarray(parts.test_index, dtype=np.int64))
            ),
        )
        report = PipelineReport(
            baseline=baseline,
            augmented=augmented,
            delta=MetricDelta.between(baseline, augmented),
            wall_clock_seconds=timings,
            provenance=provenance,
            leakage_audit=audit,
        )
        self._write_json(PIPELINE_REPORT, report)
        self._logger.notice("pipeline succeeded")
        self._logger.debug("CommandRunner.cmd_pipeline LEAVE")
        return report
