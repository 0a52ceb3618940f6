# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import json
import os
from typing import Any, Dict, Optional

from dataclasses import dataclass, field, fields

from ..utils import verboselogs
from ..common import BaseResponse, ClassifierKind, ConfigError, DatasetFormat, SamplerKind
from ..aemlo import TrainConfig
from ..evaluation import BRConfig, MLkNNConfig
from ..options import OptionsFromEnv
from ..sampler import DEFAULT_NEIGHBORS, SamplingConfig


@dataclass
class RunConfig(BaseResponse):  # pylint: disable=too-many-instance-attributes
    """
    Every setting of a CLI run. Written to ``resolved_config.json`` with all
    defaults filled in; passing that file back with ``--config`` repeats the run.
    """

    # files
    input: Optional[str] = None
    labels: Optional[str] = None
    label_count: Optional[int] = None
    format: Optional[str] = None
    out: str = "mlbalance_out"
    test_input: Optional[str] = None
    model: Optional[str] = None

    # training
    alpha: float = 1.0
    beta: float = 1.0
    lambda_ortho: float = 1.0
    lambda_sim: float = 1.0
    latent_dim: Optional[int] = None
    hidden_dim: int = 512
    epochs: int = 100
    batch_size: int = 64
    lr: float = 1e-3
    leaky_slope: float = 0.01

    # sampling
    p: float = 0.1
    imr_threshold: float = 10.0
    max_attempts: Optional[int] = None
    sampler: str = str(SamplerKind.AEMLO)
    smote_k: int = DEFAULT_NEIGHBORS

    # evaluation
    classifier: str = str(ClassifierKind.BR)
    k: int = 10
    reg: float = 1e-4
    br_epochs: int = 500

    # splitting and reproducibility
    val_frac: float = 0.2
    test_frac: float = 0.2
    seed: int = 0
    verbose: int = field(default=verboselogs.WARNING)

    def train_config(self) -> TrainConfig:
        return TrainConfig(
            alpha=self.alpha,
            beta=self.beta,
            lambda_ortho=self.lambda_ortho,
            lambda_sim=self.lambda_sim,
            latent_dim=self.latent_dim,
            hidden_dim=self.hidden_dim,
            epochs=self.epochs,
            batch_size=self.batch_size,
            lr=self.lr,
            leaky_slope=self.leaky_slope,
            seed=self.seed,
            verbose=self.verbose,
        )

    def sampling_config(self) -> SamplingConfig:
        return SamplingConfig(
            p=self.p,
            imr_threshold=self.imr_threshold,
            max_attempts=self.max_attempts,
            seed=self.seed,
            verbose=self.verbose,
        )

    def br_config(self) -> BRConfig:
        return BRConfig(
            reg_strength=self.reg, epochs=self.br_epochs, seed=self.seed, verbose=self.verbose
        )

    def mlknn_config(self) -> MLkNNConfig:
        return MLkNNConfig(k=self.k, verbose=self.verbose)

    def dataset_format(self) -> Optional[DatasetFormat]:
        """The explicit format, or None to infer it from the file extension."""
        return DatasetFormat(self.format) if self.format else None

    def check(self, needs_input: bool = True):
        """
        Validate values and referenced files.

        Raises:
            ConfigError: A value is out of range or a file does not exist.
        """
        if needs_input and not self.input:
            raise ConfigError("--input is required")
        for name in ("input", "labels", "test_input", "model"):
            path = getattr(self, name)
            if path and not os.path.isfile(path):
                raise ConfigError(f"file not found: {path}")
        if self.format is not None and self.format not in [str(f) for f in DatasetFormat]:
            raise ConfigError(f"unknown format '{self.format}'")
        if self.sampler not in [str(s) for s in SamplerKind]:
            raise ConfigError(f"unknown sampler '{self.sampler}'")
        if self.classifier not in [str(c) for c in ClassifierKind]:
            raise ConfigError(f"unknown classifier '{self.classifier}'")
        if self.label_count is not None and self.label_count < 1:
            raise ConfigError("--label-count must be at least 1")
        if self.val_frac < 0 or self.test_frac < 0 or self.val_frac + self.test_frac >= 1:
            raise ConfigError("--val-frac and --test-frac must be non-negative and sum below 1")
        if self.smote_k < 1:
            raise ConfigError("--smote-k must be at least 1")
        self.train_config().check()
        self.sampling_config().check()
        self.br_config().check()
        self.mlknn_config().check()
        return True


_FIELD_NAMES = {f.name for f in fields(RunConfig)}


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Settings from a JSON object file, such as a previous ``resolved_config.json``.

    Raises:
        ConfigError: Missing file, invalid JSON, or unknown keys.
    """
    if not os.path.isfile(path):
        raise ConfigError(f"file not found: {path}")
    with open(path, "r", encoding="utf-8") as file:
        try:
            data = json.load(file)
        except json.JSONDecodeError as err:
            raise ConfigError(f"config file {path} is not valid JSON: {err}") from err
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    unknown = sorted(set(data) - _FIELD_NAMES)
    if unknown:
        raise ConfigError(f"unknown config keys in {path}: {', '.join(unknown)}")
    return data


def resolve_run_config(
    flags: Dict[str, Any], config_path: Optional[str] = None
) -> RunConfig:
    """
    Merge settings: explicit flags over the ``--config`` file over
    ``MLBALANCE_SEED``/``MLBALANCE_LOGGING`` over defaults.

    Args:
        flags (Dict[str, Any]): Flag values; None means "not given".
        config_path (Optional[str]): JSON file of settings.

    Returns:
        RunConfig: The merged configuration (not yet checked).
    """
    env = OptionsFromEnv()
    merged: Dict[str, Any] = RunConfig().to_dict()
    merged["seed"] = env.seed
    merged["verbose"] = env.verbose
    if config_path:
        merged.update(load_config_file(config_path))
    merged.update({k: v for k, v in flags.items() if v is not None and k in _FIELD_NAMES})
    return RunConfig.from_dict(merged)
