# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import Optional
import dataclasses
import logging

from dataclasses import dataclass, field
from dataclasses_json import config as dataclass_config

from ..utils import verboselogs
from ..common import BaseResponse, ConfigError

# alpha and beta were tuned within [2^-4, 2^4]
TUNED_WEIGHT_RANGE = (2.0**-4, 2.0**4)


@dataclass
class TrainConfig(BaseResponse):  # pylint: disable=too-many-instance-attributes
    """
    Hyperparameters of encoder/decoder training.

    Attributes:
        alpha (float): Weight of the feature reconstruction term.
        beta (float): Weight of the label ranking term.
        lambda_ortho (float): Weight of the orthonormality penalties in the embedding term.
        lambda_sim (float): Weight of the pairwise-distance term inside the feature term.
        latent_dim (Optional[int]): Latent width l; None resolves to min(32, q, batch_size).
        hidden_dim (int): Width of the hidden layer of both encoders.
        epochs (int): Passes over the training set.
        batch_size (int): Instances per batch; capped at the training size.
        lr (float): Adam learning rate.
        leaky_slope (float): Negative slope of the leaky ReLU.
        seed (int): Root seed for initialization and shuffling.
        verbose (int): Log level of the trainer.
    """

    alpha: float = 1.0
    beta: float = 1.0
    lambda_ortho: float = 1.0
    lambda_sim: float = 1.0
    latent_dim: Optional[int] = field(
        default=None, metadata=dataclass_config(exclude=lambda f: f is None)
    )
    hidden_dim: int = 512
    epochs: int = 100
    batch_size: int = 64
    lr: float = 1e-3
    leaky_slope: float = 0.01
    seed: int = 0
    verbose: int = field(default=verboselogs.WARNING)

    def resolve(self, n: int, q: int) -> "TrainConfig":
        """
        Copy with ``batch_size`` capped at ``n`` and ``latent_dim`` filled in.
        """
        batch_size = max(1, min(self.batch_size, n))
        latent_dim = self.latent_dim
        if latent_dim is None:
            latent_dim = min(32, q, batch_size)
        return dataclasses.replace(self, batch_size=batch_size, latent_dim=latent_dim)

    def check(self):
        """
        Validate the configuration.

        Raises:
            ConfigError: A value violates its range.
        """
        if self.alpha <= 0 or self.beta <= 0:
            raise ConfigError("alpha and beta must be positive")
        if self.lambda_ortho < 0 or self.lambda_sim < 0:
            raise ConfigError("lambda_ortho and lambda_sim must be non-negative")
        if self.epochs < 1:
            raise ConfigError("epochs must be at least 1")
        if self.batch_size < 1:
            raise ConfigError("batch_size must be at least 1")
        if self.hidden_dim < 1:
            raise ConfigError("hidden_dim must be at least 1")
        if self.latent_dim is not None:
            if self.latent_dim < 1:
                raise ConfigError("latent_dim must be at least 1")
            if self.latent_dim > self.batch_size:
                raise ConfigError(
                    f"latent_dim {self.latent_dim} exceeds batch_size {self.batch_size}; "
                    "the orthonormality penalty needs a batch Gram matrix of rank l"
                )
        if self.lr <= 0:
            raise ConfigError("lr must be positive")
        if not 0 <= self.leaky_slope < 1:
            raise ConfigError("leaky_slope must lie in [0, 1)")

        logger = verboselogs.VerboseLogger(__name__)
        logger.addHandler(logging.StreamHandler())
        logger.setLevel(verboselogs.WARNING)
        low, high = TUNED_WEIGHT_RANGE
        for name, value in (("alpha", self.alpha), ("beta", self.beta)):
            if not low <= value <= high:
                logger.warning("%s=%g is outside the tuned range [%g, %g]", name, value, low, high)

        return True
