# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from dataclasses import dataclass, field

from ..utils import verboselogs
from ..common import BaseResponse, ConfigError


@dataclass
class BRConfig(BaseResponse):
    """
    Binary relevance with one L2-regularized logistic regression per label,
    fitted by full-batch gradient descent on standardized features.

    Attributes:
        reg_strength (float): L2 penalty on the weights (the bias is not penalized).
        epochs (int): Gradient descent iterations.
        lr (float): Step size.
        seed (int): Root seed of the classifier stream (weight initialization).
        verbose (int): Log level.
    """

    reg_strength: float = 1e-4
    epochs: int = 500
    lr: float = 0.5
    seed: int = 0
    verbose: int = field(default=verboselogs.WARNING)

    def check(self):
        if self.reg_strength < 0:
            raise ConfigError("reg_strength must be non-negative")
        if self.epochs < 1:
            raise ConfigError("BR epochs must be at least 1")
        if self.lr <= 0:
            raise ConfigError("BR lr must be positive")
        return True


@dataclass
class MLkNNConfig(BaseResponse):
    """
    Attributes:
        k (int): Neighbors per query.
        smoothing (float): Laplace smoothing s of priors and posteriors.
        verbose (int): Log level.
    """

    k: int = 10
    smoothing: float = 1.0
    verbose: int = field(default=verboselogs.WARNING)

    def check(self):
        if self.k < 1:
            raise ConfigError("k must be at least 1")
        if self.smoothing <= 0:
            raise ConfigError("smoothing must be positive")
        return True
