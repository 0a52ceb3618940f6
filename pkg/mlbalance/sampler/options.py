# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import Optional

from dataclasses import dataclass, field
from dataclasses_json import config as dataclass_config

from ..utils import verboselogs
from ..common import BaseResponse, ConfigError, round_half_up

ATTEMPTS_PER_INSTANCE = 100


@dataclass
class SamplingConfig(BaseResponse):
    """
    Options for generating synthetic instances with a trained model.

    Attributes:
        p (float): Sampling rate in (0, 1]; ``num = round(p * n)`` instances are generated.
        imr_threshold (float): ImR threshold for minority labels.
        max_attempts (Optional[int]): Attempt budget; ``100 * num`` when None.
        seed (int): Root seed of the sampler stream.
        verbose (int): Log level of the sampler.
    """

    p: float = 0.1
    imr_threshold: float = 10.0
    max_attempts: Optional[int] = field(
        default=None, metadata=dataclass_config(exclude=lambda f: f is None)
    )
    seed: int = 0
    verbose: int = field(default=verboselogs.WARNING)

    def num(self, n: int) -> int:
        """Instances to generate for a training set of ``n`` rows."""
        return round_half_up(self.p * n)

    def attempt_budget(self, num: int) -> int:
        if self.max_attempts is None:
            return ATTEMPTS_PER_INSTANCE * num
        return self.max_attempts

    def check(self, num: Optional[int] = None):
        """
        Validate the configuration, and the attempt budget against ``num`` when given.

        Raises:
            ConfigError: A value violates its range.
        """
        if not 0 < self.p <= 1:
            raise ConfigError(f"sampling rate p={self.p} must lie in (0, 1]")
        if self.max_attempts is not None and self.max_attempts < 0:
            raise ConfigError("max_attempts must be non-negative")
        if num is not None and self.attempt_budget(num) < num:
            raise ConfigError(
                f"max_attempts={self.max_attempts} is smaller than the {num} instances requested"
            )
        return True
