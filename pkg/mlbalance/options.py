# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import os
import logging
from typing import Optional

from .utils import verboselogs
from .errors import MLBalanceEnvError

DEFAULT_SEED = 0


class MLBalanceOptions:
    """
    Process-wide options: the log level handed to every worker and the root seed.
    """

    _logger: verboselogs.VerboseLogger

    def __init__(self, verbose: int = verboselogs.WARNING, seed: int = DEFAULT_SEED):
        self._logger = verboselogs.VerboseLogger(__name__)
        if not self._logger.hasHandlers():
            self._logger.addHandler(logging.StreamHandler())
        self.verbose = verbose
        self.seed = seed

    def __repr__(self) -> str:
        return f"MLBalanceOptions(verbose={self.verbose}, seed={self.seed})"


class OptionsFromEnv(MLBalanceOptions):
    """
    Extends MLBalanceOptions, filling values not given explicitly from
    ``MLBALANCE_SEED`` and ``MLBALANCE_LOGGING`` (a level number or name).
    """

    def __init__(self, verbose: Optional[int] = None, seed: Optional[int] = None):
        self._logger = verboselogs.VerboseLogger(__name__)
        if not self._logger.hasHandlers():
            self._logger.addHandler(logging.StreamHandler())
        self._logger.setLevel(verboselogs.WARNING)

        if seed is None:
            raw = os.getenv("MLBALANCE_SEED", "").strip()
            if raw:
                try:
                    seed = int(raw)
                except ValueError as err:
                    self._logger.critical("MLBALANCE_SEED is not an integer: %s", raw)
                    raise MLBalanceEnvError(f"MLBALANCE_SEED must be an integer, got '{raw}'") from err
                self._logger.notice("seed is set to %d from MLBALANCE_SEED", seed)
            else:
                seed = DEFAULT_SEED

        if verbose is None:
            verbose = verboselogs.level_from_name(os.getenv("MLBALANCE_LOGGING", ""))

        super().__init__(verbose=verbose, seed=seed)
