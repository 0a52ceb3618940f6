# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from .common import MLBalanceError


class MLBalanceEnvError(MLBalanceError):
    """
    Exception raised when an MLBALANCE_* environment variable holds an unusable value.

    Attributes:
        message (str): The error message describing the exception.
    """

    def __init__(self, message: str = "invalid MLBALANCE_* environment variable"):
        super().__init__(message)
        self.name = "MLBalanceEnvError"
