# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import Optional


class MLBalanceError(Exception):
    """
    Base class for every error raised by mlbalance.

    Attributes:
        message (str): The error message describing the exception.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.name = "MLBalanceError"
        self.message = message

    def __str__(self):
        return f"{self.name}: {self.message}"


class DatasetParseError(MLBalanceError):
    """
    Exception raised when a dataset document is malformed.

    Attributes:
        message (str): The error message describing the exception.
        line (int): 1-based line (ARFF) or data row (CSV) where parsing failed.
        column (str): The offending column, when known.
    """

    def __init__(self, message: str, line: int = 0, column: Optional[str] = None):
        super().__init__(message)
        self.name = "DatasetParseError"
        self.line = line
        self.column = column

    def __str__(self):
        where = f"line {self.line}"
        if self.column is not None:
            where += f", column {self.column}"
        return f"{self.name}: {self.message} ({where})"


class DatasetValidationError(MLBalanceError):
    """
    Exception raised when parsed values break a dataset invariant
    (label outside {0,1}, NaN or infinite feature, missing value).
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.name = "DatasetValidationError"


class DatasetSchemaError(MLBalanceError):
    """
    Exception raised when the dataset layout is inconsistent: unknown label
    names, zero feature or label columns, mismatched row counts or schemas.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.name = "DatasetSchemaError"


class DegenerateProfileError(MLBalanceError):
    """
    Exception raised when an imbalance profile cannot be computed, i.e. the
    label matrix has no positive entry at all.
    """

    def __init__(self, message: str = "label matrix contains no positive label"):
        super().__init__(message)
        self.name = "DegenerateProfileError"


class ShapeMismatchError(MLBalanceError):
    """
    Exception raised when array shapes do not agree with a layer, model or dataset.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.name = "ShapeMismatchError"


class NonFiniteLossError(MLBalanceError):
    """
    Exception raised when a loss evaluates to NaN or infinity.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.name = "NonFiniteLossError"


class StaleOptimizerStateError(MLBalanceError):
    """
    Exception raised when an optimizer state that already produced a step is reused.
    """

    def __init__(self, message: str = "optimizer state was already consumed by a step"):
        super().__init__(message)
        self.name = "StaleOptimizerStateError"


class DivergedTrainingError(MLBalanceError):
    """
    Exception raised when training produces a non-finite loss.

    Attributes:
        epoch (int): 1-based epoch in which the loss diverged.
        batch (int): 0-based batch index within that epoch.
    """

    def __init__(self, message: str, epoch: int, batch: int):
        super().__init__(message)
        self.name = "DivergedTrainingError"
        self.epoch = epoch
        self.batch = batch

    def __str__(self):
        return f"{self.name}: {self.message} (epoch {self.epoch}, batch {self.batch})"


class NothingToSampleError(MLBalanceError):
    """
    Exception raised when the minority label set is empty, so an oversampler
    has no seed instances. Leaving the dataset untouched is the right response.
    """

    def __init__(
        self,
        message: str = "no minority labels found; the dataset can be used as is",
    ):
        super().__init__(message)
        self.name = "NothingToSampleError"


class GenerationStarvationError(MLBalanceError):
    """
    Exception raised when generation exhausts its attempt budget.

    Attributes:
        attempts (int): Attempts made.
        accepted (int): Instances accepted before giving up.
        acceptance_rate (float): accepted / attempts.
    """

    def __init__(self, message: str, attempts: int, accepted: int):
        super().__init__(message)
        self.name = "GenerationStarvationError"
        self.attempts = attempts
        self.accepted = accepted
        self.acceptance_rate = accepted / attempts if attempts else 0.0

    def __str__(self):
        return (
            f"{self.name}: {self.message} "
            f"(accepted {self.accepted} of {self.attempts} attempts, "
            f"acceptance rate {self.acceptance_rate:.4f})"
        )


class UndefinedMetricError(MLBalanceError):
    """
    Exception raised when a metric has no defined term, e.g. every label was
    skipped by Macro-AUC or every instance by ranking loss.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.name = "UndefinedMetricError"


class ConfigError(MLBalanceError):
    """
    Exception raised for configuration values outside their valid range.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.name = "ConfigError"
