# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from aenum import StrEnum


class DatasetFormat(StrEnum):
    """
    On-disk dataset formats.
    """

    ARFF: str = "arff"
    CSV: str = "csv"


class SamplerKind(StrEnum):
    """
    Resampling strategies available to the CLI.
    """

    AEMLO: str = "aemlo"
    MLROS: str = "mlros"
    MLRUS: str = "mlrus"
    MLSMOTE: str = "mlsmote"
    NONE: str = "none"


class ClassifierKind(StrEnum):
    """
    Built-in multi-label classifiers.
    """

    BR: str = "br"
    MLKNN: str = "mlknn"
