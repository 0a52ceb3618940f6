# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from .errors import (
    MLBalanceError,
    DatasetParseError,
    DatasetValidationError,
    DatasetSchemaError,
    DegenerateProfileError,
    ShapeMismatchError,
    NonFiniteLossError,
    StaleOptimizerStateError,
    DivergedTrainingError,
    NothingToSampleError,
    GenerationStarvationError,
    UndefinedMetricError,
    ConfigError,
)
from .shared_response import BaseResponse, finite_or_none
from .enums import DatasetFormat, SamplerKind, ClassifierKind
from .sources import (
    TextSource,
    PathSource,
    DatasetSource,
    is_text_source,
    is_path_source,
)
from .helpers import (
    round_half_up,
    substream,
    SPLIT_STREAM,
    INIT_STREAM,
    SHUFFLE_STREAM,
    SAMPLER_STREAM,
    CLASSIFIER_STREAM,
)
