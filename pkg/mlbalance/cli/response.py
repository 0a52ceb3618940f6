# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import Dict

from dataclasses import dataclass, field

from ..common import BaseResponse
from ..evaluation import EvalReport, MetricDelta
from ..sampler import Provenance


@dataclass
class LeakageAudit(BaseResponse):
    """
    Checks that resampling touched the training split only.

    Attributes:
        train_rows (int): Rows of the training split before resampling.
        validation_rows (int): Rows of the validation split.
        test_rows (int): Rows of the test split.
        synthetic_rows (int): Rows added to the training split.
        splits_disjoint (bool): Train, validation and test indices do not overlap.
        seeds_from_train (bool): Every generation seed is a training row.
        test_untouched (bool): The evaluated test split equals the source rows it was cut from.
    """

    train_rows: int = 0
    validation_rows: int = 0
    test_rows: int = 0
    synthetic_rows: int = 0
    splits_disjoint: bool = True
    seeds_from_train: bool = True
    test_untouched: bool = True


@dataclass
class PipelineReport(BaseResponse):
    """
    The same classifier evaluated on one test split after training on the
    original and on the resampled training split.
    """

    baseline: EvalReport = field(default_factory=EvalReport)
    augmented: EvalReport = field(default_factory=EvalReport)
    delta: MetricDelta = field(default_factory=MetricDelta)
    wall_clock_seconds: Dict[str, float] = field(default_factory=dict)
    provenance: Provenance = field(default_factory=Provenance)
    leakage_audit: LeakageAudit = field(default_factory=LeakageAudit)
