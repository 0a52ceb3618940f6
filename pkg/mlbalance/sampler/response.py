# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import List, Optional

from dataclasses import dataclass, field
from dataclasses_json import config as dataclass_config

import numpy as np

from ..common import BaseResponse


@dataclass(frozen=True, eq=False)
class SyntheticInstance:
    """
    A generated instance in the original feature scale.

    Attributes:
        x (np.ndarray): Features, length d.
        y (np.ndarray): Labels, length q, never all zero.
        seed_index (int): Row of the training set the instance was decoded from.
    """

    x: np.ndarray
    y: np.ndarray
    seed_index: int


@dataclass(frozen=True)
class SamplingResult:
    """
    Accepted instances of a generation run with its bookkeeping.

    Attributes:
        instances (List[SyntheticInstance]): Accepted instances, in acceptance order.
        accepted (int): ``len(instances)``.
        rejected_all_zero (int): Candidates dropped for an all-zero label vector.
        attempts (int): Seeds drawn.
        minority_labels (List[int]): The minority label set seeds were drawn for.
        minority_instances (List[int]): The seed pool.
    """

    instances: List[SyntheticInstance]
    accepted: int
    rejected_all_zero: int
    attempts: int
    minority_labels: List[int]
    minority_instances: List[int]


@dataclass
class Provenance(BaseResponse):  # pylint: disable=too-many-instance-attributes
    """
    Sidecar written next to a resampled dataset.
    """

    method: str = ""
    p: float = 0.0
    num: int = 0
    accepted: int = 0
    rejected_all_zero: int = 0
    seed: int = 0
    minority_labels: List[int] = field(default_factory=list)
    attempts: Optional[int] = field(
        default=None, metadata=dataclass_config(exclude=lambda f: f is None)
    )
    k: Optional[int] = field(
        default=None, metadata=dataclass_config(exclude=lambda f: f is None)
    )
    n_before: int = 0
    n_after: int = 0
    mean_ir_before: float = 0.0
    mean_ir_after: float = 0.0
