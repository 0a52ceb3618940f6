# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import List

from dataclasses import dataclass, field

import numpy as np

from ..common import BaseResponse


@dataclass(frozen=True, eq=False)
class ForwardOutputs:
    """
    Results of one forward pass over a column-per-instance batch.

    Attributes:
        zx (np.ndarray): Feature embedding, l x b.
        zy (np.ndarray): Label embedding, l x b.
        xrec (np.ndarray): Reconstructed features from ``zx``, d x b.
        ylogits (np.ndarray): Pre-sigmoid label scores from ``zy``, q x b.
        yscores (np.ndarray): ``sigmoid(ylogits)``, q x b.
    """

    zx: np.ndarray
    zy: np.ndarray
    xrec: np.ndarray
    ylogits: np.ndarray
    yscores: np.ndarray


@dataclass(frozen=True)
class LossTerms:
    """
    Values of the objective's terms on one batch.

    ``psi = m + lambda_sim * s`` and ``total = phi + alpha * psi + beta * gamma``.
    """

    phi: float
    m: float
    s: float
    psi: float
    gamma: float
    total: float


@dataclass
class EpochRecord(BaseResponse):
    """
    Mean batch losses of one epoch and the mean validation F1 after the
    thresholds were recalibrated.
    """

    epoch: int = 0
    phi: float = 0.0
    psi: float = 0.0
    gamma: float = 0.0
    total: float = 0.0
    mean_val_f1: float = 0.0


@dataclass
class TrainingHistory(BaseResponse):
    """
    Every epoch of a training run.
    """

    epochs: List[EpochRecord] = field(default_factory=list)

    def totals(self) -> List[float]:
        return [record.total for record in self.epochs]
