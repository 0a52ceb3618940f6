# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import List

from dataclasses import dataclass, field

import numpy as np

from ..common import BaseResponse


@dataclass
class ImbalanceProfile(BaseResponse):
    """
    Per-label counts and imbalance ratios of a multi-label dataset.

    Labels without positive instances carry ``inf`` in ``irlbl`` (and in
    ``imr``, as does any label present on every instance); such entries are
    rendered as ``null`` in JSON.

    Attributes:
        n (int): Number of instances.
        d (int): Number of features.
        q (int): Number of labels.
        label_names (List[str]): Label names, in column order.
        n1 (List[int]): Positive count per label.
        n0 (List[int]): Negative count per label.
        irlbl (List[float]): max(n1) / n1[j].
        imr (List[float]): max(n1[j], n0[j]) / min(n1[j], n0[j]).
        mean_ir (float): Mean of the finite ``irlbl`` entries.
        cvir (float): Sample standard deviation of those entries over ``mean_ir``.
        card (float): Mean number of labels per instance.
        den (float): ``card / q``.
    """

    n: int = 0
    d: int = 0
    q: int = 0
    label_names: List[str] = field(default_factory=list)
    n1: List[int] = field(default_factory=list)
    n0: List[int] = field(default_factory=list)
    irlbl: List[float] = field(default_factory=list)
    imr: List[float] = field(default_factory=list)
    mean_ir: float = 0.0
    cvir: float = 0.0
    card: float = 0.0
    den: float = 0.0

    def supported(self) -> np.ndarray:
        """Boolean mask of labels with at least one positive instance."""
        return np.asarray(self.n1) > 0

    def irlbl_array(self) -> np.ndarray:
        return np.asarray(self.irlbl, dtype=np.float64)

    def imr_array(self) -> np.ndarray:
        return np.asarray(self.imr, dtype=np.float64)


@dataclass
class LabelStats(BaseResponse):
    """
    One row of the ``stats`` report.
    """

    name: str = ""
    n1: int = 0
    irlbl: float = 0.0
    imr: float = 0.0


@dataclass
class StatsReport(BaseResponse):
    """
    The profile as emitted by the ``stats`` command, together with the
    minority label set found at ``imr_threshold``.
    """

    n: int = 0
    d: int = 0
    q: int = 0
    per_label: List[LabelStats] = field(default_factory=list)
    mean_ir: float = 0.0
    cvir: float = 0.0
    card: float = 0.0
    den: float = 0.0
    imr_threshold: float = 10.0
    minority_labels: List[int] = field(default_factory=list)
