# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import Iterable, List

import numpy as np

from ..common import DegenerateProfileError
from ..data_io import MultiLabelDataset
from ..utils import get_logger
from .response import ImbalanceProfile, LabelStats, StatsReport

DEFAULT_IMR_THRESHOLD = 10.0

_logger = get_logger(__name__)


def compute_profile(dataset: MultiLabelDataset) -> ImbalanceProfile:
    """
    Count positives per label and derive IRlbl, ImR, MeanIR, CVIR, Card and Den.

    Args:
        dataset (MultiLabelDataset): The dataset to profile.

    Returns:
        ImbalanceProfile: The profile.

    Raises:
        DegenerateProfileError: No label has a positive instance.
    """
    Y = dataset.Y
    n = dataset.n
    n1 = Y.sum(axis=0).astype(np.int64)
    n0 = n - n1
    if n1.max() == 0:
        raise DegenerateProfileError()

    supported = n1 > 0
    if not supported.all():
        missing = [dataset.label_names[j] for j in np.flatnonzero(~supported)]
        _logger.warning(
            "labels without positive instances are excluded from MeanIR and CVIR: %s",
            ", ".join(missing),
        )

    with np.errstate(divide="ignore"):
        irlbl = np.where(supported, n1.max() / np.maximum(n1, 1), np.inf)
        low = np.minimum(n1, n0)
        imr = np.where(low > 0, np.maximum(n1, n0) / np.maximum(low, 1), np.inf)

    finite = irlbl[supported]
    mean_ir = float(finite.mean())
    cvir = float(finite.std(ddof=1) / mean_ir) if finite.size >= 2 else 0.0
    card = float(Y.sum() / n)

    return ImbalanceProfile(
        n=n,
        d=dataset.d,
        q=dataset.q,
        label_names=list(dataset.label_names),
        n1=n1.tolist(),
        n0=n0.tolist(),
        irlbl=[float(v) for v in irlbl],
        imr=[float(v) for v in imr],
        mean_ir=mean_ir,
        cvir=cvir,
        card=card,
        den=card / dataset.q,
    )


def minority_labels(
    profile: ImbalanceProfile, imr_threshold: float = DEFAULT_IMR_THRESHOLD
) -> List[int]:
    """
    Labels with ImR above ``imr_threshold`` and IRlbl above MeanIR (both strict).

    Labels without positives never qualify. Returns sorted 0-based indices.
    """
    irlbl = profile.irlbl_array()
    imr = profile.imr_array()
    chosen = profile.supported() & (imr > imr_threshold) & (irlbl > profile.mean_ir)
    return np.flatnonzero(chosen).tolist()


def majority_labels(profile: ImbalanceProfile) -> List[int]:
    """
    Supported labels whose IRlbl is below MeanIR.
    """
    chosen = profile.supported() & (profile.irlbl_array() < profile.mean_ir)
    return np.flatnonzero(chosen).tolist()


def minority_instances(dataset: MultiLabelDataset, ls: Iterable[int]) -> List[int]:
    """
    Instances carrying at least one label of ``ls``, as sorted 0-based indices.
    """
    columns = sorted(set(int(j) for j in ls))
    if not columns:
        return []
    return np.flatnonzero(dataset.Y[:, columns].any(axis=1)).tolist()


def stats_report(
    profile: ImbalanceProfile, imr_threshold: float = DEFAULT_IMR_THRESHOLD
) -> StatsReport:
    """
    Shape a profile into the report written by the ``stats`` command.
    """
    per_label = [
        LabelStats(
            name=profile.label_names[j],
            n1=profile.n1[j],
            irlbl=profile.irlbl[j],
            imr=profile.imr[j],
        )
        for j in range(profile.q)
    ]
    return StatsReport(
        n=profile.n,
        d=profile.d,
        q=profile.q,
        per_label=per_label,
        mean_ir=profile.mean_ir,
        cvir=profile.cvir,
        card=profile.card,
        den=profile.den,
        imr_threshold=float(imr_threshold),
        minority_labels=minority_labels(profile, imr_threshold),
    )
