# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import Any, Dict, Tuple

from dataclasses import dataclass

import numpy as np

from ..common import ShapeMismatchError
from .dataset import MultiLabelDataset


@dataclass(frozen=True, eq=False)
class FeatureScaler:
    """
    Per-feature min-max statistics for mapping features to [0, 1] and back.

    Constant columns (max == min) map to 0 and invert to their constant.
    """

    per_feature_min: np.ndarray
    per_feature_max: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.per_feature_min, dtype=np.float64).ravel()
        hi = np.asarray(self.per_feature_max, dtype=np.float64).ravel()
        if lo.shape != hi.shape:
            raise ShapeMismatchError("min and max vectors differ in length")
        if np.any(hi < lo):
            raise ShapeMismatchError("per-feature max below min")
        object.__setattr__(self, "per_feature_min", lo)
        object.__setattr__(self, "per_feature_max", hi)

    @classmethod
    def fit(cls, X: np.ndarray) -> "FeatureScaler":
        """
        Statistics of the columns of ``X`` (n x d).
        """
        X = np.asarray(X, dtype=np.float64)
        return cls(per_feature_min=X.min(axis=0), per_feature_max=X.max(axis=0))

    @classmethod
    def identity(cls, d: int) -> "FeatureScaler":
        """
        A scaler that leaves data already in [0, 1] unchanged.
        """
        return cls(per_feature_min=np.zeros(d), per_feature_max=np.ones(d))

    @property
    def d(self) -> int:
        """Number of features."""
        return int(self.per_feature_min.shape[0])

    def _span(self) -> np.ndarray:
        span = self.per_feature_max - self.per_feature_min
        return np.where(span > 0, span, 1.0)

    def _check(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[-1] != self.d:
            raise ShapeMismatchError(
                f"scaler fitted on {self.d} features, got {X.shape[-1]}"
            )
        return X

    def transform(self, X: np.ndarray) -> np.ndarray:
        """Map features to the unit range of the fitted statistics."""
        X = self._check(X)
        constant = self.per_feature_max == self.per_feature_min
        scaled = (X - self.per_feature_min) / self._span()
        return np.where(constant, 0.0, scaled)

    def inverse_transform(self, X: np.ndarray) -> np.ndarray:
        """Map unit-range features back to the original scale."""
        X = self._check(X)
        constant = self.per_feature_max == self.per_feature_min
        restored = X * self._span() + self.per_feature_min
        return np.where(constant, self.per_feature_min, restored)

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form."""
        return {
            "per_feature_min": self.per_feature_min.tolist(),
            "per_feature_max": self.per_feature_max.tolist(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FeatureScaler":
        """Inverse of :meth:`to_dict`."""
        return cls(
            per_feature_min=np.asarray(data["per_feature_min"], dtype=np.float64),
            per_feature_max=np.asarray(data["per_feature_max"], dtype=np.float64),
        )


def normalize_features(dataset: MultiLabelDataset) -> Tuple[MultiLabelDataset, FeatureScaler]:
    """
    Min-max scale every feature column of ``dataset`` to [0, 1].

    Pass the training split; apply the returned scaler to the other splits
    with :func:`apply_scaler`.
    """
    scaler = FeatureScaler.fit(dataset.X)
    return dataset.with_features(scaler.transform(dataset.X)), scaler


def apply_scaler(dataset: MultiLabelDataset, scaler: FeatureScaler) -> MultiLabelDataset:
    """
    Scale ``dataset`` with statistics fitted elsewhere. Values outside the
    fitted range land outside [0, 1].
    """
    return dataset.with_features(scaler.transform(dataset.X))
