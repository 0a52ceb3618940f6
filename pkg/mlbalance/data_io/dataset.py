# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import List, Optional, Sequence

from dataclasses import dataclass, field

import numpy as np

from ..common import DatasetSchemaError, DatasetValidationError, ShapeMismatchError


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class MultiLabelDataset:
    """
    A feature matrix X (n x d) paired with a binary label matrix Y (n x q).

    Arrays are copied and made read-only on construction, so a dataset can be
    shared freely between readers.

    Attributes:
        X (np.ndarray): float64 features, one row per instance.
        Y (np.ndarray): int64 label indicators in {0, 1}.
        feature_names (List[str]): d unique names.
        label_names (List[str]): q unique names.
        relation (str): Relation name written to ARFF output.
    """

    X: np.ndarray
    Y: np.ndarray
    feature_names: List[str]
    label_names: List[str]
    relation: str = field(default="mlbalance")

    def __post_init__(self):
        X = np.asarray(self.X, dtype=np.float64)
        Y = np.asarray(self.Y)
        if X.ndim != 2 or Y.ndim != 2:
            raise DatasetSchemaError("X and Y must be two-dimensional")
        if X.shape[0] != Y.shape[0]:
            raise DatasetSchemaError(
                f"X has {X.shape[0]} rows but Y has {Y.shape[0]}"
            )
        if X.shape[0] < 1:
            raise DatasetSchemaError("dataset must contain at least one instance")
        if X.shape[1] < 1:
            raise DatasetSchemaError("dataset must contain at least one feature")
        if Y.shape[1] < 1:
            raise DatasetSchemaError("dataset must contain at least one label")
        if not np.all(np.isfinite(X)):
            raise DatasetValidationError("features contain NaN or infinite values")
        if not np.all((Y == 0) | (Y == 1)):
            raise DatasetValidationError("labels must be exactly 0 or 1")
        if len(self.feature_names) != X.shape[1]:
            raise DatasetSchemaError(
                f"{len(self.feature_names)} feature names for {X.shape[1]} features"
            )
        if len(self.label_names) != Y.shape[1]:
            raise DatasetSchemaError(
                f"{len(self.label_names)} label names for {Y.shape[1]} labels"
            )
        names = list(self.feature_names) + list(self.label_names)
        if len(set(names)) != len(names):
            raise DatasetSchemaError("feature and label names must be unique")

        object.__setattr__(self, "X", _frozen(X))
        object.__setattr__(self, "Y", _frozen(Y.astype(np.int64)))
        object.__setattr__(self, "feature_names", list(self.feature_names))
        object.__setattr__(self, "label_names", list(self.label_names))

    @property
    def n(self) -> int:
        """Number of instances."""
        return int(self.X.shape[0])

    @property
    def d(self) -> int:
        """Number of features."""
        return int(self.X.shape[1])

    @property
    def q(self) -> int:
        """Number of labels."""
        return int(self.Y.shape[1])

    def same_schema(self, other: "MultiLabelDataset") -> bool:
        """
        True when both datasets have the same feature and label names in the same order.
        """
        return (
            self.feature_names == other.feature_names
            and self.label_names == other.label_names
        )

    def equals(self, other: "MultiLabelDataset") -> bool:
        """
        Bitwise equality of names, X and Y.
        """
        return (
            self.same_schema(other)
            and np.array_equal(self.X, other.X)
            and np.array_equal(self.Y, other.Y)
        )

    def with_features(self, X: np.ndarray) -> "MultiLabelDataset":
        """
        Same labels and names with a replaced feature matrix.
        """
        return MultiLabelDataset(
            X=X,
            Y=self.Y,
            feature_names=self.feature_names,
            label_names=self.label_names,
            relation=self.relation,
        )

    def subset(self, indices: Sequence[int]) -> "MultiLabelDataset":
        """
        Rows at ``indices``, in the given order.
        """
        idx = np.asarray(indices, dtype=np.int64)
        return MultiLabelDataset(
            X=self.X[idx],
            Y=self.Y[idx],
            feature_names=self.feature_names,
            label_names=self.label_names,
            relation=self.relation,
        )

    def append_rows(self, X: np.ndarray, Y: np.ndarray) -> "MultiLabelDataset":
        """
        Returns a new dataset with the given rows appended after the existing ones.
        """
        X = np.asarray(X, dtype=np.float64)
        Y = np.asarray(Y, dtype=np.int64)
        if (X.size and X.shape[-1] != self.d) or (Y.size and Y.shape[-1] != self.q):
            raise ShapeMismatchError(
                f"rows must have {self.d} features and {self.q} labels"
            )
        X = X.reshape(-1, self.d)
        Y = Y.reshape(-1, self.q)
        if X.shape[0] != Y.shape[0]:
            raise ShapeMismatchError(
                f"{X.shape[0]} feature rows but {Y.shape[0]} label rows"
            )
        return MultiLabelDataset(
            X=np.vstack([self.X, X]),
            Y=np.vstack([self.Y, Y]),
            feature_names=self.feature_names,
            label_names=self.label_names,
            relation=self.relation,
        )


@dataclass(frozen=True)
class DatasetSplit:
    """
    Disjoint train / validation / optional test partitions of one dataset.

    Attributes:
        train (MultiLabelDataset): Training rows.
        validation (MultiLabelDataset): Rows held out for threshold calibration.
        test (Optional[MultiLabelDataset]): Rows held out for evaluation.
        train_index (List[int]): Source row indices of ``train``.
        validation_index (List[int]): Source row indices of ``validation``.
        test_index (List[int]): Source row indices of ``test`` (empty if no test split).
    """

    train: MultiLabelDataset
    validation: MultiLabelDataset
    test: Optional[MultiLabelDataset] = None
    train_index: List[int] = field(default_factory=list)
    validation_index: List[int] = field(default_factory=list)
    test_index: List[int] = field(default_factory=list)
