# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

"""
The four maps of the model and their forward passes.

Network internals use the column-per-instance layout: a batch of b
instances is a d x b feature matrix and a q x b label matrix. The helpers
at the bottom take and return row-per-instance matrices.
"""

from typing import List, Optional, Sequence, Tuple
import dataclasses

from dataclasses import dataclass

import numpy as np

from ..common import DatasetSchemaError, ShapeMismatchError
from ..data_io import FeatureScaler, MultiLabelDataset
from ..neural_core import (
    DenseLayer,
    ParamGradients,
    dense_forward,
    init_params,
    leaky_relu,
    leaky_relu_grad,
    sigmoid,
)
from .options import TrainConfig
from .response import ForwardOutputs

# two-layer encoder: inputs, hidden pre-activation, hidden output, latent pre-activation
EncoderCache = Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]

NUM_PARAMETER_ARRAYS = 12


@dataclass(frozen=True, eq=False)
class AemloModel:
    """
    Feature encoder ``fex`` (d -> hidden -> l), label encoder ``fey``
    (q -> hidden -> l), feature decoder ``fdx`` (l -> d, linear) and label
    decoder ``fdy`` (l -> q, sigmoid), with per-label thresholds.

    Attributes:
        fex (Tuple[DenseLayer, DenseLayer]): Feature encoder, leaky ReLU after each layer.
        fey (Tuple[DenseLayer, DenseLayer]): Label encoder, leaky ReLU after each layer.
        fdx (DenseLayer): Feature decoder.
        fdy (DenseLayer): Label decoder (logits).
        thresholds (np.ndarray): Length-q thresholds in (0, 1).
        scaler (FeatureScaler): Maps raw features to the unit range the model was trained on.
        config (TrainConfig): The resolved training configuration.
        feature_names (Optional[List[str]]): Feature names of the training set, when known.
        label_names (Optional[List[str]]): Label names of the training set, when known.
    """

    fex: Tuple[DenseLayer, DenseLayer]
    fey: Tuple[DenseLayer, DenseLayer]
    fdx: DenseLayer
    fdy: DenseLayer
    thresholds: np.ndarray
    scaler: FeatureScaler
    config: TrainConfig
    feature_names: Optional[List[str]] = None
    label_names: Optional[List[str]] = None

    def __post_init__(self):
        d, q = self.fex[0].in_dim, self.fey[0].in_dim
        latent = self.fex[1].out_dim
        fits = (
            self.fex[1].in_dim == self.fex[0].out_dim
            and self.fey[1].in_dim == self.fey[0].out_dim
            and self.fey[1].out_dim == latent
            and self.fdx.in_dim == latent
            and self.fdy.in_dim == latent
            and self.fdx.out_dim == d
            and self.fdy.out_dim == q
        )
        if not fits:
            raise ShapeMismatchError("encoder and decoder layer shapes are inconsistent")
        thresholds = np.array(self.thresholds, dtype=np.float64).ravel()
        if thresholds.shape[0] != q:
            raise ShapeMismatchError(f"{thresholds.shape[0]} thresholds for {q} labels")
        if not np.all((thresholds > 0) & (thresholds < 1)):
            raise ShapeMismatchError("thresholds must lie strictly between 0 and 1")
        if self.scaler.d != d:
            raise ShapeMismatchError(f"scaler covers {self.scaler.d} features, model has {d}")
        if self.feature_names is not None and len(self.feature_names) != d:
            raise ShapeMismatchError(f"{len(self.feature_names)} feature names for {d} features")
        if self.label_names is not None and len(self.label_names) != q:
            raise ShapeMismatchError(f"{len(self.label_names)} label names for {q} labels")
        object.__setattr__(self, "fex", tuple(self.fex))
        object.__setattr__(self, "fey", tuple(self.fey))
        object.__setattr__(self, "thresholds", thresholds)
        if self.feature_names is not None:
            object.__setattr__(self, "feature_names", list(self.feature_names))
        if self.label_names is not None:
            object.__setattr__(self, "label_names", list(self.label_names))

    @property
    def d(self) -> int:
        return self.fex[0].in_dim

    @property
    def q(self) -> int:
        return self.fey[0].in_dim

    @property
    def latent_dim(self) -> int:
        return self.fex[1].out_dim

    def layers(self) -> List[DenseLayer]:
        return [self.fex[0], self.fex[1], self.fey[0], self.fey[1], self.fdx, self.fdy]

    def parameters(self) -> List[np.ndarray]:
        """
        All parameter arrays in a fixed order: fex, fey, fdx, fdy, each layer
        contributing weights then bias.
        """
        params: List[np.ndarray] = []
        for layer in self.layers():
            params.extend(layer.parameters())
        return params

    def with_parameters(self, params: Sequence[np.ndarray]) -> "AemloModel":
        """
        Copy with parameters replaced, in :meth:`parameters` order.
        """
        if len(params) != NUM_PARAMETER_ARRAYS:
            raise ShapeMismatchError(
                f"expected {NUM_PARAMETER_ARRAYS} parameter arrays, got {len(params)}"
            )
        layers = []
        for old, k in zip(self.layers(), range(0, NUM_PARAMETER_ARRAYS, 2)):
            W, b = np.asarray(params[k]), np.asarray(params[k + 1])
            if W.shape != old.W.shape or b.shape != old.b.shape:
                raise ShapeMismatchError(
                    f"parameter {k} has shape {W.shape}, expected {old.W.shape}"
                )
            layers.append(DenseLayer(W=W, b=b))
        return dataclasses.replace(
            self,
            fex=(layers[0], layers[1]),
            fey=(layers[2], layers[3]),
            fdx=layers[4],
            fdy=layers[5],
        )

    def with_thresholds(self, thresholds: np.ndarray) -> "AemloModel":
        return dataclasses.replace(self, thresholds=thresholds)

    def with_schema(self, dataset: MultiLabelDataset) -> "AemloModel":
        return dataclasses.replace(
            self,
            feature_names=list(dataset.feature_names),
            label_names=list(dataset.label_names),
        )

    def check_schema(self, dataset: MultiLabelDataset) -> None:
        """
        Raises:
            ShapeMismatchError: The dataset has another number of features or labels.
            DatasetSchemaError: Feature or label names differ from the training set's.
        """
        if self.d != dataset.d or self.q != dataset.q:
            raise ShapeMismatchError(
                f"model is {self.d} x {self.q}, dataset is {dataset.d} x {dataset.q}"
            )
        if self.feature_names is not None and self.feature_names != dataset.feature_names:
            raise DatasetSchemaError(
                f"model features {self.feature_names} do not match {dataset.feature_names}"
            )
        if self.label_names is not None and self.label_names != dataset.label_names:
            raise DatasetSchemaError(
                f"model labels {self.label_names} do not match {dataset.label_names}"
            )


def init_model(
    d: int, q: int, config: TrainConfig, rng: np.random.Generator, scaler: FeatureScaler
) -> AemloModel:
    """
    Glorot-initialized model for a resolved ``config`` (``latent_dim`` set).
    Layers draw from ``rng`` in :meth:`AemloModel.layers` order.
    """
    if config.latent_dim is None:
        raise ShapeMismatchError("latent_dim must be resolved before building a model")
    hidden, latent = config.hidden_dim, config.latent_dim
    fex = (init_params((hidden, d), rng), init_params((latent, hidden), rng))
    fey = (init_params((hidden, q), rng), init_params((latent, hidden), rng))
    fdx = init_params((d, latent), rng)
    fdy = init_params((q, latent), rng)
    return AemloModel(
        fex=fex,
        fey=fey,
        fdx=fdx,
        fdy=fdy,
        thresholds=np.full(q, 0.5),
        scaler=scaler,
        config=config,
    )


def encode(
    layers: Tuple[DenseLayer, DenseLayer], inputs: np.ndarray, slope: float
) -> Tuple[np.ndarray, EncoderCache]:
    """
    Two dense layers with leaky ReLU after each; returns the latent batch and
    the activations needed by :func:`encode_backward`.
    """
    a1 = dense_forward(layers[0], inputs)
    h1 = leaky_relu(a1, slope)
    a2 = dense_forward(layers[1], h1)
    return leaky_relu(a2, slope), (inputs, a1, h1, a2)


def encode_backward(
    layers: Tuple[DenseLayer, DenseLayer],
    cache: EncoderCache,
    grad_latent: np.ndarray,
    slope: float,
) -> ParamGradients:
    inputs, a1, h1, a2 = cache
    grad_a2 = grad_latent * leaky_relu_grad(a2, slope)
    grad_h1, second = layers[1].backward(h1, grad_a2)
    grad_a1 = grad_h1 * leaky_relu_grad(a1, slope)
    _, first = layers[0].backward(inputs, grad_a1)
    return first + second


def _check_batch(model: AemloModel, Xb: np.ndarray, Yb: np.ndarray) -> None:
    if Xb.ndim != 2 or Yb.ndim != 2:
        raise ShapeMismatchError("batches must be two-dimensional")
    if Xb.shape[0] != model.d or Yb.shape[0] != model.q:
        raise ShapeMismatchError(
            f"model expects {model.d} x b features and {model.q} x b labels, "
            f"got {Xb.shape} and {Yb.shape}"
        )
    if Xb.shape[1] != Yb.shape[1] or Xb.shape[1] < 1:
        raise ShapeMismatchError(
            f"feature and label batches must share b >= 1 columns, got {Xb.shape[1]} and {Yb.shape[1]}"
        )


def forward_with_cache(
    model: AemloModel, Xb: np.ndarray, Yb: np.ndarray
) -> Tuple[ForwardOutputs, EncoderCache, EncoderCache]:
    """
    :func:`forward` plus the encoder caches used for backpropagation.
    """
    Xb = np.asarray(Xb, dtype=np.float64)
    Yb = np.asarray(Yb, dtype=np.float64)
    _check_batch(model, Xb, Yb)
    slope = model.config.leaky_slope
    zx, x_cache = encode(model.fex, Xb, slope)
    zy, y_cache = encode(model.fey, Yb, slope)
    ylogits = dense_forward(model.fdy, zy)
    outputs = ForwardOutputs(
        zx=zx,
        zy=zy,
        xrec=dense_forward(model.fdx, zx),
        ylogits=ylogits,
        yscores=sigmoid(ylogits),
    )
    return outputs, x_cache, y_cache


def forward(model: AemloModel, Xb: np.ndarray, Yb: np.ndarray) -> ForwardOutputs:
    """
    Encode features and labels of a d x b / q x b batch and decode each
    embedding back into its own modality.

    Raises:
        ShapeMismatchError: Batch shapes do not match the model.
    """
    return forward_with_cache(model, Xb, Yb)[0]


def encode_features(model: AemloModel, X: np.ndarray) -> np.ndarray:
    """Latent codes (n x l) of unit-range feature rows (n x d)."""
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    if X.shape[1] != model.d:
        raise ShapeMismatchError(f"model expects {model.d} features, got {X.shape[1]}")
    return encode(model.fex, X.T, model.config.leaky_slope)[0].T


def decode_features(model: AemloModel, Z: np.ndarray) -> np.ndarray:
    """Unit-range feature rows (n x d) decoded from latent rows (n x l)."""
    return dense_forward(model.fdx, np.atleast_2d(Z).T).T


def decode_label_scores(model: AemloModel, Z: np.ndarray) -> np.ndarray:
    """Label scores in (0, 1), n x q, decoded from latent rows (n x l)."""
    return sigmoid(dense_forward(model.fdy, np.atleast_2d(Z).T)).T


def cross_modal_scores(model: AemloModel, X: np.ndarray) -> np.ndarray:
    """
    Label scores of unit-range feature rows routed through the feature
    encoder and the label decoder, the pairing used for generation.
    """
    return decode_label_scores(model, encode_features(model, X))
