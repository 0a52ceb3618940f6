# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import Any, Dict, List, Tuple

from dataclasses import dataclass

import numpy as np

from ..common import ShapeMismatchError

# one array per parameter, in the owner's parameter order
ParamGradients = List[np.ndarray]


@dataclass(frozen=True, eq=False)
class DenseLayer:
    """
    Affine map ``W @ input + b`` over column-per-instance batches.

    Attributes:
        W (np.ndarray): Weights, out x in.
        b (np.ndarray): Bias, length out.
    """

    W: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        W = np.array(self.W, dtype=np.float64)
        b = np.array(self.b, dtype=np.float64).ravel()
        if W.ndim != 2 or W.shape[0] != b.shape[0]:
            raise ShapeMismatchError(
                f"weights of shape {W.shape} do not fit a bias of length {b.shape[0]}"
            )
        if not (np.all(np.isfinite(W)) and np.all(np.isfinite(b))):
            raise ShapeMismatchError("layer parameters must be finite")
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "b", b)

    @property
    def in_dim(self) -> int:
        return int(self.W.shape[1])

    @property
    def out_dim(self) -> int:
        return int(self.W.shape[0])

    def parameters(self) -> List[np.ndarray]:
        return [self.W, self.b]

    def backward(
        self, inputs: np.ndarray, grad_out: np.ndarray
    ) -> Tuple[np.ndarray, ParamGradients]:
        """
        Gradients of a scalar loss given ``dL/d output`` for the batch that
        produced it. Returns ``(dL/d inputs, [dL/dW, dL/db])``.
        """
        grad_W = grad_out @ inputs.T
        grad_b = grad_out.sum(axis=1)
        return self.W.T @ grad_out, [grad_W, grad_b]


def dense_forward(layer: DenseLayer, inputs: np.ndarray) -> np.ndarray:
    """
    Apply ``layer`` to an ``in x batch`` matrix.

    Raises:
        ShapeMismatchError: ``inputs`` row count differs from the layer's input width.
    """
    inputs = np.asarray(inputs, dtype=np.float64)
    if inputs.ndim != 2 or inputs.shape[0] != layer.in_dim:
        raise ShapeMismatchError(
            f"layer expects {layer.in_dim} input rows, got shape {inputs.shape}"
        )
    return layer.W @ inputs + layer.b[:, None]


def init_params(shape: Tuple[int, int], rng: np.random.Generator) -> DenseLayer:
    """
    Glorot-uniform weights of ``shape`` (out, in) with a zero bias.
    """
    out_dim, in_dim = (int(v) for v in shape)
    if out_dim < 1 or in_dim < 1:
        raise ShapeMismatchError(f"layer dimensions must be positive, got {shape}")
    bound = np.sqrt(6.0 / (in_dim + out_dim))
    return DenseLayer(
        W=rng.uniform(-bound, bound, size=(out_dim, in_dim)),
        b=np.zeros(out_dim),
    )


def layer_to_dict(layer: DenseLayer) -> Dict[str, Any]:
    """JSON-ready form: shape plus row-major weights and bias."""
    return {
        "shape": [layer.out_dim, layer.in_dim],
        "W": layer.W.tolist(),
        "b": layer.b.tolist(),
    }


def layer_from_dict(data: Dict[str, Any]) -> DenseLayer:
    """Inverse of :func:`layer_to_dict`."""
    out_dim, in_dim = data["shape"]
    W = np.asarray(data["W"], dtype=np.float64).reshape(out_dim, in_dim)
    return DenseLayer(W=W, b=np.asarray(data["b"], dtype=np.float64))
