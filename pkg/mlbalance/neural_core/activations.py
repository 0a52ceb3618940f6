# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import numpy as np
from scipy.special import expit

DEFAULT_LEAKY_SLOPE = 0.01


def leaky_relu(x: np.ndarray, slope: float = DEFAULT_LEAKY_SLOPE) -> np.ndarray:
    """x where x >= 0, slope * x elsewhere."""
    x = np.asarray(x, dtype=np.float64)
    return np.where(x >= 0, x, slope * x)


def leaky_relu_grad(x: np.ndarray, slope: float = DEFAULT_LEAKY_SLOPE) -> np.ndarray:
    """Elementwise derivative of :func:`leaky_relu`; 1 at exactly 0."""
    x = np.asarray(x, dtype=np.float64)
    return np.where(x >= 0, 1.0, slope)


def sigmoid(x: np.ndarray) -> np.ndarray:
    """Logistic function, overflow-safe."""
    return expit(np.asarray(x, dtype=np.float64))


def sigmoid_grad(x: np.ndarray) -> np.ndarray:
    """Derivative of :func:`sigmoid` at ``x``."""
    s = sigmoid(x)
    return s * (1.0 - s)
