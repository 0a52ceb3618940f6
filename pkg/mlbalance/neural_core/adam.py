# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import List, Sequence, Tuple

from dataclasses import dataclass, field

import numpy as np

from ..common import ConfigError, ShapeMismatchError, StaleOptimizerStateError
from .layers import ParamGradients


@dataclass
class AdamState:
    """
    Moment estimates for one parameter list.

    A state is consumed by :func:`adam_step`, which returns its successor;
    stepping from a consumed state raises :class:`StaleOptimizerStateError`.

    Attributes:
        m (List[np.ndarray]): First-moment accumulators.
        v (List[np.ndarray]): Second-moment accumulators (non-negative).
        t (int): Steps taken.
        lr (float): Learning rate.
        beta1 (float): First-moment decay.
        beta2 (float): Second-moment decay.
        eps (float): Denominator floor.
    """

    m: List[np.ndarray]
    v: List[np.ndarray]
    t: int = 0
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    consumed: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.t < 0:
            raise ConfigError("Adam step counter must be non-negative")
        if not (0 <= self.beta1 < 1 and 0 <= self.beta2 < 1):
            raise ConfigError("Adam decay rates must lie in [0, 1)")
        if self.lr <= 0 or self.eps <= 0:
            raise ConfigError("Adam learning rate and eps must be positive")


def adam_init(
    params: Sequence[np.ndarray],
    lr: float = 1e-3,
    beta1: float = 0.9,
    beta2: float = 0.999,
    eps: float = 1e-8,
) -> AdamState:
    """
    A fresh state with zero moments shaped like ``params``.
    """
    return AdamState(
        m=[np.zeros_like(p, dtype=np.float64) for p in params],
        v=[np.zeros_like(p, dtype=np.float64) for p in params],
        lr=lr,
        beta1=beta1,
        beta2=beta2,
        eps=eps,
    )


def adam_step(
    state: AdamState, params: Sequence[np.ndarray], grads: ParamGradients
) -> Tuple[List[np.ndarray], AdamState]:
    """
    One bias-corrected Adam update.

    Args:
        state (AdamState): Current state; consumed by this call.
        params (Sequence[np.ndarray]): Parameters, left untouched.
        grads (ParamGradients): Gradients matching ``params``.

    Returns:
        Tuple[List[np.ndarray], AdamState]: Updated parameters and the next state.

    Raises:
        StaleOptimizerStateError: ``state`` was already used for a step.
        ShapeMismatchError: Parameter, gradient and moment shapes disagree.
    """
    if state.consumed:
        raise StaleOptimizerStateError()
    if not (len(params) == len(grads) == len(state.m) == len(state.v)):
        raise ShapeMismatchError(
            f"{len(params)} parameters, {len(grads)} gradients, {len(state.m)} moments"
        )
    for p, g, m in zip(params, grads, state.m):
        if np.shape(p) != np.shape(g) or np.shape(p) != np.shape(m):
            raise ShapeMismatchError(
                f"parameter {np.shape(p)}, gradient {np.shape(g)}, moment {np.shape(m)}"
            )

    t = state.t + 1
    b1, b2 = state.beta1, state.beta2
    correction1 = 1.0 - b1**t
    correction2 = 1.0 - b2**t

    new_params: List[np.ndarray] = []
    new_m: List[np.ndarray] = []
    new_v: List[np.ndarray] = []
    for p, g, m, v in zip(params, grads, state.m, state.v):
        m = b1 * m + (1.0 - b1) * g
        v = b2 * v + (1.0 - b2) * (g * g)
        m_hat = m / correction1
        v_hat = v / correction2
        new_params.append(p - state.lr * m_hat / (np.sqrt(v_hat) + state.eps))
        new_m.append(m)
        new_v.append(v)

    state.consumed = True
    return new_params, AdamState(
        m=new_m,
        v=new_v,
        t=t,
        lr=state.lr,
        beta1=b1,
        beta2=b2,
        eps=state.eps,
    )
