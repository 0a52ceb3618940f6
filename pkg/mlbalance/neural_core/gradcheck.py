# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import math
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ..common import NonFiniteLossError
from ..utils import get_logger
from .layers import ParamGradients

# loss_fn(params) -> (loss, analytic gradients)
LossFn = Callable[[List[np.ndarray]], Tuple[float, ParamGradients]]

_logger = get_logger(__name__)


def _evaluate(loss_fn: LossFn, params: List[np.ndarray]) -> float:
    loss = float(loss_fn(params)[0])
    if not math.isfinite(loss):
        raise NonFiniteLossError(f"loss evaluated to {loss}")
    return loss


def grad_check(
    loss_fn: LossFn,
    params: Sequence[np.ndarray],
    epsilon: float = 1e-5,
    samples: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> float:
    """
    Compare analytic gradients against central finite differences.

    For each checked entry p the numeric derivative is
    ``(loss(p + eps) - loss(p - eps)) / (2 eps)`` and the relative error is
    ``|numeric - analytic| / max(1e-8, |numeric| + |analytic|)``.

    Args:
        loss_fn (LossFn): Pure function returning the loss and its gradients.
        params (Sequence[np.ndarray]): Point at which to check; not modified.
        epsilon (float): Perturbation size.
        samples (Optional[int]): Check at most this many entries per array,
            drawn without replacement; every entry when None.
        rng (Optional[np.random.Generator]): Source for entry sampling.

    Returns:
        float: The maximum relative error over checked entries.

    Raises:
        NonFiniteLossError: The loss is NaN or infinite at any evaluated point.
    """
    work = [np.array(p, dtype=np.float64, copy=True) for p in params]
    base, analytic = loss_fn(work)
    if not math.isfinite(float(base)):
        raise NonFiniteLossError(f"loss evaluated to {base}")
    if rng is None:
        rng = np.random.default_rng(0)

    worst = 0.0
    for k, array in enumerate(work):
        entries = np.arange(array.size)
        if samples is not None and samples < array.size:
            entries = rng.choice(array.size, size=samples, replace=False)
        grad = np.asarray(analytic[k], dtype=np.float64)
        for r in entries:
            saved = array.flat[r]
            array.flat[r] = saved + epsilon
            plus = _evaluate(loss_fn, work)
            array.flat[r] = saved - epsilon
            minus = _evaluate(loss_fn, work)
            array.flat[r] = saved

            numeric = (plus - minus) / (2.0 * epsilon)
            exact = float(grad.flat[r])
            error = abs(numeric - exact) / max(1e-8, abs(numeric) + abs(exact))
            worst = max(worst, error)
        _logger.debug("grad_check array %d: %d entries, max error so far %g", k, len(entries), worst)

    return worst
