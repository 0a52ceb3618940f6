# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

"""
The three-term training objective and its exact gradients.

    total = phi + alpha * psi + beta * gamma

``phi`` aligns the feature and label embeddings while pushing each towards
orthonormal rows, ``psi`` is the feature reconstruction error plus a
pairwise-distance preservation term, and ``gamma`` is a smooth surrogate of
the label ranking loss on the label decoder's logits.
"""

from typing import Tuple

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist, squareform

from ..common import ConfigError, UndefinedMetricError
from ..neural_core import ParamGradients
from .model import AemloModel, encode_backward, forward_with_cache
from .options import TrainConfig
from .response import LossTerms


def _gram_penalty(z: np.ndarray) -> Tuple[float, np.ndarray]:
    C = z @ z.T - np.eye(z.shape[0])
    return float(np.sum(C * C)), C


def loss_embedding(zx: np.ndarray, zy: np.ndarray, lambda_ortho: float) -> float:
    """
    ``||zx - zy||^2 + lambda_ortho * (||zx zx^T - I||^2 + ||zy zy^T - I||^2)``
    with squared Frobenius norms; ``zx`` and ``zy`` are l x b.
    """
    diff = zx - zy
    px, _ = _gram_penalty(zx)
    py, _ = _gram_penalty(zy)
    return float(np.sum(diff * diff)) + lambda_ortho * (px + py)


def loss_embedding_grad(
    zx: np.ndarray, zy: np.ndarray, lambda_ortho: float
) -> Tuple[np.ndarray, np.ndarray]:
    """Gradients of :func:`loss_embedding` with respect to ``zx`` and ``zy``."""
    diff = zx - zy
    _, Cx = _gram_penalty(zx)
    _, Cy = _gram_penalty(zy)
    grad_zx = 2.0 * diff + 4.0 * lambda_ortho * (Cx @ zx)
    grad_zy = -2.0 * diff + 4.0 * lambda_ortho * (Cy @ zy)
    return grad_zx, grad_zy


def _pairwise_sq(X: np.ndarray) -> np.ndarray:
    # columns are instances
    return squareform(pdist(X.T, metric="sqeuclidean"))


def reconstruction_error(Xb: np.ndarray, xrec: np.ndarray) -> float:
    """Summed squared error over every entry of the batch."""
    diff = xrec - Xb
    return float(np.sum(diff * diff))


def distance_preservation(Xb: np.ndarray, xrec: np.ndarray) -> float:
    """
    Mean over ordered pairs i != j of the squared change in squared distance;
    0 for batches of one instance.
    """
    b = Xb.shape[1]
    if b < 2:
        return 0.0
    E = _pairwise_sq(Xb) - _pairwise_sq(xrec)
    return float(np.sum(E * E) / (b * (b - 1)))


def distance_preservation_grad(Xb: np.ndarray, xrec: np.ndarray) -> np.ndarray:
    b = Xb.shape[1]
    if b < 2:
        return np.zeros_like(xrec)
    E = _pairwise_sq(Xb) - _pairwise_sq(xrec)
    laplacian = np.diag(E.sum(axis=1)) - E
    return (-8.0 / (b * (b - 1))) * (xrec @ laplacian)


def loss_feature(Xb: np.ndarray, xrec: np.ndarray, lambda_sim: float) -> float:
    """
    Reconstruction error plus ``lambda_sim`` times the distance-preservation
    term, both over d x b batches.
    """
    return reconstruction_error(Xb, xrec) + lambda_sim * distance_preservation(Xb, xrec)


def _ranking_pairs(Yb: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Mask of positive/negative label pairs per instance (q x q x b, indexed
    [positive, negative, instance]) and the per-instance pair counts.
    """
    positive = Yb > 0.5
    negative = ~positive
    mask = positive[:, None, :] & negative[None, :, :]
    counts = positive.sum(axis=0) * negative.sum(axis=0)
    return mask, counts


def _surrogate_terms(logits: np.ndarray, Yb: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    mask, counts = _ranking_pairs(Yb)
    # gaps[j, k, i] = score of negative k minus score of positive j
    gaps = logits[None, :, :] - logits[:, None, :]
    weights = np.where(counts > 0, 1.0 / np.maximum(counts, 1), 0.0)
    terms = np.where(mask, np.exp(np.where(mask, gaps, 0.0)), 0.0) * weights[None, None, :]
    return terms, counts


def loss_label_surrogate(logits: np.ndarray, Yb: np.ndarray) -> float:
    """
    Sum over instances of the mean of ``exp(score_neg - score_pos)`` over
    their positive/negative label pairs, on pre-sigmoid scores (q x b).
    Instances without a positive or without a negative label contribute 0.
    """
    terms, _ = _surrogate_terms(np.asarray(logits, dtype=np.float64), np.asarray(Yb))
    return float(terms.sum())


def loss_label_surrogate_grad(logits: np.ndarray, Yb: np.ndarray) -> np.ndarray:
    terms, _ = _surrogate_terms(np.asarray(logits, dtype=np.float64), np.asarray(Yb))
    # each pair term raises its negative score and lowers its positive score
    return terms.sum(axis=0) - terms.sum(axis=1)


RANKING_CHUNK = 1024


def ranking_loss_exact(
    scores: np.ndarray, Yb: np.ndarray, chunk_size: int = RANKING_CHUNK
) -> float:
    """
    Fraction of positive/negative label pairs ranked wrongly (negative score
    >= positive score), averaged over instances with at least one positive and
    one negative label. Inputs are q x b.

    Instances are compared ``chunk_size`` at a time, so the pair tensors stay
    at q x q x chunk_size whatever the number of instances.

    Raises:
        UndefinedMetricError: Every instance was skipped.
    """
    scores = np.asarray(scores, dtype=np.float64)
    Yb = np.asarray(Yb)
    if chunk_size < 1:
        raise ConfigError("chunk_size must be at least 1")
    wrong = np.zeros(scores.shape[1], dtype=np.int64)
    counts = np.zeros(scores.shape[1], dtype=np.int64)
    for start in range(0, scores.shape[1], chunk_size):
        part = slice(start, start + chunk_size)
        mask, pairs = _ranking_pairs(Yb[:, part])
        counts[part] = pairs
        block = scores[:, part]
        discordant = (block[:, None, :] <= block[None, :, :]) & mask
        wrong[part] = discordant.sum(axis=(0, 1))
    kept = counts > 0
    if not kept.any():
        raise UndefinedMetricError(
            "ranking loss is undefined: no instance has both a positive and a negative label"
        )
    return float(np.mean(wrong[kept] / counts[kept]))


@dataclass(frozen=True)
class LossWeights:
    """
    Multipliers of the four differentiable pieces of the objective. The
    training weighting is ``from_config``; other settings isolate terms.
    """

    phi: float = 1.0
    m: float = 1.0
    s: float = 1.0
    gamma: float = 1.0

    @classmethod
    def from_config(cls, config: TrainConfig) -> "LossWeights":
        return cls(
            phi=1.0,
            m=config.alpha,
            s=config.alpha * config.lambda_sim,
            gamma=config.beta,
        )


def total_loss(model: AemloModel, Xb: np.ndarray, Yb: np.ndarray, config: TrainConfig) -> float:
    """
    ``phi + alpha * psi + beta * gamma`` on the forward outputs of the batch.
    """
    outputs = forward_with_cache(model, Xb, Yb)[0]
    phi = loss_embedding(outputs.zx, outputs.zy, config.lambda_ortho)
    psi = loss_feature(np.asarray(Xb, dtype=np.float64), outputs.xrec, config.lambda_sim)
    gamma = loss_label_surrogate(outputs.ylogits, Yb)
    return phi + config.alpha * psi + config.beta * gamma


def loss_and_gradients(
    model: AemloModel,
    Xb: np.ndarray,
    Yb: np.ndarray,
    config: TrainConfig,
    weights: LossWeights = None,  # type: ignore
) -> Tuple[LossTerms, ParamGradients]:
    """
    Objective terms on a d x b / q x b batch and the gradient of the weighted
    total with respect to :meth:`AemloModel.parameters`.

    Args:
        model (AemloModel): Current model.
        Xb (np.ndarray): Unit-range features, d x b.
        Yb (np.ndarray): Labels, q x b.
        config (TrainConfig): Supplies the lambdas and, by default, the weights.
        weights (LossWeights): Term multipliers; ``LossWeights.from_config(config)`` when omitted.

    Returns:
        Tuple[LossTerms, ParamGradients]: Unweighted terms with the configured
        total, and gradients of ``sum(weight * term)``.
    """
    if weights is None:
        weights = LossWeights.from_config(config)
    Xb = np.asarray(Xb, dtype=np.float64)
    Yb = np.asarray(Yb, dtype=np.float64)
    outputs, x_cache, y_cache = forward_with_cache(model, Xb, Yb)

    phi = loss_embedding(outputs.zx, outputs.zy, config.lambda_ortho)
    m = reconstruction_error(Xb, outputs.xrec)
    s = distance_preservation(Xb, outputs.xrec)
    gamma = loss_label_surrogate(outputs.ylogits, Yb)
    psi = m + config.lambda_sim * s
    terms = LossTerms(
        phi=phi,
        m=m,
        s=s,
        psi=psi,
        gamma=gamma,
        total=phi + config.alpha * psi + config.beta * gamma,
    )

    grad_zx, grad_zy = loss_embedding_grad(outputs.zx, outputs.zy, config.lambda_ortho)
    grad_zx = weights.phi * grad_zx
    grad_zy = weights.phi * grad_zy

    grad_xrec = weights.m * 2.0 * (outputs.xrec - Xb)
    grad_xrec = grad_xrec + weights.s * distance_preservation_grad(Xb, outputs.xrec)
    grad_zx_dec, fdx_grads = model.fdx.backward(outputs.zx, grad_xrec)

    grad_logits = weights.gamma * loss_label_surrogate_grad(outputs.ylogits, Yb)
    grad_zy_dec, fdy_grads = model.fdy.backward(outputs.zy, grad_logits)

    slope = model.config.leaky_slope
    fex_grads = encode_backward(model.fex, x_cache, grad_zx + grad_zx_dec, slope)
    fey_grads = encode_backward(model.fey, y_cache, grad_zy + grad_zy_dec, slope)
    return terms, fex_grads + fey_grads + fdx_grads + fdy_grads
