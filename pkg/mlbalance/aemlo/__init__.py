# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from .options import TrainConfig, TUNED_WEIGHT_RANGE
from .response import ForwardOutputs, LossTerms, EpochRecord, TrainingHistory
from .model import (
    AemloModel,
    init_model,
    forward,
    forward_with_cache,
    encode_features,
    decode_features,
    decode_label_scores,
    cross_modal_scores,
)
from .losses import (
    LossWeights,
    loss_embedding,
    loss_embedding_grad,
    reconstruction_error,
    distance_preservation,
    distance_preservation_grad,
    loss_feature,
    loss_label_surrogate,
    loss_label_surrogate_grad,
    ranking_loss_exact,
    total_loss,
    loss_and_gradients,
)
from .thresholds import DEFAULT_THRESHOLD, best_threshold, calibrate_thresholds, binarize, f1_per_label
from .trainer import AemloTrainer, train
from .persistence import (
    MODEL_FORMAT,
    save_model,
    load_model,
    model_to_dict,
    model_from_dict,
    write_loss_log,
)
