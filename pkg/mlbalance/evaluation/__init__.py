# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from .options import BRConfig, MLkNNConfig
from .response import Prediction, EvalReport, MetricDelta
from .binary_relevance import BR_NOTE, BRModel, BinaryRelevanceTrainer, train_br
from .mlknn import MLkNNModel, MLkNNTrainer, train_mlknn
from .metrics import per_label_f1, macro_f, per_label_auc, macro_auc, ranking_loss_metric
from .evaluate import Classifier, predict, train_classifier, evaluate
