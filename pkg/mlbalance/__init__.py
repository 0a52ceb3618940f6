# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

"""
Imbalance measurement, encoder/decoder oversampling and evaluation for
multi-label datasets.
"""

# version
__version__ = "0.1.0"

# options and errors
from .options import MLBalanceOptions, OptionsFromEnv
from .errors import MLBalanceEnvError

# shared
from .utils import verboselogs
from .common import (
    MLBalanceError,
    DatasetParseError,
    DatasetValidationError,
    DatasetSchemaError,
    DegenerateProfileError,
    ShapeMismatchError,
    NonFiniteLossError,
    StaleOptimizerStateError,
    DivergedTrainingError,
    NothingToSampleError,
    GenerationStarvationError,
    UndefinedMetricError,
    ConfigError,
    BaseResponse,
    DatasetFormat,
    SamplerKind,
    ClassifierKind,
    TextSource,
    PathSource,
    DatasetSource,
    round_half_up,
    substream,
)

# data
from .data_io import (
    MultiLabelDataset,
    DatasetSplit,
    FeatureScaler,
    parse_arff,
    parse_dense_csv,
    parse_dataset,
    read_dataset,
    write_dataset,
    write_dataset_file,
    load_label_names,
    load_label_names_xml,
    split,
    normalize_features,
    apply_scaler,
)

# imbalance
from .imbalance import (
    ImbalanceProfile,
    StatsReport,
    compute_profile,
    minority_labels,
    majority_labels,
    minority_instances,
    stats_report,
)

# network substrate
from .neural_core import (
    DenseLayer,
    AdamState,
    dense_forward,
    init_params,
    adam_init,
    adam_step,
    grad_check,
    leaky_relu,
    sigmoid,
)

# model
from .aemlo import (
    TrainConfig,
    AemloModel,
    ForwardOutputs,
    EpochRecord,
    TrainingHistory,
    AemloTrainer,
    forward,
    loss_embedding,
    loss_feature,
    loss_label_surrogate,
    ranking_loss_exact,
    total_loss,
    loss_and_gradients,
    train,
    calibrate_thresholds,
    binarize,
    save_model,
    load_model,
    write_loss_log,
)

# sampling
from .sampler import (
    SamplingConfig,
    SyntheticInstance,
    SamplingResult,
    Provenance,
    AemloSampler,
    generate,
    augment,
    mlros,
    mlrus,
    mlsmote,
)

# evaluation
from .evaluation import (
    BRConfig,
    MLkNNConfig,
    Prediction,
    EvalReport,
    BRModel,
    MLkNNModel,
    train_br,
    train_mlknn,
    predict,
    macro_f,
    macro_auc,
    ranking_loss_metric,
    evaluate,
)

__all__ = [
    "__version__",
    "MLBalanceOptions",
    "OptionsFromEnv",
    "MLBalanceEnvError",
    "verboselogs",
    "MLBalanceError",
    "DatasetParseError",
    "DatasetValidationError",
    "DatasetSchemaError",
    "DegenerateProfileError",
    "ShapeMismatchError",
    "NonFiniteLossError",
    "StaleOptimizerStateError",
    "DivergedTrainingError",
    "NothingToSampleError",
    "GenerationStarvationError",
    "UndefinedMetricError",
    "ConfigError",
    "BaseResponse",
    "DatasetFormat",
    "SamplerKind",
    "ClassifierKind",
    "TextSource",
    "PathSource",
    "DatasetSource",
    "round_half_up",
    "substream",
    "MultiLabelDataset",
    "DatasetSplit",
    "FeatureScaler",
    "parse_arff",
    "parse_dense_csv",
    "parse_dataset",
    "read_dataset",
    "write_dataset",
    "write_dataset_file",
    "load_label_names",
    "load_label_names_xml",
    "split",
    "normalize_features",
    "apply_scaler",
    "ImbalanceProfile",
    "StatsReport",
    "compute_profile",
    "minority_labels",
    "majority_labels",
    "minority_instances",
    "stats_report",
    "DenseLayer",
    "AdamState",
    "dense_forward",
    "init_params",
    "adam_init",
    "adam_step",
    "grad_check",
    "leaky_relu",
    "sigmoid",
    "TrainConfig",
    "AemloModel",
    "ForwardOutputs",
    "EpochRecord",
    "TrainingHistory",
    "AemloTrainer",
    "forward",
    "loss_embedding",
    "loss_feature",
    "loss_label_surrogate",
    "ranking_loss_exact",
    "total_loss",
    "loss_and_gradients",
    "train",
    "calibrate_thresholds",
    "binarize",
    "save_model",
    "load_model",
    "write_loss_log",
    "SamplingConfig",
    "SyntheticInstance",
    "SamplingResult",
    "Provenance",
    "AemloSampler",
    "generate",
    "augment",
    "mlros",
    "mlrus",
    "mlsmote",
    "BRConfig",
    "MLkNNConfig",
    "Prediction",
    "EvalReport",
    "BRModel",
    "MLkNNModel",
    "train_br",
    "train_mlknn",
    "predict",
    "macro_f",
    "macro_auc",
    "ranking_loss_metric",
    "evaluate",
]
