# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import json
from typing import Any, Dict

import numpy as np
import pandas as pd

from ..common import ConfigError
from ..data_io import FeatureScaler
from ..neural_core import layer_from_dict, layer_to_dict
from .model import AemloModel
from .options import TrainConfig
from .response import TrainingHistory

MODEL_FORMAT = "mlbalance.aemlo"
MODEL_VERSION = 1

LOSS_LOG_COLUMNS = ["epoch", "phi", "psi", "gamma", "total", "mean_val_f1"]


def model_to_dict(model: AemloModel) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "config": model.config.to_dict(),
        "layers": {
            "fex": [layer_to_dict(layer) for layer in model.fex],
            "fey": [layer_to_dict(layer) for layer in model.fey],
            "fdx": layer_to_dict(model.fdx),
            "fdy": layer_to_dict(model.fdy),
        },
        "thresholds": model.thresholds.tolist(),
        "scaler": model.scaler.to_dict(),
    }
    if model.feature_names is not None:
        data["feature_names"] = list(model.feature_names)
    if model.label_names is not None:
        data["label_names"] = list(model.label_names)
    return data


def model_from_dict(data: Dict[str, Any]) -> AemloModel:
    if data.get("format") != MODEL_FORMAT:
        raise ConfigError(f"not a model document (format {data.get('format')!r})")
    if data.get("version") != MODEL_VERSION:
        raise ConfigError(f"unsupported model version {data.get('version')!r}")
    layers = data["layers"]
    return AemloModel(
        fex=tuple(layer_from_dict(layer) for layer in layers["fex"]),  # type: ignore
        fey=tuple(layer_from_dict(layer) for layer in layers["fey"]),  # type: ignore
        fdx=layer_from_dict(layers["fdx"]),
        fdy=layer_from_dict(layers["fdy"]),
        thresholds=np.asarray(data["thresholds"], dtype=np.float64),
        scaler=FeatureScaler.from_dict(data["scaler"]),
        config=TrainConfig.from_dict(data["config"]),
        feature_names=data.get("feature_names"),
        label_names=data.get("label_names"),
    )


def save_model(model: AemloModel) -> str:
    """
    Serialize a model to a JSON document. Floats are written with full
    precision, so equal models produce equal documents.
    """
    return json.dumps(model_to_dict(model), sort_keys=True)


def load_model(text: str) -> AemloModel:
    """
    Inverse of :func:`save_model`.

    Raises:
        ConfigError: The document is not a model of a supported version.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError(f"model file is not valid JSON: {err}") from err
    return model_from_dict(data)


def write_loss_log(history: TrainingHistory) -> str:
    """
    Per-epoch losses as CSV with columns
    ``epoch,phi,psi,gamma,total,mean_val_f1``.
    """
    frame = pd.DataFrame(
        [record.to_dict() for record in history.epochs], columns=LOSS_LOG_COLUMNS
    )
    return frame.to_csv(index=False, float_format="%.17g", lineterminator="\n")
