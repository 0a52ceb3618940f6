# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from .dataset import MultiLabelDataset, DatasetSplit
from .arff import parse_arff, write_arff, arff_attribute_names
from .dense_csv import parse_dense_csv, write_csv
from .labels_xml import load_label_names_xml, load_label_names_text
from .scaler import FeatureScaler, normalize_features, apply_scaler
from .split import split
from .formats import (
    infer_format,
    read_text,
    load_label_names,
    parse_dataset,
    read_dataset,
    write_dataset,
    write_dataset_file,
)
