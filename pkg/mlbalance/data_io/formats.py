# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import os
from typing import List, Optional, Sequence, Union

from ..common import (
    ConfigError,
    DatasetFormat,
    DatasetSchemaError,
    DatasetSource,
    is_path_source,
    is_text_source,
)
from .arff import arff_attribute_names, parse_arff, write_arff
from .dataset import MultiLabelDataset
from .dense_csv import parse_dense_csv, write_csv
from .labels_xml import load_label_names_text, load_label_names_xml


def infer_format(path: str) -> DatasetFormat:
    """
    Dataset format from a file extension (``.arff`` or ``.csv``).

    Raises:
        ConfigError: Unknown extension.
    """
    ext = os.path.splitext(path)[1].lower().lstrip(".")
    try:
        return DatasetFormat(ext)
    except ValueError as err:
        raise ConfigError(
            f"cannot infer dataset format from '{path}'; use .arff or .csv or pass a format"
        ) from err


def read_text(source: DatasetSource) -> str:
    """
    Document text of an in-memory or on-disk source.
    """
    if is_text_source(source):
        return source["text"]  # type: ignore
    if is_path_source(source):
        with open(source["path"], "r", encoding="utf-8") as file:  # type: ignore
            return file.read()
    raise ConfigError("dataset source must provide 'text' or 'path'")


def load_label_names(path: str) -> List[str]:
    """
    Label names from a MULAN ``.xml`` labels file or a plain one-per-line list.
    """
    text = read_text({"path": path})
    if path.lower().endswith(".xml"):
        return load_label_names_xml(text)
    return load_label_names_text(text)


def parse_dataset(
    text: str,
    fmt: Union[DatasetFormat, str],
    label_names: Optional[Sequence[str]] = None,
    label_count: Optional[int] = None,
) -> MultiLabelDataset:
    """
    Parse a document in either supported format.

    ARFF needs label names; with only ``label_count`` the last ``label_count``
    declared attributes are the labels. CSV needs a count; with names the
    trailing header cells must match them.

    Raises:
        ConfigError: Neither label names nor a label count were given.
    """
    fmt = DatasetFormat(str(fmt).lower())
    if label_names is None and label_count is None:
        raise ConfigError("either label names or a label count is required")

    if fmt == DatasetFormat.ARFF:
        if label_names is None:
            declared = arff_attribute_names(text)
            if not 1 <= int(label_count) < len(declared):  # type: ignore
                raise DatasetSchemaError(
                    f"label count {label_count} does not fit {len(declared)} attributes"
                )
            label_names = declared[-int(label_count):]  # type: ignore
        return parse_arff(text, label_names)

    count = len(label_names) if label_names is not None else int(label_count)  # type: ignore
    dataset = parse_dense_csv(text, count)
    if label_names is not None and dataset.label_names != list(label_names):
        raise DatasetSchemaError(
            f"CSV label columns {dataset.label_names} do not match {list(label_names)}"
        )
    return dataset


def read_dataset(
    source: Union[DatasetSource, str],
    fmt: Optional[Union[DatasetFormat, str]] = None,
    label_names: Optional[Sequence[str]] = None,
    label_count: Optional[int] = None,
) -> MultiLabelDataset:
    """
    Read a dataset from a path (or a :class:`DatasetSource`), inferring the
    format from the extension when ``fmt`` is omitted.
    """
    if isinstance(source, str):
        source = {"path": source}
    if fmt is None:
        if not is_path_source(source):
            raise ConfigError("format is required for in-memory sources")
        fmt = infer_format(source["path"])  # type: ignore
    return parse_dataset(read_text(source), fmt, label_names, label_count)


def write_dataset(dataset: MultiLabelDataset, fmt: Union[DatasetFormat, str]) -> str:
    """
    Serialize a dataset; ``parse_dataset`` of the result reproduces it.
    """
    fmt = DatasetFormat(str(fmt).lower())
    if fmt == DatasetFormat.ARFF:
        return write_arff(dataset)
    return write_csv(dataset)


def write_dataset_file(
    dataset: MultiLabelDataset,
    path: str,
    fmt: Optional[Union[DatasetFormat, str]] = None,
) -> str:
    """
    Write a dataset to ``path``; returns the path written.
    """
    fmt = infer_format(path) if fmt is None else fmt
    with open(path, "w", encoding="utf-8", newline="") as file:
        file.write(write_dataset(dataset, fmt))
    return path
