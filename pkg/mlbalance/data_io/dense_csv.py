# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import io
import re

import numpy as np
import pandas as pd

from ..common import DatasetParseError, DatasetSchemaError, DatasetValidationError
from .dataset import MultiLabelDataset

_MISSING_TOKENS = {"", "?", "nan", "na", "null"}
_TOKENIZER_LINE = re.compile(r"in line (\d+)")


def _data_row(err: Exception) -> int:
    # the tokenizer counts the header as line 1
    match = _TOKENIZER_LINE.search(str(err))
    return max(int(match.group(1)) - 1, 0) if match else 0


def parse_dense_csv(text: str, label_count: int) -> MultiLabelDataset:
    """
    Parse a dense, comma separated document with a header row. The last
    ``label_count`` columns are labels.

    Args:
        text (str): The CSV document (UTF-8 text).
        label_count (int): Number of trailing label columns.

    Returns:
        MultiLabelDataset: The parsed dataset.

    Raises:
        DatasetParseError: Ragged rows or non-numeric cells (data row and column named).
        DatasetValidationError: Label cell outside {0,1}, missing or non-finite value.
        DatasetSchemaError: Missing header, no rows, or a label count leaving no features.
    """
    try:
        frame = pd.read_csv(
            io.StringIO(text),
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=True,
        )
    except pd.errors.EmptyDataError as err:
        raise DatasetSchemaError("document has no header row") from err
    except pd.errors.ParserError as err:
        raise DatasetParseError(f"ragged row: {err}".strip(), line=_data_row(err)) from err

    header = [str(name) for name in frame.iloc[0].tolist()]
    body = frame.iloc[1:].reset_index(drop=True)
    total = len(header)
    if label_count < 1 or label_count >= total:
        raise DatasetSchemaError(
            f"label count {label_count} leaves {total - label_count} feature columns; "
            "need at least one feature and one label"
        )
    if body.empty:
        raise DatasetSchemaError("document contains no data rows")

    # absent trailing cells come back as NaN, present-but-empty ones as ""
    absent = body.isna().to_numpy()
    if absent.any():
        row = int(np.argwhere(absent)[0][0])
        raise DatasetParseError(
            f"ragged row: expected {total} values", line=row + 1
        )

    coerced = body.apply(lambda col: pd.to_numeric(col, errors="coerce"))
    bad = coerced.isna().to_numpy()
    if bad.any():
        row, col = (int(v) for v in np.argwhere(bad)[0])
        cell = str(body.iat[row, col]).strip()
        if cell.lower() in _MISSING_TOKENS:
            raise DatasetValidationError(
                f"missing value in data row {row + 1}, column '{header[col]}'"
            )
        raise DatasetParseError(
            f"non-numeric cell '{cell}'", line=row + 1, column=header[col]
        )

    matrix = np.array(body.to_numpy(dtype=object).tolist(), dtype=np.float64)
    if not np.all(np.isfinite(matrix)):
        row, col = (int(v) for v in np.argwhere(~np.isfinite(matrix))[0])
        raise DatasetValidationError(
            f"non-finite value in data row {row + 1}, column '{header[col]}'"
        )

    d = total - label_count
    Y = matrix[:, d:]
    not_binary = ~((Y == 0.0) | (Y == 1.0))
    if not_binary.any():
        row, col = (int(v) for v in np.argwhere(not_binary)[0])
        raise DatasetValidationError(
            f"label '{header[d + col]}' has value {Y[row, col]!r} in data row {row + 1}; "
            "expected 0 or 1"
        )

    return MultiLabelDataset(
        X=matrix[:, :d],
        Y=Y.astype(np.int64),
        feature_names=header[:d],
        label_names=header[d:],
    )


def write_csv(dataset: MultiLabelDataset) -> str:
    """
    Render a dataset as CSV with a header row, features first (17 significant
    digits) and labels last as 0/1.
    """
    features = pd.DataFrame(dataset.X, columns=dataset.feature_names)
    labels = pd.DataFrame(dataset.Y, columns=dataset.label_names)
    frame = pd.concat([features, labels], axis=1)
    return frame.to_csv(index=False, float_format="%.17g", lineterminator="\n")
