# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

"""
ARFF reading and writing for multi-label data in the MULAN layout.

Supported attribute types are numeric (``numeric``, ``real``, ``integer``)
and the binary nominal ``{0,1}``. Dense and sparse data rows are accepted;
missing values (``?``) are rejected.
"""

import math
import re
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..common import DatasetParseError, DatasetSchemaError, DatasetValidationError
from .dataset import MultiLabelDataset

_RELATION = re.compile(r"^@relation\s+(.+)$", re.IGNORECASE)
_ATTRIBUTE = re.compile(
    r"""^@attribute\s+('[^']*'|"[^"]*"|\S+)\s+(.+)$""", re.IGNORECASE
)
_DATA = re.compile(r"^@data\s*$", re.IGNORECASE)
_NUMERIC_TYPES = {"numeric", "real", "integer"}
_NEEDS_QUOTES = re.compile(r"""[\s,{}%'"]""")


def _unquote(token: str) -> str:
    token = token.strip()
    if len(token) >= 2 and token[0] == token[-1] and token[0] in "'\"":
        return token[1:-1]
    return token


def _quote(name: str) -> str:
    if not _NEEDS_QUOTES.search(name):
        return name
    return f"\"{name}\"" if "'" in name else f"'{name}'"


def _parse_type(spec: str, lineno: int) -> bool:
    """Returns True for a binary nominal attribute, False for numeric."""
    spec = spec.strip()
    if spec.lower() in _NUMERIC_TYPES:
        return False
    if spec.startswith("{") and spec.endswith("}"):
        values = {_unquote(v) for v in spec[1:-1].split(",") if v.strip()}
        if values <= {"0", "1"}:
            return True
    raise DatasetParseError(f"unsupported attribute type '{spec}'", line=lineno)


def _to_float(token: str, name: str, lineno: int) -> float:
    token = _unquote(token)
    if token == "?":
        raise DatasetValidationError(
            f"missing value for attribute '{name}' on line {lineno}"
        )
    try:
        value = float(token)
    except ValueError as err:
        raise DatasetParseError(
            f"non-numeric value '{token}' for attribute '{name}'",
            line=lineno,
            column=name,
        ) from err
    if not math.isfinite(value):
        raise DatasetValidationError(
            f"non-finite value '{token}' for attribute '{name}' on line {lineno}"
        )
    return value


def _dense_row(
    body: str, names: List[str], lineno: int
) -> List[float]:
    cells = body.split(",")
    if len(cells) != len(names):
        raise DatasetParseError(
            f"expected {len(names)} values, found {len(cells)}", line=lineno
        )
    return [_to_float(cell, names[j], lineno) for j, cell in enumerate(cells)]


def _sparse_row(
    body: str, names: List[str], lineno: int
) -> List[float]:
    inner = body.strip()[1:-1].strip()
    row = [0.0] * len(names)
    if not inner:
        return row
    for pair in inner.split(","):
        parts = pair.split()
        if len(parts) != 2:
            raise DatasetParseError(f"malformed sparse entry '{pair.strip()}'", line=lineno)
        try:
            index = int(parts[0])
        except ValueError as err:
            raise DatasetParseError(
                f"sparse index '{parts[0]}' is not an integer", line=lineno
            ) from err
        if not 0 <= index < len(names):
            raise DatasetParseError(f"sparse index {index} out of range", line=lineno)
        row[index] = _to_float(parts[1], names[index], lineno)
    return row


def parse_arff(text: str, label_names: Sequence[str]) -> MultiLabelDataset:
    """
    Parse an ARFF document into a :class:`MultiLabelDataset`.

    Attributes named in ``label_names`` become the label columns, in
    ``label_names`` order; every other attribute becomes a feature column in
    declaration order.

    Args:
        text (str): The ARFF document.
        label_names (Sequence[str]): Names of the label attributes.

    Returns:
        MultiLabelDataset: The parsed dataset.

    Raises:
        DatasetParseError: Malformed header or row (carries the line number).
        DatasetValidationError: Label value outside {0,1}, missing or non-finite value.
        DatasetSchemaError: Unknown or duplicate label name, or no data rows.
    """
    relation = "mlbalance"
    names: List[str] = []
    rows: List[List[float]] = []
    row_lines: List[int] = []
    in_data = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if in_data:
            if line.startswith("{") and line.endswith("}"):
                rows.append(_sparse_row(line, names, lineno))
            elif line.startswith("{"):
                raise DatasetParseError("unterminated sparse row", line=lineno)
            else:
                rows.append(_dense_row(line, names, lineno))
            row_lines.append(lineno)
            continue

        if _DATA.match(line):
            if not names:
                raise DatasetParseError("@data before any @attribute", line=lineno)
            in_data = True
            continue
        match = _RELATION.match(line)
        if match:
            relation = _unquote(match.group(1))
            continue
        match = _ATTRIBUTE.match(line)
        if match:
            name = _unquote(match.group(1))
            if name in names:
                raise DatasetSchemaError(f"duplicate attribute '{name}' on line {lineno}")
            names.append(name)
            _parse_type(match.group(2), lineno)
            continue
        raise DatasetParseError(f"unrecognized header line '{line}'", line=lineno)

    if not in_data:
        raise DatasetParseError("missing @data section", line=0)
    if not rows:
        raise DatasetSchemaError("document contains no data rows")

    label_names = list(label_names)
    if len(set(label_names)) != len(label_names):
        raise DatasetSchemaError("label names must be unique")
    position: Dict[str, int] = {name: j for j, name in enumerate(names)}
    unknown = [name for name in label_names if name not in position]
    if unknown:
        raise DatasetSchemaError(f"unknown label attribute(s): {', '.join(unknown)}")

    label_cols = [position[name] for name in label_names]
    label_set = set(label_cols)
    feature_cols = [j for j in range(len(names)) if j not in label_set]

    matrix = np.asarray(rows, dtype=np.float64)
    Y = matrix[:, label_cols]
    bad = ~((Y == 0.0) | (Y == 1.0))
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise DatasetValidationError(
            f"label '{label_names[j]}' has value {Y[i, j]!r} on line {row_lines[i]}; "
            "expected 0 or 1"
        )

    return MultiLabelDataset(
        X=matrix[:, feature_cols],
        Y=Y.astype(np.int64),
        feature_names=[names[j] for j in feature_cols],
        label_names=label_names,
        relation=relation,
    )


def write_arff(dataset: MultiLabelDataset, sparse: bool = False) -> str:
    """
    Render a dataset as ARFF: features as ``numeric``, labels as ``{0,1}``
    declared after the features. Features are printed with 17 significant digits.

    Args:
        dataset (MultiLabelDataset): The dataset to render.
        sparse (bool): Write ``{index value, ...}`` rows omitting zeros.

    Returns:
        str: The ARFF document.
    """
    lines = [f"@relation {_quote(dataset.relation)}", ""]
    lines.extend(f"@attribute {_quote(name)} numeric" for name in dataset.feature_names)
    lines.extend(f"@attribute {_quote(name)} {{0,1}}" for name in dataset.label_names)
    lines.extend(["", "@data"])

    for x, y in zip(dataset.X, dataset.Y):
        cells: List[Tuple[float, str]] = [(float(v), format(float(v), ".17g")) for v in x]
        cells.extend((float(v), str(int(v))) for v in y)
        if sparse:
            kept = [f"{j} {text}" for j, (value, text) in enumerate(cells) if value != 0.0]
            lines.append("{" + ", ".join(kept) + "}")
        else:
            lines.append(",".join(text for _, text in cells))
    return "\n".join(lines) + "\n"


def arff_attribute_names(text: str) -> List[str]:
    """
    Attribute names declared in an ARFF header, in declaration order. Used to
    pick the trailing attributes as labels when only a label count is known.
    """
    names: List[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if _DATA.match(line):
            break
        match = _ATTRIBUTE.match(line)
        if match:
            names.append(_unquote(match.group(1)))
            _parse_type(match.group(2), lineno)
    return names
