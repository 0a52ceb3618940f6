# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import List
import xml.etree.ElementTree as ET

from ..common import DatasetParseError, DatasetSchemaError


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def load_label_names_xml(text: str) -> List[str]:
    """
    Read label names from a MULAN labels file.

    Only the top-level ``label`` elements are used; nested labels of a
    hierarchy are ignored. Namespaces are stripped from tag names.

    Raises:
        DatasetParseError: The document is not well-formed XML.
        DatasetSchemaError: No label elements, a label without ``name``, or duplicates.
    """
    try:
        root = ET.fromstring(text)
    except ET.ParseError as err:
        line = err.position[0] if err.position else 0
        raise DatasetParseError(f"invalid labels XML: {err}", line=line) from err

    names: List[str] = []
    for child in root:
        if _local(child.tag) != "label":
            continue
        name = child.get("name")
        if not name:
            raise DatasetSchemaError("label element without a name attribute")
        names.append(name)

    if not names:
        raise DatasetSchemaError("labels XML declares no label elements")
    if len(set(names)) != len(names):
        raise DatasetSchemaError("labels XML declares duplicate names")
    return names


def load_label_names_text(text: str) -> List[str]:
    """
    Read label names from a plain list, one name per line; blank lines and
    ``#`` comments are skipped.
    """
    names = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not names:
        raise DatasetSchemaError("label list is empty")
    return names
