# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from typing import Union
from typing_extensions import TypedDict


class TextSource(TypedDict):
    """
    A dataset document already held in memory.

    Attributes:
        text (str): The full document text.
    """

    text: str


class PathSource(TypedDict):
    """
    A dataset document on the local filesystem.

    Attributes:
        path (str): Path to the file; read as UTF-8.
    """

    path: str


DatasetSource = Union[TextSource, PathSource]


def is_text_source(provided_source: DatasetSource) -> bool:
    """
    Check if the provided source is an in-memory text source.
    """
    return "text" in provided_source


def is_path_source(provided_source: DatasetSource) -> bool:
    """
    Check if the provided source is a filesystem path source.
    """
    return "path" in provided_source
