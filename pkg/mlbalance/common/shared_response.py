# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import json
import math
from typing import Any, Dict

from dataclasses import dataclass
from dataclasses_json import DataClassJsonMixin


def finite_or_none(value: Any) -> Any:
    """
    Recursively replace NaN and infinite floats with None so the value is strict JSON.
    """
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {k: finite_or_none(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [finite_or_none(v) for v in value]
    return value


@dataclass
class BaseResponse(DataClassJsonMixin):
    """
    Common base for configs and reports: dict-style access, dot-path lookup and
    JSON rendering with non-finite numbers written as null.
    """

    def __getitem__(self, key):
        _dict = self.to_dict()
        return _dict[key]

    def __setitem__(self, key, val):
        self.__dict__[key] = val

    def __str__(self) -> str:
        return self.to_strict_json(indent=4)

    def to_strict_json(self, indent: int = 2) -> str:
        """
        Render as JSON; NaN and infinities become null.
        """
        return json.dumps(finite_or_none(self.to_dict()), indent=indent, allow_nan=False)

    def eval(self, key: str) -> str:
        """
        Look up a value with a dot path such as ``per_label.0.irlbl``.
        """
        keys = key.split(".")
        result: Dict[Any, Any] = self.to_dict()
        for k in keys:
            if isinstance(result, dict) and k in result:
                result = result[k]
            elif isinstance(result, list) and k.isdigit() and int(k) < len(result):
                result = result[int(k)]
            else:
                return ""
        return str(result)
