# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from .options import SamplingConfig, ATTEMPTS_PER_INSTANCE
from .response import SyntheticInstance, SamplingResult, Provenance
from .generator import AemloSampler, generate, augment
from .baselines import DEFAULT_NEIGHBORS, mlros, mlrus, mlsmote
