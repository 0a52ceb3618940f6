# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import math
import zlib

import numpy as np

# named random streams fanned out from a root seed
SPLIT_STREAM = "split"
INIT_STREAM = "init"
SHUFFLE_STREAM = "shuffle"
SAMPLER_STREAM = "sampler"
CLASSIFIER_STREAM = "classifier"


def round_half_up(value: float) -> int:
    """
    Round to the nearest integer, halves going up (2.5 -> 3).
    """
    return int(math.floor(value + 0.5))


def substream(seed: int, name: str) -> np.random.Generator:
    """
    Returns an independent generator for the named stream of a root seed.

    The same (seed, name) pair always yields the same sequence, and distinct
    names never share state, so components can be reproduced in isolation.
    """
    key = zlib.crc32(name.encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence([int(seed), key]))
