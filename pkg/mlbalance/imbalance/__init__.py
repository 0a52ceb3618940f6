# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from .response import ImbalanceProfile, LabelStats, StatsReport
from .profile import (
    DEFAULT_IMR_THRESHOLD,
    compute_profile,
    minority_labels,
    majority_labels,
    minority_instances,
    stats_report,
)
