# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from .utils import (
    create_dirs,
    save_metadata_string,
    read_metadata_string,
    make_dataset,
    labels_with_counts,
    random_dataset,
    imbalanced_dataset,
    ten_instance_fixture,
    six_instance_fixture,
)
