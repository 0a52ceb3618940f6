# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

from .options import RunConfig, resolve_run_config, load_config_file
from .response import LeakageAudit, PipelineReport
from .commands import CommandRunner
from .parser import build_parser
from .main import (
    EXIT_OK,
    EXIT_INPUT,
    EXIT_DIVERGED,
    EXIT_NOTHING_TO_SAMPLE,
    EXIT_STARVATION,
    exit_code_for,
    run,
    main,
)
