# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import sys
from typing import List, Optional

from ..common import (
    ConfigError,
    DatasetParseError,
    DatasetSchemaError,
    DatasetValidationError,
    DegenerateProfileError,
    DivergedTrainingError,
    GenerationStarvationError,
    MLBalanceError,
    NonFiniteLossError,
    NothingToSampleError,
    ShapeMismatchError,
    UndefinedMetricError,
)
from ..errors import MLBalanceEnvError
from .commands import CommandRunner
from .options import resolve_run_config
from .parser import build_parser

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DIVERGED = 3
EXIT_NOTHING_TO_SAMPLE = 4
EXIT_STARVATION = 5

_INPUT_ERRORS = (
    ConfigError,
    DatasetParseError,
    DatasetSchemaError,
    DatasetValidationError,
    DegenerateProfileError,
    ShapeMismatchError,
    UndefinedMetricError,
    MLBalanceEnvError,
)


def exit_code_for(err: BaseException) -> int:
    """Stable process exit code for an error raised by a command."""
    if isinstance(err, NothingToSampleError):
        return EXIT_NOTHING_TO_SAMPLE
    if isinstance(err, GenerationStarvationError):
        return EXIT_STARVATION
    if isinstance(err, (DivergedTrainingError, NonFiniteLossError)):
        return EXIT_DIVERGED
    if isinstance(err, (_INPUT_ERRORS, OSError)):
        return EXIT_INPUT
    return 1


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse ``argv``, run the command and return its exit code. Errors are
    printed to stderr; reports are printed to stdout as JSON.
    """
    args = build_parser().parse_args(argv)
    flags = vars(args)
    command = flags.pop("command")
    config_path = flags.pop("config", None)

    try:
        config = resolve_run_config(flags, config_path)
        config.check(needs_input=True)
        runner = CommandRunner(config)
        runner.write_resolved_config()
        if command == "stats":
            result = runner.cmd_stats()
        elif command == "train":
            model = runner.cmd_train()
            result = None
            print(f"model written to {config.out} (latent dim {model.latent_dim})")
        elif command == "sample":
            result = runner.cmd_sample()
        elif command == "eval":
            result = runner.cmd_eval()
        else:
            result = runner.cmd_pipeline()
    except (MLBalanceError, OSError) as err:
        print(str(err), file=sys.stderr)
        return exit_code_for(err)

    if result is not None:
        print(result.to_strict_json(indent=2))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> None:
    """Console entry point."""
    sys.exit(run(argv))
