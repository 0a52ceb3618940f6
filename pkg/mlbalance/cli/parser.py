# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

import argparse

from .. import __version__
from ..utils import verboselogs

COMMANDS = ("stats", "train", "sample", "eval", "pipeline")


def _verbosity(value: str) -> int:
    return verboselogs.level_from_name(value)


def _add_common(parser: argparse.ArgumentParser) -> None:
    # defaults are None so that unset flags fall through to the config file
    files = parser.add_argument_group("files")
    files.add_argument("--input", help="dataset file (.arff or .csv)")
    files.add_argument("--labels", help="label names: MULAN .xml file or one name per line")
    files.add_argument("--label-count", type=int, help="number of trailing label columns")
    files.add_argument("--format", choices=["arff", "csv"], help="dataset format (default: from extension)")
    files.add_argument("--out", help="output directory")
    files.add_argument("--test-input", help="explicit test dataset for eval")
    files.add_argument("--model", help="trained model JSON for sample")
    files.add_argument("--config", help="JSON settings file (e.g. a resolved_config.json)")

    train = parser.add_argument_group("training")
    train.add_argument("--alpha", type=float)
    train.add_argument("--beta", type=float)
    train.add_argument("--lambda-ortho", type=float)
    train.add_argument("--lambda-sim", type=float)
    train.add_argument("--latent-dim", type=int)
    train.add_argument("--hidden-dim", type=int)
    train.add_argument("--epochs", type=int)
    train.add_argument("--batch-size", type=int)
    train.add_argument("--lr", type=float)

    sample = parser.add_argument_group("sampling")
    sample.add_argument("--p", type=float, help="sampling rate in (0, 1]")
    sample.add_argument("--imr-threshold", type=float)
    sample.add_argument("--max-attempts", type=int)
    sample.add_argument("--sampler", choices=["aemlo", "mlros", "mlrus", "mlsmote", "none"])
    sample.add_argument("--smote-k", type=int, help="neighbors for mlsmote")

    evaluation = parser.add_argument_group("evaluation")
    evaluation.add_argument("--classifier", choices=["br", "mlknn"])
    evaluation.add_argument("--k", type=int, help="neighbors for mlknn")
    evaluation.add_argument("--reg", type=float, help="L2 strength of the BR base learner")
    evaluation.add_argument("--br-epochs", type=int)

    run = parser.add_argument_group("run")
    run.add_argument("--val-frac", type=float)
    run.add_argument("--test-frac", type=float)
    run.add_argument("--seed", type=int)
    run.add_argument("--verbose", type=_verbosity, help="log level number or name, e.g. INFO")


def build_parser() -> argparse.ArgumentParser:
    """
    The ``mlbalance`` argument parser with one sub-command per workflow.
    """
    parser = argparse.ArgumentParser(
        prog="mlbalance",
        description="Measure and correct label imbalance in multi-label datasets.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True
    helps = {
        "stats": "print the imbalance profile of a dataset",
        "train": "train the encoder/decoder model",
        "sample": "write a resampled dataset and its provenance",
        "eval": "evaluate a classifier on a test split",
        "pipeline": "compare a classifier with and without resampling",
    }
    for name in COMMANDS:
        _add_common(commands.add_parser(name, help=helps[name]))
    return parser
