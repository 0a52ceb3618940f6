# Copyright 2024 mlbalance contributors. All Rights Reserved.
# Use of this source code is governed by a MIT license that can be found in the LICENSE file.
# SPDX-License-Identifier: MIT

"""
Extra log levels for :mod:`logging`, used across mlbalance.

Four levels are registered at import time: :data:`SPAM` (per-batch and
per-attempt chatter), :data:`VERBOSE` (intermediate results),
:data:`NOTICE` (an operation finished) and :data:`SUCCESS` (a whole run
finished). :class:`VerboseLogger` adds one method per level.
"""

import logging

SPAM = 5
VERBOSE = 15
NOTICE = 25
SUCCESS = 35

WARNING = logging.WARNING
ERROR = logging.ERROR
FATAL = logging.FATAL
CRITICAL = logging.CRITICAL
INFO = logging.INFO
DEBUG = logging.DEBUG
NOTSET = logging.NOTSET

_CUSTOM_LEVELS = {
    "SPAM": SPAM,
    "VERBOSE": VERBOSE,
    "NOTICE": NOTICE,
    "SUCCESS": SUCCESS,
}


def add_log_level(value: int, name: str) -> None:
    """
    Register a level name with :mod:`logging` and expose it as ``logging.<NAME>``.
    """
    logging.addLevelName(value, name)
    setattr(logging, name, value)


for _name, _value in _CUSTOM_LEVELS.items():
    add_log_level(_value, _name)


def level_from_name(value: str, default: int = WARNING) -> int:
    """
    Resolve a level given either as an integer string or a level name.
    """
    value = value.strip()
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        resolved = logging.getLevelName(value.upper())
        return resolved if isinstance(resolved, int) else default


class VerboseLogger(logging.Logger):
    """
    Logger with :meth:`spam`, :meth:`verbose`, :meth:`notice` and :meth:`success`.

    Instances are created directly rather than through
    :func:`logging.getLogger`, so the root logger is attached as parent here.
    """

    def __init__(self, *args, **kw):
        logging.Logger.__init__(self, *args, **kw)
        self.parent = logging.getLogger()

    def spam(self, msg, *args, **kw):
        """Log ``msg`` at :data:`SPAM`."""
        if self.isEnabledFor(SPAM):
            self._log(SPAM, msg, args, **kw)

    def verbose(self, msg, *args, **kw):
        """Log ``msg`` at :data:`VERBOSE`."""
        if self.isEnabledFor(VERBOSE):
            self._log(VERBOSE, msg, args, **kw)

    def notice(self, msg, *args, **kw):
        """Log ``msg`` at :data:`NOTICE`."""
        if self.isEnabledFor(NOTICE):
            self._log(NOTICE, msg, args, **kw)

    def success(self, msg, *args, **kw):
        """Log ``msg`` at :data:`SUCCESS`."""
        if self.isEnabledFor(SUCCESS):
            self._log(SUCCESS, msg, args, **kw)


def get_logger(name: str, verbose: int = WARNING) -> VerboseLogger:
    """
    Build a :class:`VerboseLogger` with a stream handler at the given level.
    """
    logger = VerboseLogger(name)
    logger.addHandler(logging.StreamHandler())
    logger.setLevel(verbose)
    return logger
