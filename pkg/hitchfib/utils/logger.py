# coding=utf-8
# Copyright 2022 The HitchFib Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import atexit
import functools
import logging
import os
import sys
import time
from collections import Counter
from typing import Dict, Hashable, Optional, Tuple

from termcolor import colored

__all__ = ["setup_logger", "log_first_n", "log_every_n_seconds"]

ROOT = "hitchfib"
_DATEFMT = "%m/%d %H:%M:%S"
_LEVEL_PREFIX = {
    logging.WARNING: colored("WARNING", "yellow", attrs=["bold"]),
    logging.ERROR: colored("ERROR", "red", attrs=["bold", "underline"]),
    logging.CRITICAL: colored("CRITICAL", "red", attrs=["bold", "underline"]),
}


class _ColorfulFormatter(logging.Formatter):
    """Green ``[time module]`` header, with ``hitchfib.`` shortened to ``hf.``."""

    def __init__(self, root_name: str, abbrev_name: str):
        super().__init__(colored("[%(asctime)s %(name)s]: ", "green") + "%(message)s", _DATEFMT)
        self._root = root_name + "."
        self._abbrev = abbrev_name + "." if abbrev_name else ""

    def formatMessage(self, record):
        if record.name.startswith(self._root):
            record.name = self._abbrev + record.name[len(self._root) :]
        line = super().formatMessage(record)
        prefix = _LEVEL_PREFIX.get(record.levelno)
        return f"{prefix} {line}" if prefix else line


def _log_file(output: str) -> str:
    if output.endswith((".txt", ".log")):
        return output
    return os.path.join(output, "log.txt")


@functools.lru_cache(maxsize=None)
def _open_log(filename: str):
    dirname = os.path.dirname(filename)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    stream = open(filename, "a")
    atexit.register(stream.close)
    return stream


@functools.lru_cache()  # one set of handlers per (output, level) no matter how often called
def setup_logger(output=None, *, color=True, name=ROOT, abbrev_name=None, level="INFO"):
    """
    Configure the ``hitchfib`` logger for a run.

    Console records go to stderr so that a report written to stdout stays valid JSON.
    With ``output`` set, every record down to DEBUG is also appended to ``output`` when it
    ends in ``.txt`` or ``.log``, and to ``output/log.txt`` otherwise.

    Args:
        output (str): log file or directory; no file when None.
        color (bool): colored console records.
        name (str): logger to configure.
        abbrev_name (str): replaces ``name`` in record names; "hf" for the package logger.
        level (str or int): console level.
    """
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    if abbrev_name is None:
        abbrev_name = "hf" if name == ROOT else name
    plain = logging.Formatter("[%(asctime)s] %(name)s %(levelname)s: %(message)s", _DATEFMT)

    console = logging.StreamHandler(stream=sys.stderr)
    console.setLevel(logging.getLevelName(level) if isinstance(level, str) else level)
    console.setFormatter(_ColorfulFormatter(name, abbrev_name) if color else plain)
    logger.addHandler(console)

    if output is not None:
        logfile = logging.StreamHandler(_open_log(_log_file(output)))
        logfile.setLevel(logging.DEBUG)
        logfile.setFormatter(plain)
        logger.addHandler(logfile)
    return logger


def _caller() -> Tuple[str, Hashable]:
    """Module name and call site of the first frame outside this file."""
    frame = sys._getframe(2)
    while frame is not None:
        code = frame.f_code
        if code.co_filename != __file__:
            module = frame.f_globals.get("__name__", ROOT)
            return (ROOT if module == "__main__" else module), (code.co_filename, frame.f_lineno)
        frame = frame.f_back
    return ROOT, None


_COUNTS: Counter = Counter()
_LAST_LOGGED: Dict[Hashable, float] = {}


def log_first_n(lvl, msg, n=1, *, name=None, key="caller"):
    """
    Emit ``msg`` for the first ``n`` occurrences only.

    ``key`` is "caller", "message" or both, and decides what counts as an occurrence:
    the same call site, the same text, or the same text from the same call site.
    """
    keys = (key,) if isinstance(key, str) else tuple(key)
    assert keys and set(keys) <= {"caller", "message"}, key
    module, site = _caller()
    hash_key = (site if "caller" in keys else None, msg if "message" in keys else None)
    _COUNTS[hash_key] += 1
    if _COUNTS[hash_key] <= n:
        logging.getLogger(name or module).log(lvl, msg)


def log_every_n_seconds(lvl, msg, n=1, *, name=None) -> Optional[float]:
    """Emit ``msg`` at most once every ``n`` seconds per call site; returns the emit time."""
    module, site = _caller()
    now = time.perf_counter()
    last = _LAST_LOGGED.get(site)
    if last is not None and now - last < n:
        return None
    logging.getLogger(name or module).log(lvl, msg)
    _LAST_LOGGED[site] = now
    return now
