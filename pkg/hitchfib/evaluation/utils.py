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

import logging
from collections.abc import Mapping
from numbers import Real

from tabulate import tabulate

__all__ = ["print_csv_format", "flatten_results_dict", "format_table"]

logger = logging.getLogger(__name__)


def print_csv_format(results):
    """
    Log the numeric entries of ``{evaluator: {metric: value}}`` as two csv lines per
    evaluator, names then values. Booleans, lists and nested details are left out.
    """
    for group, metrics in results.items():
        if not isinstance(metrics, Mapping):
            logger.info(f"copypaste: {group}={metrics}")
            continue
        numeric = {
            k: v for k, v in metrics.items() if isinstance(v, Real) and not isinstance(v, bool)
        }
        if numeric:
            logger.info(f"copypaste: Task: {group}")
            logger.info("copypaste: " + ",".join(numeric))
            logger.info("copypaste: " + ",".join(str(v) for v in numeric.values()))


def flatten_results_dict(results, prefix=""):
    """``{"a": {"b": 1}}`` -> ``{"a/b": 1}``, to any depth."""
    flat = {}
    for k, v in results.items():
        key = f"{prefix}{k}"
        if isinstance(v, Mapping):
            flat.update(flatten_results_dict(v, key + "/"))
        else:
            flat[key] = v
    return flat


def format_table(rows, headers) -> str:
    """Markdown table, as written to the log by ``sweep``."""
    return tabulate(rows, headers=headers, tablefmt="pipe")
