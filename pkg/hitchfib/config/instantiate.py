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
from collections import abc

from omegaconf import ListConfig

from hitchfib.utils.registry import locate

__all__ = ["instantiate"]

logger = logging.getLogger(__name__)


def _resolve_target(target):
    if not isinstance(target, str):
        return target, getattr(target, "__qualname__", repr(target))
    fn = locate(target)
    assert fn is not None, f"cannot locate {target}"
    return fn, target


def instantiate(cfg):
    """
    Build what ``cfg`` describes.

    A list or ListConfig becomes a list of built items. A mapping with ``"_target_"`` is
    a call: its other values are built first, then passed as keyword arguments to the
    target, given as a callable or a dotted path. Anything else is returned unchanged.
    """
    if isinstance(cfg, (list, ListConfig)):
        return [instantiate(item) for item in cfg]
    if not (isinstance(cfg, abc.Mapping) and "_target_" in cfg):
        return cfg

    kwargs = {k: instantiate(v) for k, v in cfg.items() if k != "_target_"}
    fn, label = _resolve_target(cfg["_target_"])
    assert callable(fn), f"_target_ {label} is not callable"
    try:
        return fn(**kwargs)
    except TypeError:
        logger.error(f"cannot build {label} from keys {sorted(kwargs)}")
        raise
