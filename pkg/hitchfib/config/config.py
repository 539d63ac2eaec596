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

import os

from omegaconf import OmegaConf

from .lazy import LazyConfig

__all__ = ["try_get_key", "get_config", "CONFIG_ROOT"]

# configs/ of the checkout this package was imported from
CONFIG_ROOT = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(__file__))), "configs")

_MISSING = object()


def try_get_key(cfg, *keys, default=None):
    """Value of the first of ``keys`` present in ``cfg``; ``default`` when none is."""
    for key in keys:
        value = OmegaConf.select(cfg, key, default=_MISSING)
        if value is not _MISSING:
            return value
    return default


def get_config(config_path):
    """
    Load ``configs/<config_path>``, e.g. ``get_config("verify.py")``.

    ``configs/`` under the working directory is searched before the one next to the
    package.

    Raises:
        RuntimeError: when neither directory has the file.
    """
    for root in ("configs", CONFIG_ROOT):
        cfg_file = os.path.join(root, config_path)
        if os.path.exists(cfg_file):
            return LazyConfig.load(cfg_file)
    raise RuntimeError(f"{config_path} is not under configs/")
