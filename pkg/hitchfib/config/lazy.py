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

import ast
import inspect
import logging
import os
from collections import abc
from copy import deepcopy
from dataclasses import is_dataclass
from typing import Any, Dict, List, Tuple, Union

import cloudpickle
import yaml
from omegaconf import DictConfig, ListConfig, OmegaConf

from hitchfib.utils.registry import _convert_target_to_string

__all__ = ["LazyCall", "LazyConfig"]

logger = logging.getLogger(__name__)

Keys = Union[None, str, Tuple[str, ...]]
_CONFIG_SUFFIXES = (".py", ".yaml", ".yml")


class LazyCall:
    """
    Record a call as a config node instead of making it.

    .. code-block:: python

        from hitchfib.config import instantiate, LazyCall
        from hitchfib.evaluation import AgreementEvaluator

        evaluator_cfg = LazyCall(AgreementEvaluator)(max_details=50)
        evaluator_cfg.max_details = 10
        evaluator = instantiate(evaluator_cfg)
    """

    def __init__(self, target):
        if not (callable(target) or isinstance(target, (str, abc.Mapping))):
            raise TypeError(f"LazyCall needs a callable or a path to one, got {target!r}")
        self._target = target

    def __call__(self, **kwargs) -> DictConfig:
        # omegaconf cannot hold a dataclass type, only its dotted path
        target = _convert_target_to_string(self._target) if is_dataclass(self._target) else None
        kwargs["_target_"] = target or self._target
        return _as_config(kwargs)


def _as_config(obj):
    return DictConfig(obj, flags={"allow_objects": True}) if isinstance(obj, dict) else obj


def _config_nodes(cfg):
    """Every DictConfig in ``cfg``, depth first."""
    if isinstance(cfg, DictConfig):
        yield cfg
        for v in cfg.values():
            yield from _config_nodes(v)
    elif isinstance(cfg, ListConfig):
        for v in cfg:
            yield from _config_nodes(v)


def _exec_python_config(filename: str) -> Dict[str, Any]:
    with open(filename, "r", encoding="utf-8") as f:
        source = f.read()
    try:
        ast.parse(source)
    except SyntaxError as e:
        raise SyntaxError(f"config file {filename} has a syntax error") from e
    namespace = {"__file__": filename, "__name__": "hitchfib._cfg_loader"}
    # the real filename lets load_rel inside the config find its siblings
    exec(compile(source, filename, "exec"), namespace)
    return namespace


def _read_yaml_config(filename: str) -> DictConfig:
    with open(filename, "r", encoding="utf-8") as f:
        return OmegaConf.create(yaml.unsafe_load(f), flags={"allow_objects": True})


def _targets_to_strings(cfg):
    for node in _config_nodes(cfg):
        if callable(node.get("_target_")):
            try:
                node._target_ = _convert_target_to_string(node._target_)
            except AttributeError:
                pass


def _dump_yaml(cfg, filename: str) -> bool:
    """Write ``cfg`` as yaml; False when the file cannot be loaded back."""
    dumped = yaml.dump(
        OmegaConf.to_container(cfg, resolve=False),
        default_flow_style=None,
        allow_unicode=True,
        width=9999,
    )
    with open(filename, "w") as f:
        f.write(dumped)
    try:
        yaml.unsafe_load(dumped)
    except Exception:
        logger.warning(f"{filename} is readable but does not load back as a config")
        return False
    return True


class LazyConfig:
    """
    Python or yaml config files as omegaconf objects.

    A python config is executed and its public top-level dicts and configs become the
    keys of the result, so ``configs/verify.py`` yields ``run`` and ``evaluation``.
    """

    @staticmethod
    def load_rel(filename: str, keys: Keys = None):
        """:meth:`load` with ``filename`` relative to the calling config file."""
        caller = inspect.stack()[1][0].f_code.co_filename
        assert caller != "<string>", "load_rel cannot locate the calling file"
        return LazyConfig.load(os.path.join(os.path.dirname(caller), filename), keys)

    @staticmethod
    def load(filename: str, keys: Keys = None):
        """
        Args:
            filename: a ``.py``, ``.yaml`` or ``.yml`` file.
            keys: one key or a tuple of keys to return instead of the whole config.
        """
        filename = filename.replace("/./", "/")
        if not filename.endswith(_CONFIG_SUFFIXES):
            raise ValueError(f"config file {filename} must be a python or yaml file")
        is_python = filename.endswith(".py")
        loaded = _exec_python_config(filename) if is_python else _read_yaml_config(filename)

        if isinstance(keys, str):
            return _as_config(loaded[keys])
        if keys is not None:
            return tuple(_as_config(loaded[k]) for k in keys)
        if not is_python:
            return loaded
        return DictConfig(
            {
                name: _as_config(value)
                for name, value in loaded.items()
                if not name.startswith("_") and isinstance(value, (DictConfig, ListConfig, dict))
            },
            flags={"allow_objects": True},
        )

    @staticmethod
    def save(cfg, filename: str):
        """
        Write ``cfg`` to ``filename`` as yaml. When the yaml cannot be loaded back the
        config is also pickled to ``filename + ".pkl"``.
        """
        try:
            cfg = deepcopy(cfg)
        except Exception:
            logger.debug("config cannot be copied; callable targets are saved as is")
        else:
            _targets_to_strings(cfg)
        try:
            loadable = _dump_yaml(cfg, filename)
        except Exception:
            logger.exception(f"cannot write {filename} as yaml")
            loadable = False
        if loadable:
            return
        with open(filename + ".pkl", "wb") as f:
            cloudpickle.dump(cfg, f)
        logger.warning(f"config pickled to {filename}.pkl")

    @staticmethod
    def apply_overrides(cfg, overrides: List[str]):
        """
        Apply hydra-style ``"run.seed=3"`` overrides to ``cfg`` in place.

        Raises:
            KeyError: when a prefix of the key holds a plain value, as in
                ``run.seed.value=1``.
        """
        from hydra.core.override_parser.overrides_parser import OverridesParser

        for override in OverridesParser.create().parse_overrides(overrides):
            if override.is_delete():
                raise NotImplementedError("deleting keys is not a supported override")
            key = override.key_or_group
            parts = key.split(".")
            for depth in range(1, len(parts)):
                prefix = ".".join(parts[:depth])
                node = OmegaConf.select(cfg, prefix, default=None)
                if node is None:
                    break
                if not OmegaConf.is_config(node):
                    raise KeyError(f"cannot set {key}: {prefix} holds a {type(node).__name__}")
            OmegaConf.update(cfg, key, override.value(), merge=True)
        return cfg
