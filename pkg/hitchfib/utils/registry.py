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

import inspect
import pydoc
from typing import Any, Callable, Dict, Iterator, List, Tuple

from hydra._internal.utils import _locate
from tabulate import tabulate

__all__ = ["Registry", "locate"]


class Registry:
    """
    Case or branch name -> callable, filled by decorators at import time.

    .. code-block:: python

        CLASSIFIER_REGISTRY = Registry("CLASSIFIER")

        @CLASSIFIER_REGISTRY.register("d22_ss")
        def classify_d22_ss(inv):
            ...

    ``print(registry)`` lists the names with the first docstring line of each entry.
    """

    def __init__(self, name: str) -> None:
        self._name = name
        self._entries: Dict[str, Callable[..., Any]] = {}

    def register(self, name: str) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
        def deco(fn: Callable[..., Any]) -> Callable[..., Any]:
            assert name not in self._entries, f"'{name}' is already in the {self._name} registry"
            self._entries[name] = fn
            return fn

        return deco

    def get(self, name: str) -> Callable[..., Any]:
        try:
            return self._entries[name]
        except KeyError:
            raise KeyError(
                f"no '{name}' in the {self._name} registry, known: {', '.join(self.names())}"
            ) from None

    def names(self) -> List[str]:
        return sorted(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Tuple[str, Callable[..., Any]]]:
        return iter(sorted(self._entries.items()))

    def __repr__(self) -> str:
        rows = [
            (name, (inspect.getdoc(fn) or fn.__qualname__).splitlines()[0])
            for name, fn in self
        ]
        return f"Registry of {self._name}:\n" + tabulate(
            rows, headers=["Names", "Summary"], tablefmt="fancy_grid"
        )

    __str__ = __repr__


def locate(name: str) -> Callable[..., Any]:
    """Object at the dotted path ``name``; hydra's locator handles what pydoc cannot."""
    obj = pydoc.locate(name)
    return obj if obj is not None else _locate(name)


def _convert_target_to_string(t: Any) -> str:
    """Shortest importable dotted path that ``locate`` maps back to ``t``."""
    parts = t.__module__.split(".")
    for k in range(1, len(parts) + 1):
        candidate = ".".join(parts[:k] + [t.__qualname__])
        try:
            if locate(candidate) is t:
                return candidate
        except ImportError:
            continue
    return f"{t.__module__}.{t.__qualname__}"
