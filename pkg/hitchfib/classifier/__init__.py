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

from .build import (
    CLASSIFIER_REGISTRY,
    Classification,
    Companion,
    classify,
    classify_with_weights,
    weights_for,
)

# register the decision trees
from . import d22, d31  # noqa: F401,E402

__all__ = [
    "CLASSIFIER_REGISTRY",
    "Classification",
    "Companion",
    "classify",
    "classify_with_weights",
    "weights_for",
]
