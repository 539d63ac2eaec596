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

from .samplers import STRATUM_REGISTRY, RandomPolarSampler, random_weights, sample_stratum
from .serialization import (
    dumps,
    load_json,
    polar_from_json,
    polar_to_json,
    rational_to_json,
    weights_from_json,
    weights_to_json,
)
from .witnesses import Witness, all_witnesses, witnesses_for

__all__ = [
    "RandomPolarSampler",
    "STRATUM_REGISTRY",
    "sample_stratum",
    "random_weights",
    "polar_from_json",
    "polar_to_json",
    "weights_from_json",
    "weights_to_json",
    "rational_to_json",
    "load_json",
    "dumps",
    "Witness",
    "all_witnesses",
    "witnesses_for",
]
