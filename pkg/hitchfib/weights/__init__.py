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

from hitchfib.structures import Bidegree

from .hecke import HeckeTransform, hecke, hecke_reduce, inverse_hecke, total_shift, unreduce
from .hitchin import component_shift, hitchin_class, reduced_weights
from .parabolic import ParabolicWeights, as_rational
from .stability import (
    SheafClass,
    Stability,
    WeightClass,
    central_bidegree,
    hecke_sheaf,
    is_semistable,
    stable_bidegrees,
    weight_class,
)

__all__ = [
    "Bidegree",
    "ParabolicWeights",
    "as_rational",
    "HeckeTransform",
    "hecke",
    "inverse_hecke",
    "hecke_reduce",
    "total_shift",
    "unreduce",
    "SheafClass",
    "Stability",
    "WeightClass",
    "weight_class",
    "stable_bidegrees",
    "central_bidegree",
    "is_semistable",
    "hecke_sheaf",
    "hitchin_class",
    "reduced_weights",
    "component_shift",
]
