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

from .gaussian import GaussianRational, as_gaussian
from .poly import Poly1, multiplicity_profile, square_free_factors, square_free_multiplicity
from .roots import RootCluster, aberth_roots, cluster_roots, roots_with_multiplicity

__all__ = [
    "GaussianRational",
    "as_gaussian",
    "Poly1",
    "square_free_factors",
    "square_free_multiplicity",
    "multiplicity_profile",
    "RootCluster",
    "aberth_roots",
    "cluster_roots",
    "roots_with_multiplicity",
]
