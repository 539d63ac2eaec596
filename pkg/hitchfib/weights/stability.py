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

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from hitchfib.structures import Bidegree
from hitchfib.utils.exceptions import InconsistentBookkeeping, OnWall

from .hecke import HeckeTransform, hecke_reduce
from .parabolic import ParabolicWeights, as_rational

__all__ = [
    "Stability",
    "SheafClass",
    "WeightClass",
    "weight_class",
    "stable_bidegrees",
    "central_bidegree",
    "is_semistable",
    "hecke_sheaf",
]


class Stability(str, Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class SheafClass:
    """
    Numerical data of a spectral sheaf on a reducible spectral curve: ``length`` of
    its torsion at the node (or size of the locally free set for nodal curves) and its
    bidegree.
    """

    length: int
    bidegree: Bidegree

    def __post_init__(self):
        if self.length not in (0, 1, 2):
            raise InconsistentBookkeeping(f"length must be 0, 1 or 2, got {self.length}")


@dataclass(frozen=True)
class WeightClass:
    generic: bool
    wall: Optional[int]
    alpha_plus: Fraction

    @property
    def special(self) -> bool:
        return not self.generic


def weight_class(w: ParabolicWeights) -> WeightClass:
    """
    Genericity of ``w``. Extended weights are special exactly on the integers; other
    weights are Hecke-reduced to degree class 1 first, where ``0 < alpha_+ < 1`` is
    generic.
    """
    if w.is_extended:
        a = w.alpha_plus
        on_wall = a.denominator == 1
        return WeightClass(not on_wall, int(a) if on_wall else None, a)
    reduced, _ = hecke_reduce(w)
    a = reduced.alpha_plus
    if 0 < a < 1:
        return WeightClass(True, None, a)
    return WeightClass(False, int(a), a)


def stable_bidegrees(alpha_plus) -> Tuple[Bidegree, Bidegree]:
    """
    The two bidegrees of stable invertible sheaves on a two-component curve in degree
    class 1 when ``alpha_plus`` is not an integer.

    Raises:
        OnWall: ``alpha_plus`` is an integer.
    """
    a = as_rational(alpha_plus)
    if a.denominator == 1:
        raise OnWall(f"alpha_plus={a} lies on a wall")
    c = math.ceil(a)
    return Bidegree(1 - c, c), Bidegree(2 - c, c - 1)


def central_bidegree(wall: int) -> Bidegree:
    """The only stable bidegree for the special value ``alpha_plus = wall``."""
    return Bidegree(1 - wall, wall)


def is_semistable(sc: SheafClass, w: ParabolicWeights) -> Stability:
    """
    Parabolic stability of a sheaf with the numerical data ``sc``.

    Raises:
        InconsistentBookkeeping: ``dplus + dminus + length - 2 + degree_class != 0``.
    """
    b = sc.bidegree
    if b.dplus + b.dminus + sc.length - 2 + w.degree_class != 0:
        raise InconsistentBookkeeping(
            f"bidegree {b} with length {sc.length} does not fit degree class {w.degree_class}"
        )
    plus = b.dplus + w.alpha_plus
    minus = b.dminus + w.alpha_minus
    if plus > 0 and minus > 0 and sc.length != 2:
        return Stability.STABLE
    if plus >= 0 and minus >= 0:
        return Stability.STRICTLY_SEMISTABLE
    return Stability.UNSTABLE


def hecke_sheaf(sc: SheafClass, step: HeckeTransform) -> SheafClass:
    return SheafClass(sc.length, step.apply(sc.bidegree))
