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
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from hitchfib.structures import Bidegree
from hitchfib.utils.exceptions import InvalidWeights

from .parabolic import ParabolicWeights, as_rational

__all__ = ["HeckeTransform", "hecke", "inverse_hecke", "hecke_reduce", "total_shift", "unreduce"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HeckeTransform:
    """
    One Hecke step on side ``side``. ``epsilon`` is the share of the unit weight change
    taken by the first marked point; ``inverse`` steps raise the degree class.
    """

    side: str
    epsilon: Fraction
    inverse: bool = False

    @property
    def shift(self) -> Tuple[int, int]:
        """Bidegree change of a spectral sheaf under this step."""
        k = -1 if self.inverse else 1
        return (k, 0) if self.side == "+" else (0, k)

    def apply(self, b: Bidegree) -> Bidegree:
        return b.shift(*self.shift)

    def to_json(self):
        return {
            "side": self.side,
            "epsilon": [self.epsilon.numerator, self.epsilon.denominator],
            "inverse": self.inverse,
        }


def _check_side(side):
    if side not in ("+", "-"):
        raise ValueError(f"side must be '+' or '-', got {side!r}")


def hecke(w: ParabolicWeights, side: str, epsilon=None) -> Tuple[ParabolicWeights, HeckeTransform]:
    """
    Twist by a point on side ``side``: ``alpha_side`` drops by one and the degree class
    by one. Requires ``alpha_side >= 1``; ``epsilon`` defaults to ``alpha_side^1``.
    """
    _check_side(side)
    first, second = w.pair(side)
    if first + second < 1:
        raise InvalidWeights(f"H{side} needs alpha{side} >= 1, got {first + second}")
    eps = first if epsilon is None else as_rational(epsilon)
    try:
        out = w.with_pair(side, first - eps, second - (1 - eps))
    except InvalidWeights as e:
        raise InvalidWeights(f"epsilon={eps} is not admissible for H{side}: {e}") from None
    return out, HeckeTransform(side, eps)


def inverse_hecke(
    w: ParabolicWeights, side: str, epsilon=None
) -> Tuple[ParabolicWeights, HeckeTransform]:
    """
    Inverse of :func:`hecke`. The admissible ``epsilon`` form the open interval
    ``(alpha_side^2, 1 - alpha_side^1)``; the default is its midpoint.
    """
    _check_side(side)
    first, second = w.pair(side)
    if first + second >= 1:
        raise InvalidWeights(f"inverse H{side} needs alpha{side} < 1, got {first + second}")
    eps = (1 - first + second) / 2 if epsilon is None else as_rational(epsilon)
    try:
        out = w.with_pair(side, first + eps, second + (1 - eps))
    except InvalidWeights as e:
        raise InvalidWeights(f"epsilon={eps} is not admissible for inverse H{side}: {e}") from None
    return out, HeckeTransform(side, eps, inverse=True)


def hecke_reduce(
    w: ParabolicWeights, prefer: str = "+"
) -> Tuple[ParabolicWeights, List[HeckeTransform]]:
    """
    Move ``w`` into degree class 1 by Hecke transformations.

    In degree class 2 with ``alpha_+ = alpha_- = 1`` either side may be used; ``prefer``
    picks it, and in degree class 0 it picks the side of the inverse step.

    Returns:
        (ParabolicWeights, list[HeckeTransform]): reduced weights and the steps applied.
        ``extended_alpha_plus`` is carried over unchanged.
    """
    _check_side(prefer)
    d = w.degree_class
    steps: List[HeckeTransform] = []
    if d == 1:
        return w, steps
    if d == 0:
        w, step = inverse_hecke(w, prefer)
        steps.append(step)
    elif d == 2:
        plus, minus = w.p1 + w.p2, w.m1 + w.m2
        if plus >= 1 and minus >= 1:
            side = prefer
        else:
            side = "+" if plus >= 1 else "-"
        w, step = hecke(w, side)
        steps.append(step)
    elif d == 3:
        for side in ("+", "-"):
            w, step = hecke(w, side)
            steps.append(step)
    else:
        raise InvalidWeights(f"degree class {d} is outside 0..3")
    assert w.degree_class == 1, w
    logger.debug(f"reduced to {w} by {[(s.side, str(s.epsilon), s.inverse) for s in steps]}")
    return w, steps


def total_shift(steps: Iterable[HeckeTransform]) -> Tuple[int, int]:
    dplus = dminus = 0
    for s in steps:
        a, b = s.shift
        dplus += a
        dminus += b
    return dplus, dminus


def unreduce(b: Bidegree, steps: Optional[Iterable[HeckeTransform]]) -> Bidegree:
    """Bidegree before the steps of :func:`hecke_reduce` given the reduced one."""
    dplus, dminus = total_shift(steps or ())
    return b.shift(-dplus, -dminus)
