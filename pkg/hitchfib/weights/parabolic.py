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

from dataclasses import dataclass, replace
from fractions import Fraction
from numbers import Rational
from typing import Optional

import sympy

from hitchfib.utils.exceptions import InvalidWeights

__all__ = ["ParabolicWeights", "as_rational"]


def as_rational(x) -> Fraction:
    """Exact rational from a Fraction, int, ``[num, den]`` pair, decimal string or float."""
    if isinstance(x, bool):
        raise InvalidWeights("booleans are not weights")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        # read 0.3 as 3/10, not as its binary expansion
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError as e:
            raise InvalidWeights(str(e)) from e
    if isinstance(x, (list, tuple)) and len(x) == 2:
        num, den = x
        if den == 0:
            raise InvalidWeights(f"zero denominator in {x!r}")
        return Fraction(int(num), int(den))
    raise InvalidWeights(f"cannot read a rational weight from {x!r}")


@dataclass(frozen=True)
class ParabolicWeights:
    """
    Parabolic weights ``alpha_i^j`` at the two eigen-directions ``i`` in ``{+, -}`` over
    the two marked points ``j`` in ``{1, 2}``.

    Each weight lies in ``[0, 1)`` and their sum is the integer ``degree_class`` in
    ``{0, 1, 2, 3}``. ``extended_alpha_plus`` overrides ``alpha_plus`` with an
    unrestricted rational for wall-crossing studies.
    """

    p1: Fraction
    m1: Fraction
    p2: Fraction
    m2: Fraction
    extended_alpha_plus: Optional[Fraction] = None

    def __post_init__(self):
        for name in ("p1", "m1", "p2", "m2"):
            value = as_rational(getattr(self, name))
            if not 0 <= value < 1:
                raise InvalidWeights(f"weight {name}={value} is outside [0, 1)")
            object.__setattr__(self, name, value)
        total = self.p1 + self.m1 + self.p2 + self.m2
        if total.denominator != 1:
            raise InvalidWeights(f"weights sum to {total}, which is not an integer")
        if self.extended_alpha_plus is not None:
            object.__setattr__(self, "extended_alpha_plus", as_rational(self.extended_alpha_plus))

    @classmethod
    def generic(cls) -> "ParabolicWeights":
        """All weights 1/4: alpha_plus = alpha_minus = 1/2."""
        q = Fraction(1, 4)
        return cls(q, q, q, q)

    @classmethod
    def from_alpha(cls, alpha_plus, extended: bool = False) -> "ParabolicWeights":
        """
        Weights in degree class 1 with the given ``alpha_plus``. With ``extended`` the
        value is stored as ``extended_alpha_plus`` on top of the generic weights.
        """
        a = as_rational(alpha_plus)
        if extended:
            return replace(cls.generic(), extended_alpha_plus=a)
        if not 0 <= a <= 1:
            raise InvalidWeights(f"alpha_plus={a} is outside [0, 1] in degree class 1")
        p1 = min(a, Fraction(1, 2))
        m1 = min(1 - a, Fraction(1, 2))
        return cls(p1, m1, a - p1, 1 - a - m1)

    @property
    def degree_class(self) -> int:
        return int(self.p1 + self.m1 + self.p2 + self.m2)

    @property
    def alpha_plus(self) -> Fraction:
        if self.extended_alpha_plus is not None:
            return self.extended_alpha_plus
        return self.p1 + self.p2

    @property
    def alpha_minus(self) -> Fraction:
        return self.degree_class - self.alpha_plus

    def alpha(self, side: str) -> Fraction:
        return self.alpha_plus if side == "+" else self.alpha_minus

    def pair(self, side: str):
        """``(alpha_i^1, alpha_i^2)`` for ``side`` in ``{+, -}``."""
        return (self.p1, self.p2) if side == "+" else (self.m1, self.m2)

    @property
    def is_extended(self) -> bool:
        return self.extended_alpha_plus is not None

    def swapped(self) -> "ParabolicWeights":
        """Exchange ``alpha_+^2`` and ``alpha_-^2``."""
        return replace(self, p2=self.m2, m2=self.p2)

    def with_pair(self, side: str, first, second) -> "ParabolicWeights":
        if side == "+":
            return replace(self, p1=first, p2=second)
        return replace(self, m1=first, m2=second)

    def __str__(self):
        core = f"(+: {self.p1}, {self.p2}; -: {self.m1}, {self.m2})"
        if self.extended_alpha_plus is not None:
            core += f" alpha_plus={self.extended_alpha_plus}"
        return core
