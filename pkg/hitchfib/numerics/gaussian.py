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

from fractions import Fraction
from numbers import Rational
from typing import List, Union

import sympy

__all__ = ["GaussianRational", "as_gaussian", "ZERO", "ONE", "I"]

Scalar = Union["GaussianRational", int, Fraction, str]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    if isinstance(x, float):
        # exact binary value of the float
        return Fraction(x)
    raise TypeError(f"Cannot convert {type(x).__name__} to an exact rational")


class GaussianRational:
    """
    Exact complex number ``re + i*im`` with rational parts.

    All vanishing and branch decisions are made with this type; ``complex(x)`` is the
    only lossy conversion.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im != 0:
                raise TypeError("imaginary part given twice")
            re, im = re.re, re.im
        object.__setattr__(self, "_re", _as_fraction(re))
        object.__setattr__(self, "_im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        # slot state would be restored through __setattr__
        return (GaussianRational, (self._re, self._im))

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(x)

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def is_real(self) -> bool:
        return self._im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        return self._re * self._re + self._im * self._im

    # arithmetic

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self._re * o._re - self._im * o._im, self._re * o._im + self._im * o._re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by an exact zero")
        num = self * o.conjugate()
        return GaussianRational(num._re / n, num._im / n)

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussianRational(1) / (self ** (-exponent))
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # comparison / hashing

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return not self.is_zero()

    # conversions

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def to_sympy(self):
        re = sympy.Rational(self._re.numerator, self._re.denominator)
        if self._im == 0:
            return re
        return re + sympy.I * sympy.Rational(self._im.numerator, self._im.denominator)

    @classmethod
    def from_sympy(cls, expr) -> "GaussianRational":
        re, im = sympy.expand(expr).as_real_imag()
        if not (re.is_Rational and im.is_Rational):
            raise ValueError(f"{expr} is not a Gaussian rational")
        return cls(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))

    def to_json(self) -> List[int]:
        return [self._re.numerator, self._re.denominator, self._im.numerator, self._im.denominator]

    @classmethod
    def from_json(cls, value) -> "GaussianRational":
        """
        Accepts ``[nr, dr, ni, di]``, ``[num, den]`` or a bare integer.
        """
        if isinstance(value, bool):
            raise ValueError("booleans are not rationals")
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, (list, tuple)) and all(
            isinstance(v, int) and not isinstance(v, bool) for v in value
        ):
            if len(value) == 2:
                return cls(Fraction(value[0], value[1]))
            if len(value) == 4:
                return cls(Fraction(value[0], value[1]), Fraction(value[2], value[3]))
        raise ValueError(f"Cannot read a Gaussian rational from {value!r}")

    def __repr__(self):
        if self._im == 0:
            return f"GaussianRational({self._re})"
        return f"GaussianRational({self._re}, {self._im})"

    def __str__(self):
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return f"{self._im}i"
        sign = "+" if self._im > 0 else "-"
        return f"{self._re}{sign}{abs(self._im)}i"


def as_gaussian(x: Scalar) -> GaussianRational:
    return GaussianRational.coerce(x)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
