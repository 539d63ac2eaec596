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

from typing import Iterable, List, Tuple

import numpy as np
import sympy
from sympy.polys.domains import QQ, QQ_I

from hitchfib.utils.exceptions import ZeroPolynomial

from .gaussian import GaussianRational

__all__ = ["Poly1", "square_free_factors", "square_free_multiplicity", "multiplicity_profile"]

_Z = sympy.Symbol("z")


class Poly1:
    """
    Univariate polynomial with exact Gaussian-rational coefficients,
    stored in ascending degree with trailing zeros stripped.

    The zero polynomial keeps a single zero coefficient and reports ``is_zero``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [GaussianRational.coerce(c) for c in coeffs]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        if not cs:
            cs = [GaussianRational(0)]
        self._coeffs: Tuple[GaussianRational, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Poly1":
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> Tuple[GaussianRational, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self._coeffs) == 1 and self._coeffs[0].is_zero()

    @property
    def leading(self) -> GaussianRational:
        return self._coeffs[-1]

    def coeff(self, j: int) -> GaussianRational:
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return GaussianRational(0)

    def is_exactly_real(self) -> bool:
        return all(c.is_real() for c in self._coeffs)

    def __call__(self, z):
        """Exact Horner evaluation."""
        z = GaussianRational.coerce(z)
        acc = GaussianRational(0)
        for c in reversed(self._coeffs):
            acc = acc * z + c
        return acc

    def to_numpy(self) -> np.ndarray:
        """Complex coefficients in ascending degree."""
        return np.array([complex(c) for c in self._coeffs], dtype=np.complex128)

    def evaluate(self, z):
        """Floating evaluation at a complex point or array of points."""
        return np.polyval(self.to_numpy()[::-1], z)

    def max_abs_coeff(self) -> float:
        return float(np.max(np.abs(self.to_numpy())))

    def derivative(self) -> "Poly1":
        return Poly1([c * j for j, c in enumerate(self._coeffs)][1:] or [0])

    def trailing_zeros(self) -> int:
        """Multiplicity of the root z = 0."""
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial vanishes to every order at 0")
        m = 0
        while self._coeffs[m].is_zero():
            m += 1
        return m

    def shift_down(self, m: int) -> "Poly1":
        """Divide by z**m; the caller guarantees exactness."""
        assert all(c.is_zero() for c in self._coeffs[:m]), "z**m does not divide polynomial"
        return Poly1(self._coeffs[m:])

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Poly1([self.coeff(j) + other.coeff(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly1([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        out = [GaussianRational(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly1(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Poly1):
            try:
                other = _as_poly(other)
            except TypeError:
                return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def to_sympy(self, gaussian: bool = False) -> sympy.Poly:
        domain = QQ if self.is_exactly_real() and not gaussian else QQ_I
        return sympy.Poly([c.to_sympy() for c in reversed(self._coeffs)], _Z, domain=domain)

    def rem(self, other: "Poly1") -> "Poly1":
        return Poly1.from_sympy(self.to_sympy(True).rem(_as_poly(other).to_sympy(True)))

    def exquo(self, other: "Poly1") -> "Poly1":
        return Poly1.from_sympy(self.to_sympy(True).exquo(_as_poly(other).to_sympy(True)))

    def gcd(self, other: "Poly1") -> "Poly1":
        """Monic gcd over the Gaussian rationals; ``gcd(p, 0)`` is ``p`` made monic."""
        return Poly1.from_sympy(self.to_sympy(True).gcd(_as_poly(other).to_sympy(True)))

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "Poly1":
        return cls([GaussianRational.from_sympy(c) for c in reversed(poly.all_coeffs())])

    def __repr__(self):
        terms = []
        for j, c in enumerate(self._coeffs):
            if c.is_zero() and self.degree > 0:
                continue
            terms.append(f"({c})" + ("" if j == 0 else f"*z^{j}" if j > 1 else "*z"))
        return "Poly1(" + " + ".join(terms) + ")"


def _as_poly(x) -> Poly1:
    if isinstance(x, Poly1):
        return x
    return Poly1([GaussianRational.coerce(x)])


def _yun(f: sympy.Poly) -> List[Tuple[sympy.Poly, int]]:
    """Yun's square-free decomposition from exact gcds with derivatives; monic factors."""
    a = f.gcd(f.diff())
    b = f.exquo(a)
    d = f.diff().exquo(a) - b.diff()
    out = []
    m = 1
    while b.degree() > 0:
        a = b.gcd(d)
        if a.degree() > 0:
            out.append((a, m))
        b = b.exquo(a)
        d = d.exquo(a) - b.diff()
        m += 1
    return out


def square_free_factors(p: Poly1) -> List[Tuple[Poly1, int]]:
    """
    Square-free decomposition over the Gaussian rationals.

    Returns:
        list[(Poly1, int)]: pairwise coprime square-free factors of positive degree with
        their multiplicity, highest multiplicity first.
    """
    if p.is_zero:
        raise ZeroPolynomial("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    out = [(Poly1.from_sympy(f), m) for f, m in _yun(p.to_sympy())]
    out.sort(key=lambda fm: (-fm[1], fm[0].degree))
    return out


def square_free_multiplicity(p: Poly1) -> List[Tuple[int, int]]:
    """
    Multiplicity structure of ``p`` as ``(factor degree, multiplicity)`` pairs,
    computed from the exact gcd of ``p`` with its derivative.

    Examples:

    .. code-block:: python

        square_free_multiplicity(Poly1([-16, -16, 0, 4, 1]))  # [(1, 3), (1, 1)]
        square_free_multiplicity(Poly1([1, 0, 1]))            # [(2, 1)]
    """
    return [(f.degree, m) for f, m in square_free_factors(p)]


def multiplicity_profile(p: Poly1) -> List[int]:
    """Sorted multiset of root multiplicities, one entry per distinct root."""
    profile: List[int] = []
    for degree, m in square_free_multiplicity(p):
        profile.extend([m] * degree)
    return sorted(profile, reverse=True)
