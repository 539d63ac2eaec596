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

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

import numpy as np
import sympy

from hitchfib.numerics import GaussianRational, Poly1, roots_with_multiplicity
from hitchfib.polar import CaseTag, DerivedInvariants

__all__ = ["SymmetricChecks", "symmetric_checks", "pair_quartic"]

logger = logging.getLogger(__name__)

G = GaussianRational

# basis of the second exterior power of a 4-dimensional space
_PAIRS = list(itertools.combinations(range(4), 2))


@dataclass(frozen=True)
class SymmetricChecks:
    """
    ``T1`` is the product of ``psi`` over the six pairs of roots of the base-point
    quartic, ``T2`` the fifth elementary symmetric function of those six values.
    """

    T1: GaussianRational
    T2: GaussianRational
    T1_factored: GaussianRational
    T1_numeric: Optional[complex] = None

    @property
    def identity_holds(self) -> bool:
        return self.T1 == self.T1_factored

    def to_json(self):
        out = {
            "T1": self.T1.to_json(),
            "T2": self.T2.to_json(),
            "T1_factored": self.T1_factored.to_json(),
            "identity_holds": self.identity_holds,
        }
        if self.T1_numeric is not None:
            out["T1_numeric"] = [self.T1_numeric.real, self.T1_numeric.imag]
        return out


def pair_quartic(inv: DerivedInvariants, case: CaseTag):
    """
    Returns:
        (Poly1, Callable): the quartic whose roots are the base points and the function
        ``psi(p, s)`` of the product and sum of two roots whose vanishing means that
        the singular points over them lie on the same member of the pencil.
    """
    A, B, L, M = inv.A, inv.B, inv.L, inv.M
    if case == CaseTag.D22_Ss:
        quartic = Poly1([-(A * A), -(A * L), 0, B * M, B * B])

        def psi(p, s):
            return 2 * B * B * p * s + 3 * B * M * p - A * L

    elif case == CaseTag.D31_Ss:
        quartic = Poly1([-(M * M), 0, 2 * A * L + B * B, 4 * A * B, 3 * A * A])

        def psi(p, s):
            return 2 * A * A * (s * s - p) + 3 * A * B * s + 2 * A * L + B * B

    else:
        raise ValueError(f"symmetric checks need four base points, not case {case}")
    return quartic, psi


def _companion(quartic: Poly1) -> np.ndarray:
    monic = [c / quartic.leading for c in quartic.coeffs]
    C = np.full((4, 4), G(0), dtype=object)
    for i in range(3):
        C[i + 1, i] = G(1)
    for i in range(4):
        C[i, 3] = -monic[i]
    return C


def _exterior_square(C: np.ndarray):
    """
    Action of ``C`` on the second exterior power (``K``, eigenvalues ``z_i z_j``) and
    of ``C`` as a derivation (``D``, eigenvalues ``z_i + z_j``).
    """
    eye = [[int(a == b) for b in range(4)] for a in range(4)]
    K = np.full((6, 6), G(0), dtype=object)
    D = np.full((6, 6), G(0), dtype=object)
    for r, (i, j) in enumerate(_PAIRS):
        for c, (k, m) in enumerate(_PAIRS):
            K[r, c] = C[i, k] * C[j, m] - C[i, m] * C[j, k]
            D[r, c] = (
                C[i, k] * eye[j][m]
                + eye[i][k] * C[j, m]
                - C[i, m] * eye[j][k]
                - eye[i][m] * C[j, k]
            )
    return K, D


def _psi_matrix(psi: Callable, K: np.ndarray, D: np.ndarray) -> sympy.Matrix:
    identity = np.full((6, 6), G(0), dtype=object)
    for i in range(6):
        identity[i, i] = G(1)

    class _M:
        # matrix wrapper so that psi sees scalars and matrices alike
        def __init__(self, a):
            self.a = a

        def __mul__(self, other):
            if isinstance(other, _M):
                return _M(self.a.dot(other.a))
            return _M(self.a * G.coerce(other))

        __rmul__ = __mul__

        def __add__(self, other):
            if isinstance(other, _M):
                return _M(self.a + other.a)
            return _M(self.a + identity * G.coerce(other))

        __radd__ = __add__

        def __sub__(self, other):
            return self + (-1) * other

        def __rsub__(self, other):
            return (-1) * self + other

    out = psi(_M(K), _M(D)).a
    return sympy.Matrix(6, 6, [x.to_sympy() for x in out.flatten()])


def _factored(inv: DerivedInvariants, case: CaseTag) -> GaussianRational:
    A, B, L, M, delta = inv.A, inv.B, inv.L, inv.M, inv.delta
    if case == CaseTag.D22_Ss:
        return -(A**5 / B) * (L - M) * (L + M) * delta
    return G(Fraction(4, 729)) * A * A * (L - M) * (L + M) * delta


def symmetric_checks(
    inv: DerivedInvariants, case: Optional[CaseTag] = None, numeric: bool = True
) -> SymmetricChecks:
    """
    Exact pair products over the base points, computed from the coefficients only.

    ``psi`` is evaluated on the commuting matrices ``K`` and ``D`` built from the
    companion matrix of the quartic, so ``T1 = det psi(K, D)`` and ``T2`` is read off
    its characteristic polynomial. With ``numeric`` the product over floating roots is
    attached as well.
    """
    case = case or inv.case
    quartic, psi = pair_quartic(inv, case)
    K, D = _exterior_square(_companion(quartic))
    Psi = _psi_matrix(psi, K, D)
    x = sympy.Symbol("x")
    charpoly = Psi.charpoly(x)
    T1 = G.from_sympy(Psi.det(method="berkowitz"))
    T2 = -G.from_sympy(charpoly.coeff_monomial(x))
    T1_numeric = None
    if numeric:
        roots: List[complex] = []
        for cluster in roots_with_multiplicity(quartic):
            roots.extend([cluster.location] * cluster.multiplicity)
        T1_numeric = complex(
            np.prod([complex(psi(a * b, a + b)) for a, b in itertools.combinations(roots, 2)])
        )
    checks = SymmetricChecks(T1, T2, _factored(inv, case), T1_numeric)
    if not checks.identity_holds:
        logger.warning(f"{case}: T1={T1} differs from its factored form {checks.T1_factored}")
    return checks
