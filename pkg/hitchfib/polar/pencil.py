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

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from hitchfib.numerics import GaussianRational, Poly1

from .cases import CaseTag
from .data import PolarData

__all__ = ["PencilCoeffs", "pencil_coefficients", "chi_polynomials"]

G = GaussianRational


def chi_polynomials(d: PolarData) -> Tuple[Poly1, Poly1]:
    """
    The pencil in the working chart is ``w**2 + F(z) w + G(z) - t z**k`` with
    ``k = d.case.t_degree``.

    Returns:
        (Poly1, Poly1): ``F`` and the ``t``-independent part ``G``.
    """
    p = d.params
    case = d.case
    if case == CaseTag.D22_Ss:
        F = Poly1(
            [
                -(p["a_minus"] + p["a_plus"]),
                -(p["lambda_minus"] + p["lambda_plus"]),
                p["b_minus"] + p["b_plus"],
            ]
        )
        G4 = p["b_minus"] * p["b_plus"]
        G3 = p["b_plus"] * p["mu_minus"] + p["b_minus"] * p["mu_plus"]
        G1 = p["a_plus"] * p["lambda_minus"] + p["a_minus"] * p["lambda_plus"]
        G0 = p["a_minus"] * p["a_plus"]
        return F, Poly1([G0, G1, 0, G3, G4])
    if case == CaseTag.D22_Sn:
        b4, b3, b2 = p["b_m4"], p["b_m3"], p["b_m2"]
        F = Poly1([-(p["a_minus"] + p["a_plus"]), b2, 2 * b4])
        G1 = p["a_plus"] * p["lambda_minus"] + p["a_minus"] * p["lambda_plus"]
        G0 = p["a_minus"] * p["a_plus"]
        return F, Poly1([G0, G1, 0, b4 * b2 - b3, b4 * b4])
    if case == CaseTag.D22_Nn:
        a4, a3, a2 = p["a_m4"], p["a_m3"], p["a_m2"]
        b4, b3, b2 = p["b_m4"], p["b_m3"], p["b_m2"]
        F = Poly1([-2 * a4, -a2, 2 * b4])
        return F, Poly1([a4 * a4, a4 * a2 - a3, 0, b4 * b2 - b3, b4 * b4])
    if case in (CaseTag.D31_Ss, CaseTag.D31_Sn):
        am, ap = p["a_minus"], p["a_plus"]
        bm, bp = p["b_minus"], p["b_plus"]
        lm, lp = p["lambda_minus"], p["lambda_plus"]
        F = Poly1([lm + lp, bm + bp, am + ap])
        if case == CaseTag.D31_Ss:
            G0 = p["mu_minus"] * p["mu_plus"]
        else:
            G0 = p["b_m1"] ** 2
        return F, Poly1([G0, 0, ap * lm + am * lp + bm * bp, ap * bm + am * bp, am * ap])
    b6, b5, b4, b3, b2 = (p[f"b_m{j}"] for j in (6, 5, 4, 3, 2))
    F = Poly1([b2, b4, 2 * b6])
    if case == CaseTag.D31_Ns:
        G0 = p["mu_minus"] * p["mu_plus"]
    else:
        G0 = p["b_m1"] ** 2
    return F, Poly1([G0, 0, b6 * b2 - b3, b6 * b4 - b5, b6 * b6])


@dataclass(frozen=True)
class PencilCoeffs:
    """
    Coefficients of the spectral pencil in the normal form

    * (2,2): ``w**2 - (p2 z**2 + p1 z + p0) w - (q4 z**4 + ... + q0)`` with ``t = q2``,
    * (3,1): ``w**2 + (p0 z**2 + p1 z + p2) w - (q0 z**4 + q1 z**3 + q2 z**2 + q3 z + q4)``
      with ``t = q3``.
    """

    case: CaseTag
    p0: GaussianRational
    p1: GaussianRational
    p2: GaussianRational
    q0: GaussianRational
    q1: GaussianRational
    q2: GaussianRational
    q3: GaussianRational
    q4: GaussianRational
    t_slot: str

    @property
    def t(self) -> GaussianRational:
        return getattr(self, self.t_slot)

    def as_tuple(self):
        return (self.p0, self.p1, self.p2, self.q0, self.q1, self.q2, self.q3, self.q4)

    def w_coefficient(self) -> Poly1:
        """``F`` in ``w**2 + F w + G_t``."""
        if self.case.is_22:
            return -Poly1([self.p0, self.p1, self.p2])
        return Poly1([self.p2, self.p1, self.p0])

    def constant_term(self) -> Poly1:
        """``G_t`` in ``w**2 + F w + G_t``, the ``t`` term included."""
        if self.case.is_22:
            return -Poly1([self.q0, self.q1, self.q2, self.q3, self.q4])
        return -Poly1([self.q4, self.q3, self.q2, self.q1, self.q0])

    def chi(self, z, w):
        """Floating evaluation of the pencil member and its two partials at ``(z, w)``."""
        F = self.w_coefficient()
        Gt = self.constant_term()
        value = w * w + F.evaluate(z) * w + Gt.evaluate(z)
        dz = F.derivative().evaluate(z) * w + Gt.derivative().evaluate(z)
        dw = 2 * w + F.evaluate(z)
        return np.asarray(value), np.asarray(dz), np.asarray(dw)


def pencil_coefficients(d: PolarData, t) -> PencilCoeffs:
    """Read the normal-form coefficients of the pencil member at ``t`` off ``d``."""
    t = GaussianRational.coerce(t)
    F, G0 = chi_polynomials(d)
    if d.case.is_22:
        assert G0.coeff(2).is_zero()
        return PencilCoeffs(
            d.case,
            p0=-F.coeff(0),
            p1=-F.coeff(1),
            p2=-F.coeff(2),
            q0=-G0.coeff(0),
            q1=-G0.coeff(1),
            q2=t,
            q3=-G0.coeff(3),
            q4=-G0.coeff(4),
            t_slot="q2",
        )
    assert G0.coeff(1).is_zero()
    return PencilCoeffs(
        d.case,
        p0=F.coeff(2),
        p1=F.coeff(1),
        p2=F.coeff(0),
        q0=-G0.coeff(4),
        q1=-G0.coeff(3),
        q2=-G0.coeff(2),
        q3=t,
        q4=-G0.coeff(0),
        t_slot="q3",
    )
