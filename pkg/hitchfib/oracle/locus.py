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

import cmath
import dataclasses
import logging
from typing import Any, Dict, List, Optional, Tuple

from hitchfib.numerics import (
    GaussianRational,
    Poly1,
    roots_with_multiplicity,
    square_free_factors,
)
from hitchfib.polar import CaseTag, DerivedInvariants, PolarData, chi_polynomials, validate
from hitchfib.utils.exceptions import AmbiguousCluster, DegenerateSystem

from .members import split_by_member

__all__ = ["SingularPoint", "singular_polynomial", "singular_locus"]

logger = logging.getLogger(__name__)

BASE = "base"
BLOWUP = "blowup_u"

_QUARTER = GaussianRational(1, 0) / 4


@dataclasses.dataclass(frozen=True)
class SingularPoint:
    """
    Singular point of a member of the pencil.

    In the ``base`` chart ``(z, w_or_v)`` are the working coordinates. In the
    ``blowup_u`` chart over the simple pole ``z`` holds ``u`` (``None`` for the point
    at ``u = infinity``) and ``w_or_v`` holds ``v``.
    """

    chart: str
    z: Optional[complex]
    w_or_v: complex
    t: complex
    root_multiplicity: int = 1
    residual: float = 0.0
    member: Optional[Tuple[int, int]] = None

    @property
    def on_blowup(self) -> bool:
        return self.chart == BLOWUP

    def to_json(self) -> Dict[str, Any]:
        return {
            "chart": self.chart,
            "z": None if self.z is None else [self.z.real, self.z.imag],
            "w_or_v": [self.w_or_v.real, self.w_or_v.imag],
            "t": [self.t.real, self.t.imag],
            "multiplicity": self.root_multiplicity,
        }


def singular_polynomial(d: PolarData) -> Tuple[Poly1, Poly1, Poly1, Poly1]:
    """
    Eliminate ``w`` and ``t`` from the singular-point equations of the pencil.

    Completing the square turns the pencil into ``(w + F/2)**2 + h(z) - t z**k`` with
    ``h = G - F**2/4``; a member is singular where ``w = -F/2``, ``h(z) = t z**k`` and
    ``h'(z) = k t z**(k-1)``, so the points sit over the roots of
    ``z h'(z) - k h(z) = sum((j - k) h_j z**j)``.

    Returns:
        (Poly1, Poly1, Poly1, Poly1): that polynomial, ``h``, ``F`` and ``G``.
    """
    F, G = chi_polynomials(d)
    h = G - F * F * _QUARTER
    k = d.case.t_degree
    S = Poly1([(j - k) * c for j, c in enumerate(h.coeffs)])
    return S, h, F, G


def _blowup_points(inv: DerivedInvariants, m0: int) -> List[SingularPoint]:
    sigma, disc = inv.blowup_linear, inv.blowup_disc
    t = complex(inv.blowup_t)
    if disc.is_zero():
        assert m0 in (3, 4), m0
        s = complex(-sigma / 2)
        u = None if sigma.is_zero() else 1 / s
        return [SingularPoint(BLOWUP, u, 0j, t, m0)]
    assert m0 == 2, m0
    root = cmath.sqrt(complex(disc))
    s_values = [(-complex(sigma) + root) / 2, (-complex(sigma) - root) / 2]
    zero_at = None
    if (sigma * sigma - disc).is_zero():
        zero_at = min(range(2), key=lambda i: abs(s_values[i]))
    return [
        SingularPoint(BLOWUP, None if i == zero_at else 1 / s, 0j, t, 1)
        for i, s in enumerate(s_values)
    ]


def singular_locus(
    d: PolarData, tol: float = 1e-9, inv: Optional[DerivedInvariants] = None
) -> List[SingularPoint]:
    """
    All singular points of the members of the pencil other than the fiber at infinity.

    Roots at ``z = 0`` are dropped: for two poles of order two they lie on the fiber at
    infinity; for a simple pole they are replaced by the points of the blow-up chart
    when the residue there is nilpotent.

    Each point carries the exact member it lies on (see :mod:`.members`), so points on
    distinct members stay apart however close their ``t`` values are. Its ``residual``
    is ``|S(z) / z|``, the one singular-point equation not solved exactly at
    ``w = -F(z)/2``, ``t = h(z) / z**k``.

    Raises:
        NotElliptic: from :func:`validate`.
        DegenerateSystem: the elimination polynomial vanishes identically.
        AmbiguousCluster: a member cannot be told apart from its conjugates numerically.
    """
    inv = inv if inv is not None else validate(d)
    S, h, F, G = singular_polynomial(d)
    if S.is_zero:
        raise DegenerateSystem(f"singular-point polynomial of {d.input_case} vanishes")
    k = d.case.t_degree
    m0 = S.trailing_zeros()
    reduced = S.shift_down(m0)
    has_blowup = d.case in (CaseTag.D31_Sn, CaseTag.D31_Nn)

    factors = square_free_factors(reduced) if reduced.degree > 0 else []
    members, splits, blowup_member = split_by_member(
        factors, h, k, inv.blowup_t if has_blowup else None
    )

    points: List[SingularPoint] = []
    for split in splits:
        for root in roots_with_multiplicity(split.factor, tol=tol):
            z = root.location
            w = -F.evaluate(z) / 2
            t = complex(h.evaluate(z) / z**k)
            residual = abs(complex(S(GaussianRational.coerce(z)))) / abs(z)
            points.append(
                SingularPoint(
                    BASE,
                    complex(z),
                    complex(w),
                    t,
                    split.multiplicity,
                    residual,
                    member=(split.member, 0),
                )
            )
    points = _label_conjugates(points, members, tol)

    if has_blowup:
        blowup = _blowup_points(inv, m0)
        points.extend(dataclasses.replace(p, member=(blowup_member, 0)) for p in blowup)
    logger.debug(f"{d.input_case}: {len(points)} singular points over {len(members)} members")
    return points


def _label_conjugates(points: List[SingularPoint], members, tol: float) -> List[SingularPoint]:
    """
    Tell apart the members sharing one square-free ``values`` polynomial: a point goes to
    the nearest root, and every root must end up with ``points_per_value`` points.
    """
    out = []
    for index, member in enumerate(members):
        mine = [p for p in points if p.member[0] == index]
        if not mine:
            continue
        values = member.values
        if values.degree == 1:
            t = complex(-values.coeff(0) / values.coeff(1))
            out.extend(dataclasses.replace(p, t=t) for p in mine)
            continue
        taus = [c.location for c in roots_with_multiplicity(values, tol=tol)]
        counts = [0] * len(taus)
        for p in mine:
            s = min(range(len(taus)), key=lambda i: abs(taus[i] - p.t))
            counts[s] += 1
            out.append(dataclasses.replace(p, t=taus[s], member=(index, s)))
        if any(c != member.points_per_value for c in counts):
            raise AmbiguousCluster(
                f"points per member {counts} do not match {member.points_per_value} "
                f"for members at the roots of {values}"
            )
    return out
