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

"""
Exact assignment of singular points to the members of the pencil.

Over a root ``z`` of the singular-point polynomial the member is ``t(z) = h(z) / z**k``.
Modulo the radical ``R`` of that polynomial, ``t(z)`` is the polynomial ``u(z)``, and
the characteristic polynomial ``T`` of multiplication by ``u`` on ``Q(i)[z] / R`` has
exactly the values ``t(z)`` as roots, one per root of ``R``. A root of ``T`` of
multiplicity ``r`` is a member through ``r`` points, so the square-free structure of
``T`` decides which points share a member without comparing floating values.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import sympy

from hitchfib.numerics import GaussianRational, Poly1, square_free_factors

__all__ = ["Member", "MemberSplit", "member_polynomial", "split_by_member"]

_T = sympy.Symbol("t")


@dataclass(frozen=True)
class Member:
    """
    Members of the pencil grouped by the number of base points they carry.

    ``values`` is square-free in ``t`` and vanishes at each of these members. Each one
    carries ``points_per_value`` base points.
    """

    values: Poly1
    points_per_value: int


@dataclass(frozen=True)
class MemberSplit:
    """Square-free ``factor`` of the singular-point polynomial whose roots lie on ``member``."""

    factor: Poly1
    multiplicity: int
    member: int


def _inverse_of_z(R: Poly1) -> Poly1:
    # R = r0 + z*Q with r0 != 0, so z * (-Q / r0) = 1 mod R
    r0 = R.coeff(0)
    assert not r0.is_zero(), "z = 0 is not a root of the reduced polynomial"
    return Poly1(R.coeffs[1:]) * (-GaussianRational(1) / r0)


def _compose(q: Poly1, u: Poly1, R: Poly1) -> Poly1:
    """``q(u(z)) mod R``."""
    acc = Poly1([0])
    for c in reversed(q.coeffs):
        acc = (acc * u + c).rem(R)
    return acc


def member_polynomial(R: Poly1, u: Poly1) -> Poly1:
    """Characteristic polynomial in ``t`` of multiplication by ``u`` modulo ``R``."""
    n = R.degree
    columns = []
    basis = Poly1([1])
    for _ in range(n):
        image = (u * basis).rem(R)
        columns.append([image.coeff(i).to_sympy() for i in range(n)])
        basis = (basis * Poly1.monomial(1)).rem(R)
    matrix = sympy.Matrix(n, n, lambda i, j: columns[j][i])
    coeffs = matrix.charpoly(_T).all_coeffs()
    return Poly1([GaussianRational.from_sympy(c) for c in reversed(coeffs)])


def split_by_member(
    factors: Sequence[Tuple[Poly1, int]],
    h: Poly1,
    k: int,
    blowup_t: Optional[GaussianRational] = None,
) -> Tuple[List[Member], List[MemberSplit], Optional[int]]:
    """
    Split the square-free ``factors`` of the reduced singular-point polynomial by member.

    Args:
        factors: ``(factor, multiplicity)`` pairs, pairwise coprime, none vanishing at 0.
        h: the polynomial with ``t(z) = h(z) / z**k`` on the singular points.
        k: power of ``z`` multiplying ``t`` in the working chart.
        blowup_t: member through the points of the blow-up chart, if there are any.

    Returns:
        the members, the factor pieces with their member index, and the index of the
        member through the blow-up points (``None`` without ``blowup_t``).
    """
    members: List[Member] = []
    splits: List[MemberSplit] = []
    R = Poly1([1])
    for f, _ in factors:
        R = R * f
    if R.degree == 0:
        if blowup_t is None:
            return members, splits, None
        members.append(Member(Poly1([-blowup_t, 1]), 0))
        return members, splits, 0

    u = (h * _compose(Poly1.monomial(k), _inverse_of_z(R), R)).rem(R)
    T = member_polynomial(R, u)

    targets: List[Member] = []
    blowup_index = None
    if blowup_t is not None:
        on_blowup = 0
        linear = Poly1([-blowup_t, 1])
        while T.degree > 0 and T(blowup_t).is_zero():
            T = T.exquo(linear)
            on_blowup += 1
        blowup_index = len(targets)
        targets.append(Member(linear, on_blowup))
    targets.extend(Member(q, r) for q, r in square_free_factors(T))

    for index, target in enumerate(targets):
        if target.points_per_value == 0:
            members.append(target)
            continue
        vanishing = _compose(target.values, u, R)
        for f, mult in factors:
            g = f.gcd(vanishing)
            if g.degree > 0:
                splits.append(MemberSplit(g, mult, index))
        members.append(target)

    for f, _ in factors:
        assert sum(s.factor.degree for s in splits if f.rem(s.factor).is_zero) == f.degree, f
    return members, splits, blowup_index
