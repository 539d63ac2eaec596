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
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional

from hitchfib.numerics import GaussianRational
from hitchfib.utils.exceptions import NotElliptic, ResidueViolation, SchemaError

from .cases import PARAM_NAMES, SWAPPED_PARAM_NAMES, CaseTag, parse_case

__all__ = ["PolarData", "DerivedInvariants", "validate"]

logger = logging.getLogger(__name__)

G = GaussianRational
_ZERO = G(0)


@dataclass(frozen=True, eq=True)
class PolarData:
    """
    Local data of the Higgs field at the two poles.

    ``swapped`` is set when the input was given as ``d22-ns``; the stored ``case`` and
    ``params`` are then those of the equivalent ``d22-sn`` configuration.
    """

    case: CaseTag
    params: Mapping[str, GaussianRational] = field(hash=False)
    swapped: bool = False

    @classmethod
    def create(cls, case, params: Mapping) -> "PolarData":
        tag, swapped = parse_case(case)
        given = dict(params)
        if swapped:
            given = {SWAPPED_PARAM_NAMES.get(k, k): v for k, v in given.items()}
        expected = PARAM_NAMES[tag]
        missing = [k for k in expected if k not in given]
        extra = sorted(k for k in given if k not in expected)
        if missing or extra:
            label = "d22-ns" if swapped else tag.value
            raise SchemaError(
                f"parameters for {label}: missing {_names(missing, swapped)}, "
                f"unexpected {_names(extra, swapped)}"
            )
        values = {}
        for k in expected:
            try:
                values[k] = GaussianRational.coerce(given[k])
            except (TypeError, ValueError, ZeroDivisionError) as e:
                raise SchemaError(f"parameter {k}: {e}") from e
        return cls(tag, values, swapped)

    def __getitem__(self, name: str) -> GaussianRational:
        return self.params[name]

    @property
    def input_case(self) -> str:
        return "d22-ns" if self.swapped else self.case.value

    def input_params(self) -> Dict[str, GaussianRational]:
        """Parameters under the names they were given with."""
        if not self.swapped:
            return dict(self.params)
        back = {v: k for k, v in SWAPPED_PARAM_NAMES.items()}
        return {back[k]: v for k, v in self.params.items()}

    def replace(self, **changes) -> "PolarData":
        params = dict(self.params)
        params.update({k: GaussianRational.coerce(v) for k, v in changes.items()})
        return PolarData(self.case, params, self.swapped)


def _names(keys, swapped):
    if not keys:
        return "none"
    if swapped:
        back = {v: k for k, v in SWAPPED_PARAM_NAMES.items()}
        keys = [back.get(k, k) for k in keys]
    return ", ".join(keys)


@dataclass(frozen=True)
class DerivedInvariants:
    """
    Exact invariants of the polar data.

    Fields that do not apply to ``case`` are ``None``. For ``d31-sn`` and ``d31-nn``
    the ``blowup_*`` entries describe the points of the pencil in the blow-up chart
    over the simple pole: they sit at the roots of ``s**2 + blowup_linear*s +
    (blowup_linear**2 - blowup_disc)/4`` and all lie on the fiber ``t = blowup_t``.
    """

    case: CaseTag
    A: Optional[GaussianRational] = None
    B: Optional[GaussianRational] = None
    L: Optional[GaussianRational] = None
    M: Optional[GaussianRational] = None
    Q: Optional[GaussianRational] = None
    R: Optional[GaussianRational] = None
    a_m3: Optional[GaussianRational] = None
    b_m3: Optional[GaussianRational] = None
    delta: Optional[GaussianRational] = None
    delta0: Optional[GaussianRational] = None
    delta1: Optional[GaussianRational] = None
    has_section: bool = False
    section_parity: Optional[str] = None
    b_sum: Optional[GaussianRational] = None
    lambda_sum: Optional[GaussianRational] = None
    blowup_linear: Optional[GaussianRational] = None
    blowup_disc: Optional[GaussianRational] = None
    blowup_t: Optional[GaussianRational] = None
    swapped: bool = False

    def as_dict(self) -> Dict[str, object]:
        out = {}
        for name in self.__dataclass_fields__:
            value = getattr(self, name)
            if value is None:
                continue
            out[name] = str(value) if not isinstance(value, bool) else value
        return out


def _residue(d: PolarData) -> GaussianRational:
    p = d.params
    case = d.case
    if case in (CaseTag.D22_Ss, CaseTag.D31_Ss):
        return p["lambda_plus"] + p["lambda_minus"] + p["mu_plus"] + p["mu_minus"]
    if case == CaseTag.D22_Sn:
        return p["lambda_plus"] + p["lambda_minus"] + p["b_m2"]
    if case == CaseTag.D22_Nn:
        return p["a_m2"] + p["b_m2"]
    if case == CaseTag.D31_Sn:
        return p["lambda_plus"] + p["lambda_minus"] + 2 * p["b_m1"]
    if case == CaseTag.D31_Ns:
        return p["b_m2"] + p["mu_plus"] + p["mu_minus"]
    return p["b_m2"] + 2 * p["b_m1"]


def _diff(p, name):
    return p[name + "_minus"] - p[name + "_plus"]


def _section(L, M):
    if L * L != M * M:
        return False, None
    if L.is_zero():
        return True, "+-"
    return True, "+" if L == M else "-"


def _invariants_22_ss(p):
    A, B, L, M = _diff(p, "a"), _diff(p, "b"), _diff(p, "lambda"), _diff(p, "mu")
    if A.is_zero():
        raise NotElliptic("A=0")
    if B.is_zero():
        raise NotElliptic("B=0")
    delta = (
        -256 * A**3 * B**3
        + 192 * A**2 * B**2 * L * M
        - 3 * A * B * (9 * L**4 - 2 * L**2 * M**2 + 9 * M**4)
        + 4 * L**3 * M**3
    )
    delta0 = 3 * A * B * (L * M - 4 * A * B)
    delta1 = B**4 * (16 * A * B * L * M - 64 * A**2 * B**2 - 3 * M**4)
    has_section, parity = _section(L, M)
    return dict(
        A=A, B=B, L=L, M=M, delta=delta, delta0=delta0, delta1=delta1,
        has_section=has_section, section_parity=parity,
    )


def _invariants_22_sn(p):
    A, L = _diff(p, "a"), _diff(p, "lambda")
    b_m3 = p["b_m3"]
    if A.is_zero():
        raise NotElliptic("A=0")
    if b_m3.is_zero():
        raise NotElliptic("b_m3=0")
    delta = 4 * A**3 * b_m3 * (2 * L**3 - 27 * A * b_m3)
    delta0 = 6 * A * b_m3 * L
    return dict(A=A, L=L, b_m3=b_m3, delta=delta, delta0=delta0)


def _invariants_22_nn(p):
    a_m3, b_m3 = p["a_m3"], p["b_m3"]
    if (a_m3 * b_m3).is_zero():
        raise NotElliptic("a_m3*b_m3=0")
    return dict(a_m3=a_m3, b_m3=b_m3, delta=4 * a_m3 * b_m3)


def _invariants_31_s(p, nilpotent_simple):
    A, B, L = _diff(p, "a"), _diff(p, "b"), _diff(p, "lambda")
    if A.is_zero():
        raise NotElliptic("A=0")
    out = dict(A=A, B=B, L=L)
    if nilpotent_simple:
        b_sum = p["b_minus"] + p["b_plus"]
        out.update(
            delta=4 * A**2 * (B**2 - 6 * A * L),
            has_section=L.is_zero(),
            b_sum=b_sum,
            lambda_sum=p["lambda_minus"] + p["lambda_plus"],
            blowup_linear=b_sum,
            blowup_disc=2 * A * L + B**2,
            blowup_t=b_sum * p["b_m1"],
        )
        return out
    M = _diff(p, "mu")
    if M.is_zero():
        raise NotElliptic("M=0")
    q = L**2 + 3 * M**2
    delta = (
        48 * A**4 * q**2
        + 64 * A**3 * B**2 * L * (L**2 - 9 * M**2)
        + 24 * A**2 * B**4 * q
        - B**8
    )
    delta0 = (2 * A * L + B**2) ** 2 - 36 * A**2 * M**2
    has_section, parity = _section(L, M)
    out.update(
        M=M, delta=delta, delta0=delta0, has_section=has_section, section_parity=parity,
        b_sum=p["b_minus"] + p["b_plus"], lambda_sum=p["lambda_minus"] + p["lambda_plus"],
    )
    return out


def _invariants_31_n(p, nilpotent_simple):
    Q = 8 * p["b_m5"]
    R = p["b_m4"] ** 2 + 4 * p["b_m3"]
    if nilpotent_simple:
        if Q.is_zero():
            raise NotElliptic("Q=0")
        return dict(
            Q=Q, R=R,
            blowup_linear=p["b_m4"], blowup_disc=R, blowup_t=p["b_m4"] * p["b_m1"],
        )
    M = _diff(p, "mu")
    if M.is_zero():
        raise NotElliptic("M=0")
    if Q.is_zero():
        raise NotElliptic("Q=0")
    return dict(M=M, Q=Q, R=R, delta=M**2 * (27 * M**2 * Q**2 - 4 * R**3))


_SWAPPED_REASONS = {"A=0": "B=0", "b_m3=0": "a_m3=0"}


def validate(d: PolarData) -> DerivedInvariants:
    """
    Check the residue condition and ellipticity of ``d`` and compute its invariants.

    Raises:
        ResidueViolation: the residues at the two poles do not sum to zero.
        NotElliptic: a leading or subleading coefficient degenerates; ``reason`` names it
            in the input's own labels.
    """
    residue = _residue(d)
    if not residue.is_zero():
        raise ResidueViolation(f"residue condition for {d.input_case} fails: sum is {residue}")
    p = d.params
    case = d.case
    try:
        if case == CaseTag.D22_Ss:
            values = _invariants_22_ss(p)
        elif case == CaseTag.D22_Sn:
            values = _invariants_22_sn(p)
        elif case == CaseTag.D22_Nn:
            values = _invariants_22_nn(p)
        elif case in (CaseTag.D31_Ss, CaseTag.D31_Sn):
            values = _invariants_31_s(p, case == CaseTag.D31_Sn)
        else:
            values = _invariants_31_n(p, case == CaseTag.D31_Nn)
    except NotElliptic as e:
        reason = _SWAPPED_REASONS.get(e.reason, e.reason) if d.swapped else e.reason
        raise NotElliptic(reason, d.input_case) from None
    inv = DerivedInvariants(case=case, swapped=d.swapped, **values)
    logger.debug(f"{d.input_case}: delta={inv.delta} section={inv.section_parity}")
    return inv
