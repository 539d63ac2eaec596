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

from enum import Enum
from typing import Dict, Tuple

from hitchfib.kodaira import KodairaType
from hitchfib.utils.exceptions import SchemaError

__all__ = ["CaseTag", "PARAM_NAMES", "SWAPPED_PARAM_NAMES", "parse_case"]


class CaseTag(str, Enum):
    """
    Pole configurations. ``d22`` has two poles of order two, ``d31`` a pole of order
    three and a simple pole; the suffix says whether the leading term at each pole is
    semisimple (``s``) or nilpotent (``n``), higher order pole first.
    """

    D22_Ss = "d22-ss"
    D22_Sn = "d22-sn"
    D22_Nn = "d22-nn"
    D31_Ss = "d31-ss"
    D31_Sn = "d31-sn"
    D31_Ns = "d31-ns"
    D31_Nn = "d31-nn"

    @property
    def registry_key(self) -> str:
        return self.value.replace("-", "_")

    @property
    def is_22(self) -> bool:
        return self.value.startswith("d22")

    @property
    def t_degree(self) -> int:
        """Power of z multiplying the pencil parameter in the working chart."""
        return 2 if self.is_22 else 1

    @property
    def degenerate(self) -> bool:
        """Non-semisimple residue at the simple pole."""
        return self in (CaseTag.D31_Sn, CaseTag.D31_Nn)

    @property
    def infinity(self) -> KodairaType:
        return _INFINITY[self]

    @property
    def max_fibers(self) -> int:
        return _MAX_FIBERS[self]

    def __str__(self):
        return self.value


_INFINITY = {
    CaseTag.D22_Ss: KodairaType.I_star(2),
    CaseTag.D22_Sn: KodairaType.I_star(3),
    CaseTag.D22_Nn: KodairaType.I_star(4),
    CaseTag.D31_Ss: KodairaType.E6,
    CaseTag.D31_Sn: KodairaType.E6,
    CaseTag.D31_Ns: KodairaType.E7,
    CaseTag.D31_Nn: KodairaType.E7,
}

_MAX_FIBERS = {
    CaseTag.D22_Ss: 4,
    CaseTag.D22_Sn: 3,
    CaseTag.D22_Nn: 2,
    CaseTag.D31_Ss: 4,
    CaseTag.D31_Sn: 4,
    CaseTag.D31_Ns: 3,
    CaseTag.D31_Nn: 2,
}

_S22 = ("a_plus", "a_minus", "lambda_plus", "lambda_minus")
_S31 = ("a_plus", "a_minus", "b_plus", "b_minus", "lambda_plus", "lambda_minus")
_N31 = ("b_m6", "b_m5", "b_m4", "b_m3", "b_m2")

PARAM_NAMES: Dict[CaseTag, Tuple[str, ...]] = {
    CaseTag.D22_Ss: _S22 + ("b_plus", "b_minus", "mu_plus", "mu_minus"),
    CaseTag.D22_Sn: _S22 + ("b_m4", "b_m3", "b_m2"),
    CaseTag.D22_Nn: ("a_m4", "a_m3", "a_m2", "b_m4", "b_m3", "b_m2"),
    CaseTag.D31_Ss: _S31 + ("mu_plus", "mu_minus"),
    CaseTag.D31_Sn: _S31 + ("b_m1",),
    CaseTag.D31_Ns: _N31 + ("mu_plus", "mu_minus"),
    CaseTag.D31_Nn: _N31 + ("b_m1",),
}

# d22-ns input name -> canonical d22-sn name after exchanging the two poles
SWAPPED_PARAM_NAMES: Dict[str, str] = {
    "b_plus": "a_plus",
    "b_minus": "a_minus",
    "mu_plus": "lambda_plus",
    "mu_minus": "lambda_minus",
    "a_m4": "b_m4",
    "a_m3": "b_m3",
    "a_m2": "b_m2",
}


def parse_case(name) -> Tuple[CaseTag, bool]:
    """
    Returns:
        (CaseTag, bool): canonical case and whether the poles were exchanged
        (``d22-ns`` is read as ``d22-sn``).
    """
    if isinstance(name, CaseTag):
        return name, False
    key = str(name).strip().lower().replace("_", "-")
    if key == "d22-ns":
        return CaseTag.D22_Sn, True
    try:
        return CaseTag(key), False
    except ValueError:
        raise SchemaError(f"unknown case {name!r}") from None
