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

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

__all__ = [
    "GrothClass",
    "LEF",
    "PT",
    "KodairaType",
    "groth_class",
    "euler_number",
    "fiber_multiset",
]


@dataclass(frozen=True, order=True)
class GrothClass:
    """
    Element ``l_coeff * L + pt_coeff * Pt`` of the Grothendieck ring of varieties,
    restricted to the span of the affine line and the point.
    """

    l_coeff: int = 0
    pt_coeff: int = 0

    def __add__(self, other: "GrothClass") -> "GrothClass":
        return GrothClass(self.l_coeff + other.l_coeff, self.pt_coeff + other.pt_coeff)

    def __sub__(self, other: "GrothClass") -> "GrothClass":
        return GrothClass(self.l_coeff - other.l_coeff, self.pt_coeff - other.pt_coeff)

    def __neg__(self) -> "GrothClass":
        return GrothClass(-self.l_coeff, -self.pt_coeff)

    def __mul__(self, k: int) -> "GrothClass":
        return GrothClass(k * self.l_coeff, k * self.pt_coeff)

    __rmul__ = __mul__

    def dominated_by(self, other: "GrothClass") -> bool:
        return self.l_coeff <= other.l_coeff and self.pt_coeff <= other.pt_coeff

    def euler_characteristic(self) -> int:
        return self.l_coeff + self.pt_coeff

    def to_json(self):
        return [self.l_coeff, self.pt_coeff]

    @classmethod
    def from_json(cls, value) -> "GrothClass":
        l_coeff, pt_coeff = value
        return cls(int(l_coeff), int(pt_coeff))

    def __str__(self):
        if self.l_coeff == 0:
            return f"{self.pt_coeff}Pt"
        lef = "L" if self.l_coeff == 1 else f"{self.l_coeff}L"
        if self.pt_coeff == 0:
            return lef
        sign = "+" if self.pt_coeff > 0 else "-"
        pt = "Pt" if abs(self.pt_coeff) == 1 else f"{abs(self.pt_coeff)}Pt"
        return f"{lef}{sign}{pt}"


LEF = GrothClass(1, 0)
PT = GrothClass(0, 1)

# tag -> (number of components, euler number), for the tags without an index
_FIXED = {
    "II": (1, 2),
    "III": (2, 3),
    "IV": (3, 4),
    "IV*": (7, 8),
    "III*": (8, 9),
    "II*": (9, 10),
}
_TILDE_NAMES = {"IV*": "e6~", "III*": "e7~", "II*": "e8~"}
_STAR_NAMES = {v: k for k, v in _TILDE_NAMES.items()}


@dataclass(frozen=True)
class KodairaType:
    """
    Kodaira fiber type.

    ``tag`` is one of ``"I"``, ``"I*"``, ``"II"``, ``"III"``, ``"IV"``, ``"IV*"``,
    ``"III*"``, ``"II*"``; ``n`` is set for the two indexed families. The tilde names
    E6~, E7~, E8~ are accepted as synonyms of IV*, III*, II*.
    """

    tag: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.tag in ("I", "I*"):
            lower = 1 if self.tag == "I" else 0
            if self.n is None or self.n < lower:
                raise ValueError(f"{self.tag}_n needs n >= {lower}, got {self.n}")
            if self.tag == "I*" and self.n > 4:
                raise ValueError(f"I*_{self.n} does not occur on a rational elliptic surface")
        elif self.tag in _FIXED:
            if self.n is not None:
                raise ValueError(f"type {self.tag} takes no index")
        else:
            raise ValueError(f"unknown Kodaira tag {self.tag!r}")

    @classmethod
    def I(cls, n: int) -> "KodairaType":  # noqa: E743
        return cls("I", n)

    @classmethod
    def I_star(cls, n: int) -> "KodairaType":
        return cls("I*", n)

    @property
    def num_components(self) -> int:
        if self.tag == "I":
            return self.n
        if self.tag == "I*":
            return self.n + 5
        return _FIXED[self.tag][0]

    @property
    def name(self) -> str:
        """Lowercase wire name, e.g. ``"i2"``, ``"i2*"``, ``"iii"``, ``"e6~"``."""
        if self.tag == "I":
            return f"i{self.n}"
        if self.tag == "I*":
            return f"i{self.n}*"
        return _TILDE_NAMES.get(self.tag, self.tag.lower())

    @classmethod
    def parse(cls, name: str) -> "KodairaType":
        s = name.strip().lower().replace("_", "")
        if s in _STAR_NAMES:
            return cls(_STAR_NAMES[s])
        if s in ("ii", "iii", "iv", "iv*", "iii*", "ii*"):
            return cls(s.upper())
        if s.startswith("i") and s[1:].rstrip("*").isdigit():
            if s.endswith("*"):
                return cls("I*", int(s[1:-1]))
            return cls("I", int(s[1:]))
        raise ValueError(f"unknown Kodaira fiber name {name!r}")

    def sort_key(self) -> Tuple[int, int]:
        order = ["I", "II", "III", "IV", "I*", "IV*", "III*", "II*"]
        return (order.index(self.tag), self.n or 0)

    def __str__(self):
        return self.name


KodairaType.I1 = KodairaType.I(1)
KodairaType.I2 = KodairaType.I(2)
KodairaType.I3 = KodairaType.I(3)
KodairaType.II = KodairaType("II")
KodairaType.III = KodairaType("III")
KodairaType.IV = KodairaType("IV")
KodairaType.E6 = KodairaType("IV*")
KodairaType.E7 = KodairaType("III*")
KodairaType.E8 = KodairaType("II*")


def groth_class(t: KodairaType) -> GrothClass:
    """
    Class of the reduced fiber in the Grothendieck ring.

    A cycle of n rational curves (I_n) gives n*L; the remaining types are trees of
    rational curves meeting in single points, which gives k*L + Pt for k components.
    """
    if t.tag == "I":
        return t.n * LEF
    return t.num_components * LEF + PT


def euler_number(t: KodairaType) -> int:
    if t.tag == "I":
        return t.n
    if t.tag == "I*":
        return t.n + 6
    return _FIXED[t.tag][1]


def fiber_multiset(types: Iterable[KodairaType]) -> Counter:
    return Counter(t.name for t in types)
