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
Report records shared by the closed-form classifier, the weight tables and the oracle.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from hitchfib.kodaira import GrothClass, KodairaType, groth_class

__all__ = ["Bidegree", "FiberComponent", "SingularFiberEntry", "FiberReport"]


@dataclass(frozen=True, order=True)
class Bidegree:
    """Degrees ``(dplus, dminus)`` of a spectral sheaf on the two components of its curve."""

    dplus: int
    dminus: int

    def shift(self, dplus: int = 0, dminus: int = 0) -> "Bidegree":
        return Bidegree(self.dplus + dplus, self.dminus + dminus)

    def __sub__(self, other: "Bidegree") -> Tuple[int, int]:
        return (self.dplus - other.dplus, self.dminus - other.dminus)

    @property
    def total(self) -> int:
        return self.dplus + self.dminus

    def to_json(self) -> List[int]:
        return [self.dplus, self.dminus]

    @classmethod
    def from_json(cls, value) -> "Bidegree":
        dplus, dminus = value
        return cls(int(dplus), int(dminus))

    def __str__(self):
        return f"({self.dplus},{self.dminus})"


@dataclass(frozen=True)
class FiberComponent:
    """A stratum of a Hitchin fiber; ``bidegree`` is set for sheaves on reducible curves."""

    cls: GrothClass
    bidegree: Optional[Bidegree] = None
    stable: bool = True

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"class": self.cls.to_json()}
        if self.bidegree is not None:
            out["bidegree"] = self.bidegree.to_json()
        if not self.stable:
            out["stable"] = False
        return out


@dataclass(frozen=True)
class SingularFiberEntry:
    kodaira: Optional[KodairaType]
    components: Tuple[FiberComponent, ...] = ()
    compact: bool = True
    degenerate: bool = False

    @property
    def hitchin_ss_class(self) -> GrothClass:
        total = GrothClass()
        for c in self.components:
            total = total + c.cls
        return total

    @property
    def hitchin_s_class(self) -> GrothClass:
        total = GrothClass()
        for c in self.components:
            if c.stable:
                total = total + c.cls
        return total

    def bidegrees(self) -> List[Bidegree]:
        return [c.bidegree for c in self.components if c.bidegree is not None]

    def label(self) -> str:
        """Kodaira name when known, the semistable class otherwise."""
        if self.kodaira is not None:
            return self.kodaira.name
        return str(self.hitchin_ss_class)

    def check(self):
        assert self.hitchin_s_class.dominated_by(self.hitchin_ss_class), self
        if self.compact and self.kodaira is not None:
            assert self.hitchin_ss_class == groth_class(self.kodaira) or any(
                not c.stable for c in self.components
            ), self

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        if self.kodaira is not None:
            out["kodaira"] = self.kodaira.name
        out["ss"] = self.hitchin_ss_class.to_json()
        out["s"] = self.hitchin_s_class.to_json()
        out["components"] = [c.to_json() for c in self.components]
        out["compact"] = self.compact
        if self.degenerate:
            out["degenerate"] = True
        return out


@dataclass
class FiberReport:
    infinity: KodairaType
    fibers: List[SingularFiberEntry]
    case_branch: str
    walls_crossed: int = 0
    case: Optional[str] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def kodaira_types(self) -> List[KodairaType]:
        return [f.kodaira for f in self.fibers if f.kodaira is not None]

    def multiset(self) -> Counter:
        """Fibers keyed by ``label()``; degenerate fibers carry a ``~deg`` suffix."""
        return Counter(f.label() + ("~deg" if f.degenerate else "") for f in self.fibers)

    def fiber_names(self) -> List[str]:
        return sorted(f.label() for f in self.fibers)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        if self.case is not None:
            out["case"] = self.case
        out["infinity"] = self.infinity.name
        out["branch"] = self.case_branch
        out["walls_crossed"] = self.walls_crossed
        out["fibers"] = [f.to_json() for f in self.fibers]
        out.update(self.extra)
        return out
