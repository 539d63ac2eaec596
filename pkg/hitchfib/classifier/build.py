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
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from hitchfib.kodaira import KodairaType, euler_number, is_allowed_configuration
from hitchfib.polar import CaseTag, DerivedInvariants
from hitchfib.structures import FiberReport, SingularFiberEntry
from hitchfib.utils.registry import Registry
from hitchfib.weights import ParabolicWeights, hecke_reduce, hitchin_class

__all__ = [
    "CLASSIFIER_REGISTRY",
    "Companion",
    "Classification",
    "classify",
    "classify_with_weights",
    "weights_for",
]

logger = logging.getLogger(__name__)

CLASSIFIER_REGISTRY = Registry("CLASSIFIER")
CLASSIFIER_REGISTRY.__doc__ = """
Closed-form decision trees, one per pole configuration, keyed by ``CaseTag.registry_key``.
Each takes ``DerivedInvariants`` and returns ``(branch, companions)``.
"""


@dataclass(frozen=True)
class Companion:
    """
    A singular fiber besides the one at infinity.

    ``parity`` is the section sign of a fiber containing a section of the pencil;
    ``degenerate`` marks the fiber over the non-semisimple simple pole.
    """

    kodaira: KodairaType
    degenerate: bool = False
    parity: Optional[str] = None

    @property
    def key(self) -> str:
        return self.kodaira.name + ("~deg" if self.degenerate else "")


@dataclass(frozen=True)
class Classification:
    case: CaseTag
    infinity: KodairaType
    companions: Tuple[Companion, ...]
    branch: str

    def kodaira_types(self) -> List[KodairaType]:
        return [c.kodaira for c in self.companions]

    def keys(self) -> List[str]:
        return sorted(c.key for c in self.companions)


def classify(inv: DerivedInvariants, case: Optional[CaseTag] = None) -> Classification:
    """
    Singular fibers of the elliptic fibration with invariants ``inv``.

    The decision trees are evaluated with exact arithmetic and the result is checked
    against the Euler number and the list of admissible companion configurations.
    """
    case = case or inv.case
    item, companions = CLASSIFIER_REGISTRY.get(case.registry_key)(inv)
    companions = tuple(sorted(companions, key=lambda c: (c.kodaira.sort_key(), c.degenerate)))
    types = [c.kodaira for c in companions]
    assert euler_number(case.infinity) + sum(euler_number(t) for t in types) == 12, (
        case,
        item,
    )
    if not case.degenerate:
        assert is_allowed_configuration(case.infinity, types), (case, item)
    branch = f"{case.value}/{item}"
    logger.debug(f"{branch}: {case.infinity} + {[c.key for c in companions]}")
    return Classification(case, case.infinity, companions, branch)


def weights_for(companions, w: ParabolicWeights) -> List[ParabolicWeights]:
    """
    Weights governing each companion. Fibers in a ``+`` section configuration see the
    weights with ``alpha_+^2`` and ``alpha_-^2`` exchanged; when both section signs
    occur the first such fiber keeps ``w`` and the second sees the exchanged weights.
    """
    out = []
    seen_both = 0
    for c in companions:
        if c.degenerate or c.parity in (None, "-"):
            out.append(w)
        elif c.parity == "+":
            out.append(w.swapped())
        else:
            out.append(w if seen_both == 0 else w.swapped())
            seen_both += 1
    return out


def _classes(entry: SingularFiberEntry):
    return entry.hitchin_ss_class, entry.hitchin_s_class


def classify_with_weights(
    inv: DerivedInvariants,
    case: Optional[CaseTag] = None,
    w: Optional[ParabolicWeights] = None,
) -> FiberReport:
    """
    Classification together with the Hitchin fiber classes over each singular fiber.

    Args:
        w: parabolic weights, generic ones by default. With ``extended_alpha_plus`` set
            the bidegree labels follow that value and ``walls_crossed`` counts the walls
            between it and ``(0, 1)``.
    """
    case = case or inv.case
    w = w if w is not None else ParabolicWeights.generic()
    cl = classify(inv, case)
    entries = []
    for comp, wc in zip(cl.companions, weights_for(cl.companions, w)):
        entry = hitchin_class(comp.kodaira, wc, comp.degenerate)
        if not wc.is_extended and wc.degree_class == 2:
            other = hitchin_class(comp.kodaira, hecke_reduce(wc, prefer="-")[0], comp.degenerate)
            assert _classes(entry) == _classes(other), (comp, wc)
        entries.append(entry)
    walls = math.ceil(w.alpha_plus) - 1 if w.is_extended else 0
    return FiberReport(
        infinity=cl.infinity,
        fibers=entries,
        case_branch=cl.branch,
        walls_crossed=walls,
        case="d22-ns" if inv.swapped else case.value,
    )
