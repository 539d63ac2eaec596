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
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from hitchfib.kodaira import KodairaType
from hitchfib.numerics import cluster_roots
from hitchfib.polar import DerivedInvariants, PolarData, validate
from hitchfib.utils.exceptions import AmbiguousCluster, ToleranceOutOfRange
from hitchfib.utils.logger import log_first_n

from .locus import SingularPoint, singular_locus

__all__ = [
    "TCluster",
    "OracleReport",
    "cluster_by_t",
    "group_by_member",
    "infer_configuration",
    "run_oracle",
]

logger = logging.getLogger(__name__)

_BY_MULTIPLICITY = {
    1: KodairaType.I1,
    2: KodairaType.II,
    3: KodairaType.III,
    4: KodairaType.IV,
}


@dataclass
class TCluster:
    t: complex
    points: List[SingularPoint]
    kodaira: Optional[KodairaType] = None
    degenerate: bool = False

    @property
    def key(self) -> str:
        return self.kodaira.name + ("~deg" if self.degenerate else "")

    def to_json(self) -> Dict[str, Any]:
        return {
            "t": [self.t.real, self.t.imag],
            "kodaira": self.kodaira.name if self.kodaira is not None else None,
            "degenerate": self.degenerate,
            "points": [p.to_json() for p in self.points],
        }


@dataclass
class OracleReport:
    points: List[SingularPoint]
    t_clusters: List[TCluster]
    section_detected: bool = False
    infinity: Optional[KodairaType] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def inferred(self) -> Counter:
        return Counter(c.key for c in self.t_clusters)

    def keys(self) -> List[str]:
        return sorted(c.key for c in self.t_clusters)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        if self.infinity is not None:
            out["infinity"] = self.infinity.name
        out["fibers"] = [
            {"kodaira": c.kodaira.name, "degenerate": c.degenerate} for c in self.t_clusters
        ]
        out["section_detected"] = self.section_detected
        out["t_clusters"] = [c.to_json() for c in self.t_clusters]
        out.update(self.extra)
        return out


def _partition(ts: np.ndarray, radius: float):
    return sorted(tuple(g) for g in cluster_roots(ts, radius))


def cluster_by_t(points: List[SingularPoint], tol: float = 1e-7) -> List[List[SingularPoint]]:
    """
    Group points lying on the same member of the pencil.

    Points are linked when their ``t`` values differ by at most ``tol * (1 + max|t|)``.

    Raises:
        AmbiguousCluster: the grouping changes when the radius shrinks tenfold.
    """
    if not (0.0 < tol < 1.0):
        raise ToleranceOutOfRange(f"cluster tolerance must lie in (0, 1), got {tol}")
    if not points:
        return []
    ts = np.array([p.t for p in points], dtype=np.complex128)
    scale = 1.0 + float(np.max(np.abs(ts)))
    coarse = _partition(ts, tol * scale)
    fine = _partition(ts, tol * scale / 10)
    if coarse != fine:
        raise AmbiguousCluster(f"t-clustering is unstable at tol={tol}: {coarse} vs {fine}")
    return [[points[i] for i in group] for group in coarse]


def group_by_member(points: List[SingularPoint]) -> List[List[SingularPoint]]:
    """Group points by the exact member label attached by :func:`singular_locus`."""
    groups: Dict[Any, List[SingularPoint]] = {}
    for p in points:
        groups.setdefault(p.member, []).append(p)
    return [groups[key] for key in sorted(groups)]


def _infer(members: List[SingularPoint], inv: DerivedInvariants) -> TCluster:
    t = complex(np.mean([p.t for p in members]))
    degenerate = any(p.on_blowup for p in members)
    mults = sorted(p.root_multiplicity for p in members)
    if len(members) == 1:
        kodaira = _BY_MULTIPLICITY.get(mults[0])
        if kodaira is None:
            raise AmbiguousCluster(f"singular point of multiplicity {mults[0]} at t={t}")
    elif all(m == 1 for m in mults):
        kodaira = KodairaType.I(len(members))
    else:
        raise AmbiguousCluster(f"mixed multiplicities {mults} on the fiber t={t}")

    # on the compact surface a reducible fiber contains the section curve
    if not degenerate and kodaira in (KodairaType.III, KodairaType.I2) and not inv.has_section:
        log_first_n(
            logging.WARNING,
            f"{inv.case}: inferred {kodaira} at t={t} although the pencil has no section",
            n=3,
        )
    return TCluster(t, members, kodaira, degenerate)


def infer_configuration(
    points: List[SingularPoint], d: PolarData, tol: float = 1e-7, inv=None
) -> OracleReport:
    """
    Fiber types of the pencil read off its singular points.

    A single point of multiplicity m gives I1, II, III or IV for m = 1..4; k simple
    points on one member give I_k. Members through the blow-up chart are degenerate.

    Points carrying a member label are grouped by it; unlabelled points fall back to
    :func:`cluster_by_t`.
    """
    inv = inv if inv is not None else validate(d)
    if points and all(p.member is not None for p in points):
        groups = group_by_member(points)
    else:
        groups = cluster_by_t(points, tol)
    clusters = [_infer(members, inv) for members in groups]
    assert len(clusters) <= d.case.max_fibers, (d.case, len(clusters))
    clusters.sort(key=lambda c: (c.kodaira.sort_key(), c.degenerate, c.t.real, c.t.imag))
    return OracleReport(points, clusters, inv.has_section, d.case.infinity)


def run_oracle(
    d: PolarData, tol: float = 1e-9, cluster_tol: float = 1e-7, inv=None
) -> OracleReport:
    inv = inv if inv is not None else validate(d)
    points = singular_locus(d, tol=tol, inv=inv)
    report = infer_configuration(points, d, tol=cluster_tol, inv=inv)
    logger.debug(f"{d.input_case}: oracle found {report.keys()}")
    return report
