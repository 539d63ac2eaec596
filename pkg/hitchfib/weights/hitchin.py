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
from typing import List, Optional, Sequence, Tuple

from hitchfib.kodaira import LEF, PT, KodairaType
from hitchfib.structures import Bidegree, FiberComponent, SingularFiberEntry
from hitchfib.utils.exceptions import UnsupportedFiber

from .hecke import HeckeTransform, hecke_reduce, unreduce
from .parabolic import ParabolicWeights
from .stability import (
    SheafClass,
    Stability,
    central_bidegree,
    is_semistable,
    stable_bidegrees,
    weight_class,
)

__all__ = ["hitchin_class", "reduced_weights", "component_shift"]

logger = logging.getLogger(__name__)

T = KodairaType


def reduced_weights(w: ParabolicWeights) -> Tuple[ParabolicWeights, List[HeckeTransform]]:
    """Weights used for the bidegree tables; extended weights are used as given."""
    if w.is_extended:
        return w, []
    return hecke_reduce(w)


def _bidegrees(w: ParabolicWeights):
    """
    Returns:
        (tuple[Bidegree, ...], bool): stable bidegrees in the coordinates of ``w`` and
        whether ``w`` is generic. Special weights give the single central bidegree.
    """
    reduced, steps = reduced_weights(w)
    wc = weight_class(w)
    if wc.generic:
        found = stable_bidegrees(reduced.alpha_plus)
    else:
        found = (central_bidegree(wc.wall),)
    for b in found:
        assert is_semistable(SheafClass(0, b), reduced) == Stability.STABLE, (b, reduced)
    return tuple(unreduce(b, steps) for b in found), wc.generic


def _generic_or_special(w, generic_parts, special_parts):
    bidegrees, generic = _bidegrees(w)
    if generic:
        return [
            FiberComponent(cls, bidegrees[i] if i is not None else None, True)
            for cls, i in generic_parts
        ]
    return [
        FiberComponent(cls, bidegrees[0] if i is not None else None, stable)
        for cls, i, stable in special_parts
    ]


def hitchin_class(
    fiber: KodairaType, w: Optional[ParabolicWeights] = None, degenerate: bool = False
) -> SingularFiberEntry:
    """
    Stratification of the Hitchin fiber over a singular spectral curve of type ``fiber``.

    Components of reducible curves are labelled by the bidegree of their sheaves. Over
    special weights the sheaves of extremal bidegree are strictly semistable and
    S-equivalent; they contribute one non-stable point.

    Args:
        fiber: one of I1, II, III, I2, and with ``degenerate`` also I3 and IV.
        w: parabolic weights, generic by default.
        degenerate: the fiber lies over the non-semisimple simple pole and only sheaves
            locally free there are counted.

    Raises:
        UnsupportedFiber: ``fiber`` has no table entry in this context.
    """
    w = w if w is not None else ParabolicWeights.generic()
    mixed = LEF - PT
    if not degenerate:
        if fiber == T.I1:
            parts = [FiberComponent(mixed), FiberComponent(PT)]
        elif fiber == T.II:
            parts = [FiberComponent(LEF), FiberComponent(PT)]
        elif fiber == T.III:
            parts = _generic_or_special(
                w,
                [(LEF, 0), (LEF, 1), (PT, None)],
                [(LEF, 0, True), (PT, None, False)],
            )
        elif fiber == T.I2:
            parts = _generic_or_special(
                w,
                [(mixed, 0), (mixed, 1), (PT, None), (PT, None)],
                [(mixed, 0, True), (PT, None, False)],
            )
        else:
            raise UnsupportedFiber(f"no Hitchin fiber table for {fiber}")
    else:
        if fiber == T.I2:
            parts = [FiberComponent(mixed)]
        elif fiber == T.III:
            parts = [FiberComponent(LEF)]
        elif fiber == T.I(3):
            parts = _generic_or_special(
                w,
                [(mixed, 0), (mixed, 1), (PT, None)],
                [(mixed, 0, True), (PT, None, True), (PT, None, False)],
            )
        elif fiber == T.IV:
            parts = _generic_or_special(
                w,
                [(LEF, 0), (LEF, 1)],
                [(LEF, 0, True), (PT, None, False)],
            )
        else:
            raise UnsupportedFiber(f"no Hitchin fiber table for degenerate {fiber}")
    entry = SingularFiberEntry(
        kodaira=fiber, components=tuple(parts), compact=not degenerate, degenerate=degenerate
    )
    entry.check()
    return entry


def component_shift(before: Sequence[Bidegree], after: Sequence[Bidegree]):
    """Pairwise bidegree differences after sorting by ``dplus``."""
    return [b - a for a, b in zip(sorted(before), sorted(after))]
