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
from typing import Dict, FrozenSet, Iterable, Tuple

from hitchfib.utils.exceptions import UnsupportedInfinityType

from .fibers import KodairaType, euler_number

__all__ = ["allowed_companions", "is_allowed_configuration"]

T = KodairaType

# further singular fibers of a rational elliptic surface with the given fiber at infinity
_COMPANIONS: Dict[KodairaType, Tuple[Tuple[KodairaType, ...], ...]] = {
    T.I_star(4): ((T.I1, T.I1),),
    T.I_star(3): ((T.I1, T.I1, T.I1), (T.II, T.I1)),
    T.I_star(2): (
        (T.I1, T.I1, T.I1, T.I1),
        (T.II, T.I1, T.I1),
        (T.I2, T.I1, T.I1),
        (T.I2, T.I2),
        (T.II, T.II),
        (T.III, T.I1),
    ),
    T.E7: ((T.I1, T.I1, T.I1), (T.I2, T.I1), (T.II, T.I1), (T.III,)),
    T.E6: (
        (T.I1, T.I1, T.I1, T.I1),
        (T.I2, T.I1, T.I1),
        (T.II, T.I1, T.I1),
        (T.II, T.I2),
        (T.II, T.II),
        (T.I3, T.I1),
        (T.III, T.I1),
        (T.IV,),
    ),
}


def _freeze(types: Iterable[KodairaType]) -> FrozenSet:
    return frozenset(Counter(types).items())


def allowed_companions(infinity: KodairaType) -> FrozenSet[FrozenSet]:
    """
    Multisets of singular fibers that can accompany ``infinity``.

    Each multiset is returned as a frozenset of ``(KodairaType, count)`` pairs.

    Raises:
        UnsupportedInfinityType: unless ``infinity`` is one of I2*, I3*, I4*, E6~, E7~.
    """
    if infinity not in _COMPANIONS:
        raise UnsupportedInfinityType(f"no companion table for fiber type {infinity}")
    return frozenset(_freeze(m) for m in _COMPANIONS[infinity])


def is_allowed_configuration(infinity: KodairaType, companions: Iterable[KodairaType]) -> bool:
    companions = list(companions)
    if euler_number(infinity) + sum(euler_number(t) for t in companions) != 12:
        return False
    return _freeze(companions) in allowed_companions(infinity)
