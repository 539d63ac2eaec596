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
Decision trees for a pole of order three and a simple pole (fiber at infinity of type
E6~ or E7~). With a nilpotent residue at the simple pole the fiber over it is
degenerate.
"""

from hitchfib.kodaira import KodairaType as T
from hitchfib.polar import DerivedInvariants

from .build import CLASSIFIER_REGISTRY, Companion


@CLASSIFIER_REGISTRY.register("d31_ss")
def classify_d31_ss(inv: DerivedInvariants):
    A, B, L, M, delta = inv.A, inv.B, inv.L, inv.M, inv.delta
    B2 = B * B
    for s in (1, -1):
        if L == s * M:
            parity = inv.section_parity
            if B2 == s * 4 * A * M:
                return 1, [Companion(T.III, parity=parity), Companion(T.I1)]
            if B2 == -s * 12 * A * M:
                return 2, [Companion(T.II), Companion(T.I2, parity=parity)]
            return 3, [Companion(T.I2, parity=parity), Companion(T.I1), Companion(T.I1)]
    if not delta.is_zero():
        return 4, [Companion(T.I1)] * 4
    if B.is_zero():
        # needs L**2 = -3 M**2, which has no solution over Q(i)
        return 5, [Companion(T.II), Companion(T.II)]
    return 6, [Companion(T.II), Companion(T.I1), Companion(T.I1)]


@CLASSIFIER_REGISTRY.register("d31_sn")
def classify_d31_sn(inv: DerivedInvariants):
    A, B, L, delta = inv.A, inv.B, inv.L, inv.delta
    if delta.is_zero():
        if L.is_zero():
            return 1, [Companion(T.IV, degenerate=True)]
        return 2, [Companion(T.II), Companion(T.I2, degenerate=True)]
    if L.is_zero():
        return 3, [Companion(T.I1), Companion(T.I(3), degenerate=True)]
    if B * B == -2 * A * L:
        return 4, [Companion(T.I1), Companion(T.III, degenerate=True)]
    return 5, [Companion(T.I1), Companion(T.I1), Companion(T.I2, degenerate=True)]


@CLASSIFIER_REGISTRY.register("d31_ns")
def classify_d31_ns(inv: DerivedInvariants):
    if inv.delta.is_zero():
        return 1, [Companion(T.II), Companion(T.I1)]
    return 2, [Companion(T.I1)] * 3


@CLASSIFIER_REGISTRY.register("d31_nn")
def classify_d31_nn(inv: DerivedInvariants):
    if inv.R.is_zero():
        return 1, [Companion(T.III, degenerate=True)]
    return 2, [Companion(T.I1), Companion(T.I2, degenerate=True)]
