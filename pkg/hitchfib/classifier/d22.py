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
Decision trees for two poles of order two (fiber at infinity of type I2*, I3*, I4*).
"""

from hitchfib.kodaira import KodairaType as T
from hitchfib.polar import DerivedInvariants

from .build import CLASSIFIER_REGISTRY, Companion


@CLASSIFIER_REGISTRY.register("d22_ss")
def classify_d22_ss(inv: DerivedInvariants):
    A, B, L, M, delta = inv.A, inv.B, inv.L, inv.M, inv.delta
    L2, M2 = L * L, M * M
    parity = inv.section_parity
    if delta.is_zero():
        assert not (L.is_zero() and M.is_zero()), "delta=0 with L=M=0 forces A*B=0"
        if L2 == M2:
            return 1, [Companion(T.III, parity=parity), Companion(T.I1)]
        if L2 == -M2:
            if M**3 == 8 * A * B * L:
                return 2, [Companion(T.II), Companion(T.II)]
            return 3, [Companion(T.II), Companion(T.I1), Companion(T.I1)]
        return 4, [Companion(T.II), Companion(T.I1), Companion(T.I1)]
    if L.is_zero() and M.is_zero():
        return 5, [Companion(T.I2, parity="+-"), Companion(T.I2, parity="+-")]
    if L2 == M2:
        return 6, [Companion(T.I2, parity=parity), Companion(T.I1), Companion(T.I1)]
    return 7, [Companion(T.I1)] * 4


@CLASSIFIER_REGISTRY.register("d22_sn")
def classify_d22_sn(inv: DerivedInvariants):
    if inv.delta.is_zero():
        return 1, [Companion(T.II), Companion(T.I1)]
    return 2, [Companion(T.I1)] * 3


@CLASSIFIER_REGISTRY.register("d22_nn")
def classify_d22_nn(inv: DerivedInvariants):
    return 1, [Companion(T.I1), Companion(T.I1)]
