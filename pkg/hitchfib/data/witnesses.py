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
Exact parameter sets, one or more per branch of each decision tree.
"""

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from hitchfib.numerics import GaussianRational
from hitchfib.polar import PolarData

__all__ = [
    "Witness",
    "all_witnesses",
    "witnesses_for",
    "semisimple_params",
    "d22_sn_params",
    "d31_sn_params",
    "d31_ns_params",
    "d31_nn_params",
]

F = Fraction
G = GaussianRational
I = GaussianRational(0, 1)


@dataclass(frozen=True)
class Witness:
    branch: str
    data: PolarData
    expected: Tuple[str, ...]

    @property
    def case(self) -> str:
        return self.data.input_case


def semisimple_params(A, B, L, M) -> Dict[str, GaussianRational]:
    """Semisimple data at both poles with prescribed differences and zero ``+`` entries."""
    A, B, L, M = (G.coerce(x) for x in (A, B, L, M))
    return {
        "a_plus": G(0),
        "a_minus": A,
        "b_plus": G(0),
        "b_minus": B,
        "lambda_plus": G(0),
        "lambda_minus": L,
        "mu_minus": (M - L) / 2,
        "mu_plus": (-M - L) / 2,
    }


def d22_sn_params(A, L, b_m3, b_m4=0) -> Dict[str, GaussianRational]:
    A, L = G.coerce(A), G.coerce(L)
    return {
        "a_plus": G(0),
        "a_minus": A,
        "lambda_plus": G(0),
        "lambda_minus": L,
        "b_m4": G.coerce(b_m4),
        "b_m3": G.coerce(b_m3),
        "b_m2": -L,
    }


def d31_sn_params(A, B, L, b_plus=1) -> Dict[str, GaussianRational]:
    A, B, L, bp = (G.coerce(x) for x in (A, B, L, b_plus))
    return {
        "a_plus": G(0),
        "a_minus": A,
        "b_plus": bp,
        "b_minus": bp + B,
        "lambda_plus": G(0),
        "lambda_minus": L,
        "b_m1": -L / 2,
    }


def d31_ns_params(M, b_m5, b_m4, b_m3, b_m6=0) -> Dict[str, GaussianRational]:
    M = G.coerce(M)
    return {
        "b_m6": G.coerce(b_m6),
        "b_m5": G.coerce(b_m5),
        "b_m4": G.coerce(b_m4),
        "b_m3": G.coerce(b_m3),
        "b_m2": -M,
        "mu_minus": M,
        "mu_plus": G(0),
    }


def d31_nn_params(b_m5, b_m4, b_m3, b_m1=1, b_m6=0) -> Dict[str, GaussianRational]:
    b_m1 = G.coerce(b_m1)
    return {
        "b_m6": G.coerce(b_m6),
        "b_m5": G.coerce(b_m5),
        "b_m4": G.coerce(b_m4),
        "b_m3": G.coerce(b_m3),
        "b_m2": -2 * b_m1,
        "b_m1": b_m1,
    }


def _w(branch, case, params, *expected) -> Witness:
    return Witness(branch, PolarData.create(case, params), tuple(sorted(expected)))


@functools.lru_cache()
def all_witnesses() -> Tuple[Witness, ...]:
    ss22 = "d22-ss"
    ss31 = "d31-ss"
    out: List[Witness] = [
        _w("d22-ss/1", ss22, semisimple_params(1, F(1, 4), 1, 1), "iii", "i1"),
        _w("d22-ss/1", ss22, semisimple_params(1, F(-1, 4), 1, -1), "iii", "i1"),
        _w("d22-ss/2", ss22, semisimple_params(1, -I / 8, I, 1), "ii", "ii"),
        _w("d22-ss/3", ss22, semisimple_params(1, I, I, 1), "ii", "i1", "i1"),
        _w("d22-ss/4", ss22, semisimple_params(2, 1, F(-13, 4), F(-7, 2)), "ii", "i1", "i1"),
        _w("d22-ss/5", ss22, semisimple_params(1, 1, 0, 0), "i2", "i2"),
        _w("d22-ss/6", ss22, semisimple_params(1, 1, 1, 1), "i2", "i1", "i1"),
        _w("d22-ss/7", ss22, semisimple_params(1, 1, 1, 2), "i1", "i1", "i1", "i1"),
        _w("d22-sn/1", "d22-sn", d22_sn_params(1, 3, 2), "ii", "i1"),
        _w("d22-sn/2", "d22-sn", d22_sn_params(1, 1, 1), "i1", "i1", "i1"),
        _w(
            "d22-sn/1",
            "d22-ns",
            {
                "b_plus": 0,
                "b_minus": 1,
                "mu_plus": 0,
                "mu_minus": 3,
                "a_m4": 0,
                "a_m3": 2,
                "a_m2": -3,
            },
            "ii",
            "i1",
        ),
        _w(
            "d22-nn/1",
            "d22-nn",
            {"a_m4": 0, "a_m3": 1, "a_m2": 0, "b_m4": 0, "b_m3": 1, "b_m2": 0},
            "i1",
            "i1",
        ),
        _w("d31-ss/1", ss31, semisimple_params(1, 2, 1, 1), "iii", "i1"),
        _w("d31-ss/1", ss31, semisimple_params(1, 2, 1, -1), "iii", "i1"),
        _w("d31-ss/2", ss31, semisimple_params(3, 6, -1, -1), "ii", "i2"),
        _w("d31-ss/3", ss31, semisimple_params(1, 1, 1, 1), "i2", "i1", "i1"),
        _w("d31-ss/4", ss31, semisimple_params(1, 1, 1, 2), "i1", "i1", "i1", "i1"),
        _w("d31-ss/6", ss31, semisimple_params(1, F(-7, 2), F(11, 8), 2), "ii", "i1", "i1"),
        _w("d31-sn/1", "d31-sn", d31_sn_params(1, 0, 0), "iv~deg"),
        _w("d31-sn/2", "d31-sn", d31_sn_params(1, 6, 6), "ii", "i2~deg"),
        _w("d31-sn/3", "d31-sn", d31_sn_params(1, 1, 0), "i1", "i3~deg"),
        _w("d31-sn/4", "d31-sn", d31_sn_params(1, 2, -2), "i1", "iii~deg"),
        _w("d31-sn/5", "d31-sn", d31_sn_params(1, 1, 1), "i1", "i1", "i2~deg"),
        _w("d31-ns/1", "d31-ns", d31_ns_params(1, F(1, 4), 1, F(1, 2)), "ii", "i1"),
        _w("d31-ns/2", "d31-ns", d31_ns_params(1, 1, 1, 0), "i1", "i1", "i1"),
        _w("d31-nn/1", "d31-nn", d31_nn_params(F(1, 8), 2, -1), "iii~deg"),
        _w("d31-nn/2", "d31-nn", d31_nn_params(F(1, 8), 1, 2), "i1", "i2~deg"),
    ]
    return tuple(out)


def witnesses_for(case: str) -> List[Witness]:
    return [w for w in all_witnesses() if w.case == case]
