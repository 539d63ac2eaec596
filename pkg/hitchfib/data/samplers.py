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
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional

import numpy as np

from hitchfib.numerics import GaussianRational
from hitchfib.polar import PARAM_NAMES, CaseTag, PolarData, parse_case, validate
from hitchfib.utils.exceptions import NotElliptic
from hitchfib.utils.registry import Registry
from hitchfib.weights import ParabolicWeights

from .witnesses import (
    d22_sn_params,
    d31_nn_params,
    d31_ns_params,
    d31_sn_params,
    semisimple_params,
)

__all__ = ["RandomPolarSampler", "STRATUM_REGISTRY", "sample_stratum", "random_weights"]

logger = logging.getLogger(__name__)

G = GaussianRational

# parameter fixed by the residue condition, as a function of the others
_RESIDUE_SOLVERS: Dict[CaseTag, Callable] = {
    CaseTag.D22_Ss: lambda p: ("mu_plus", -(p["lambda_plus"] + p["lambda_minus"] + p["mu_minus"])),
    CaseTag.D22_Sn: lambda p: ("b_m2", -(p["lambda_plus"] + p["lambda_minus"])),
    CaseTag.D22_Nn: lambda p: ("b_m2", -p["a_m2"]),
    CaseTag.D31_Ss: lambda p: ("mu_plus", -(p["lambda_plus"] + p["lambda_minus"] + p["mu_minus"])),
    CaseTag.D31_Sn: lambda p: ("b_m1", -(p["lambda_plus"] + p["lambda_minus"]) / 2),
    CaseTag.D31_Ns: lambda p: ("mu_plus", -(p["b_m2"] + p["mu_minus"])),
    CaseTag.D31_Nn: lambda p: ("b_m1", -p["b_m2"] / 2),
}


def _rational(rng: np.random.Generator, bound: int, nonzero: bool = False) -> Fraction:
    while True:
        num = int(rng.integers(-bound, bound + 1))
        if num != 0 or not nonzero:
            return Fraction(num, int(rng.integers(1, bound + 1)))


class RandomPolarSampler:
    """
    Random elliptic polar data with rational entries.

    Numerators are drawn from ``[-bound, bound]`` and denominators from ``[1, bound]``;
    the residue condition fixes one entry. Draws that are not elliptic are rejected and
    counted.

    .. code-block:: python

        sampler = RandomPolarSampler("d22-ss", seed=7)
        data = sampler.sample(100)
    """

    def __init__(self, case, bound: int = 20, seed: Optional[int] = None):
        self.case, self.swapped = parse_case(case)
        self.bound = bound
        self.rng = np.random.default_rng(seed)
        self.drawn = 0
        self.rejected = 0

    def _draw(self) -> PolarData:
        names = PARAM_NAMES[self.case]
        params = {name: G(_rational(self.rng, self.bound)) for name in names}
        name, value = _RESIDUE_SOLVERS[self.case](params)
        params[name] = value
        return PolarData(self.case, params)

    def __iter__(self) -> Iterator[PolarData]:
        while True:
            self.drawn += 1
            d = self._draw()
            try:
                validate(d)
            except NotElliptic:
                self.rejected += 1
                continue
            yield d

    def sample(self, n: int) -> List[PolarData]:
        it = iter(self)
        out = [next(it) for _ in range(n)]
        if self.drawn:
            logger.info(
                f"{self.case}: drew {self.drawn} parameter sets, rejected {self.rejected} "
                f"as not elliptic ({100.0 * self.rejected / self.drawn:.2f}%)"
            )
        return out

    @property
    def rejection_rate(self) -> float:
        return self.rejected / self.drawn if self.drawn else 0.0


STRATUM_REGISTRY = Registry("STRATUM")
STRATUM_REGISTRY.__doc__ = """
Generators of random parameter sets on the closed strata where special fiber
configurations occur, keyed by branch name. Each takes ``(rng, bound)`` and returns
``(case, params)``.
"""


def _sign(rng) -> int:
    return 1 if rng.integers(0, 2) else -1


@STRATUM_REGISTRY.register("d22-ss/1")
def _d22_ss_triple(rng, bound):
    A, L = _rational(rng, bound, True), _rational(rng, bound, True)
    M = _sign(rng) * L
    return "d22-ss", semisimple_params(A, L * M / (4 * A), L, M)


@STRATUM_REGISTRY.register("d22-ss/5")
def _d22_ss_two_i2(rng, bound):
    A, B = _rational(rng, bound, True), _rational(rng, bound, True)
    return "d22-ss", semisimple_params(A, B, 0, 0)


@STRATUM_REGISTRY.register("d22-ss/6")
def _d22_ss_section(rng, bound):
    A, B, L = (_rational(rng, bound, True) for _ in range(3))
    return "d22-ss", semisimple_params(A, B, L, _sign(rng) * L)


@STRATUM_REGISTRY.register("d22-sn/1")
def _d22_sn_double(rng, bound):
    A, L = _rational(rng, bound, True), _rational(rng, bound, True)
    return "d22-sn", d22_sn_params(A, L, 2 * L**3 / (27 * A), _rational(rng, bound))


@STRATUM_REGISTRY.register("d31-ss/1")
def _d31_ss_triple(rng, bound):
    B, M = _rational(rng, bound, True), _rational(rng, bound, True)
    s = _sign(rng)
    return "d31-ss", semisimple_params(B * B / (4 * s * M), B, s * M, M)


@STRATUM_REGISTRY.register("d31-ss/2")
def _d31_ss_ii_i2(rng, bound):
    B, M = _rational(rng, bound, True), _rational(rng, bound, True)
    s = _sign(rng)
    return "d31-ss", semisimple_params(-s * B * B / (12 * M), B, s * M, M)


@STRATUM_REGISTRY.register("d31-ss/3")
def _d31_ss_section(rng, bound):
    A, B, M = (_rational(rng, bound, True) for _ in range(3))
    return "d31-ss", semisimple_params(A, B, _sign(rng) * M, M)


@STRATUM_REGISTRY.register("d31-sn/2")
def _d31_sn_double(rng, bound):
    A, B = _rational(rng, bound, True), _rational(rng, bound, True)
    return "d31-sn", d31_sn_params(A, B, B * B / (6 * A), _rational(rng, bound, True))


@STRATUM_REGISTRY.register("d31-sn/3")
def _d31_sn_section(rng, bound):
    A, B = _rational(rng, bound, True), _rational(rng, bound, True)
    return "d31-sn", d31_sn_params(A, B, 0, _rational(rng, bound, True))


@STRATUM_REGISTRY.register("d31-sn/4")
def _d31_sn_iii(rng, bound):
    A, B = _rational(rng, bound, True), _rational(rng, bound, True)
    return "d31-sn", d31_sn_params(A, B, -B * B / (2 * A), _rational(rng, bound, True))


@STRATUM_REGISTRY.register("d31-ns/1")
def _d31_ns_double(rng, bound):
    M, r = _rational(rng, bound, True), _rational(rng, bound, True)
    Q = 2 * _sign(rng) * r**3 / M
    R = 3 * r * r
    b_m4 = _rational(rng, bound)
    return "d31-ns", d31_ns_params(M, Q / 8, b_m4, (R - b_m4 * b_m4) / 4, _rational(rng, bound))


@STRATUM_REGISTRY.register("d31-nn/1")
def _d31_nn_iii(rng, bound):
    b_m4 = _rational(rng, bound)
    return "d31-nn", d31_nn_params(
        _rational(rng, bound, True) / 8, b_m4, -b_m4 * b_m4 / 4, _rational(rng, bound)
    )


def sample_stratum(branch: str, n: int, bound: int = 20, seed: Optional[int] = None):
    """``n`` elliptic parameter sets on the stratum of ``branch``."""
    rng = np.random.default_rng(seed)
    make = STRATUM_REGISTRY.get(branch)
    out: List[PolarData] = []
    while len(out) < n:
        case, params = make(rng, bound)
        d = PolarData.create(case, params)
        try:
            validate(d)
        except NotElliptic:
            continue
        out.append(d)
    return out


def random_weights(rng: np.random.Generator, degree_class: int = 1, bound: int = 20):
    """Random rational weights in ``[0, 1)`` summing to ``degree_class``."""
    while True:
        values = [Fraction(int(rng.integers(0, bound)), bound) for _ in range(3)]
        last = degree_class - sum(values)
        if 0 <= last < 1:
            return ParabolicWeights(values[0], values[1], values[2], last)
