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

import unittest
from fractions import Fraction

import numpy as np

from hitchfib.data.witnesses import all_witnesses, semisimple_params
from hitchfib.numerics import GaussianRational, Poly1
from hitchfib.polar import PolarData, chi_polynomials, pencil_coefficients


class TestPencilCoefficients(unittest.TestCase):
    def test_22_ss_w_coefficient(self):
        d = PolarData.create("d22-ss", semisimple_params(1, 1, 0, 0))
        coeffs = pencil_coefficients(d, 0)
        self.assertEqual(coeffs.w_coefficient(), Poly1([-1, 0, 1]))
        self.assertEqual((coeffs.p0, coeffs.p1, coeffs.p2), (1, 0, -1))
        self.assertEqual(coeffs.t_slot, "q2")

    def test_22_nn_constant_term(self):
        params = {"a_m4": 0, "a_m3": 1, "a_m2": 0, "b_m4": 0, "b_m3": 1, "b_m2": 0}
        coeffs = pencil_coefficients(PolarData.create("d22-nn", params), 5)
        g = coeffs.constant_term()
        self.assertEqual(g.coeff(3), -1)
        self.assertEqual(g.coeff(2), -5)
        self.assertEqual(g.coeff(1), -1)
        self.assertEqual(coeffs.t, 5)

    def test_t_enters_only_its_slot(self):
        for w in all_witnesses():
            c0 = pencil_coefficients(w.data, 0).as_tuple()
            c1 = pencil_coefficients(w.data, 1).as_tuple()
            changed = [i for i, (a, b) in enumerate(zip(c0, c1)) if a != b]
            self.assertEqual(changed, [5] if w.data.case.is_22 else [6], w.branch)

    def test_reproduces_chi(self):
        t = GaussianRational(Fraction(3, 2), -1)
        for w in all_witnesses():
            F, G = chi_polynomials(w.data)
            coeffs = pencil_coefficients(w.data, t)
            k = w.data.case.t_degree
            self.assertEqual(coeffs.w_coefficient(), F, w.branch)
            self.assertEqual(coeffs.constant_term(), G - Poly1.monomial(k, t), w.branch)

    def test_floating_chi(self):
        d = PolarData.create("d22-ss", semisimple_params(1, 1, 0, 0))
        coeffs = pencil_coefficients(d, 2)
        # w**2 + (z**2 - 1) w - 2 z**2 at z = 1, w = 1
        value, dz, dw = coeffs.chi(1.0, 1.0)
        self.assertTrue(np.isclose(value, -1.0))
        self.assertTrue(np.isclose(dz, -2.0))
        self.assertTrue(np.isclose(dw, 2.0))


if __name__ == "__main__":
    unittest.main()
