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

import pickle
import unittest
from fractions import Fraction

import numpy as np
import sympy

from hitchfib.data import witnesses_for
from hitchfib.numerics import GaussianRational as G
from hitchfib.numerics.gaussian import I


def _random_gaussian(rng):
    def part():
        return Fraction(int(rng.integers(-50, 51)), int(rng.integers(1, 30)))

    return G(part(), part())


class TestGaussianRational(unittest.TestCase):
    def test_exact_arithmetic(self):
        a = G(Fraction(1, 3), 2)
        b = G(-1, Fraction(1, 7))
        self.assertEqual(a * b / b, a)
        self.assertEqual(I * I, -1)
        self.assertEqual(G(3, 4).norm(), 25)
        self.assertEqual((G(1, 1) ** 4), -4)
        self.assertEqual(G(2) ** -2, Fraction(1, 4))

    def test_sum_difference_round_trip(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            a, b = _random_gaussian(rng), _random_gaussian(rng)
            self.assertEqual((a + b) - b, a)

    def test_mixed_operands(self):
        self.assertEqual(1 - G(0, 1), G(1, -1))
        self.assertEqual(Fraction(1, 2) * G(2, 2), G(1, 1))
        self.assertEqual(2 / G(0, 1), G(0, -2))
        self.assertEqual(G(Fraction(1, 2)), Fraction(1, 2))

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            G(1) / G(0)

    def test_immutable_and_hashable(self):
        a = G(1, 2)
        with self.assertRaises(AttributeError):
            a.re = 3
        self.assertEqual(len({G(1), G(1, 0), 1}), 1)

    def test_pickle(self):
        a = G(Fraction(-7, 12), Fraction(1, 3))
        b = pickle.loads(pickle.dumps(a))
        self.assertEqual(b, a)
        self.assertIsInstance(b.re, Fraction)
        d = witnesses_for("d22-nn")[0].data
        self.assertEqual(pickle.loads(pickle.dumps(d)), d)

    def test_complex_is_lossy_one_way(self):
        self.assertEqual(complex(G(Fraction(1, 2), -3)), complex(0.5, -3))

    def test_sympy_conversion(self):
        a = G(Fraction(-2, 5), Fraction(7, 3))
        self.assertEqual(G.from_sympy(a.to_sympy()), a)
        self.assertEqual(G.from_sympy(sympy.Rational(3, 4) + 2 * sympy.I), G(Fraction(3, 4), 2))
        with self.assertRaises(ValueError):
            G.from_sympy(sympy.sqrt(2))

    def test_json(self):
        self.assertEqual(G(Fraction(1, 2), -3).to_json(), [1, 2, -3, 1])
        self.assertEqual(G.from_json([1, 2, -3, 1]), G(Fraction(1, 2), -3))
        self.assertEqual(G.from_json([3, 4]), Fraction(3, 4))
        self.assertEqual(G.from_json(5), 5)
        for bad in (True, [1, 2, 3], "1/2", [1.5, 2]):
            with self.assertRaises(ValueError):
                G.from_json(bad)

    def test_str(self):
        self.assertEqual(str(G(Fraction(1, 2))), "1/2")
        self.assertEqual(str(G(0, -1)), "-1i")
        self.assertEqual(str(G(1, Fraction(-1, 8))), "1-1/8i")


if __name__ == "__main__":
    unittest.main()
