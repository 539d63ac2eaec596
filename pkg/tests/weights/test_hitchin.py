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

from hitchfib.kodaira import LEF, PT, GrothClass, KodairaType, groth_class
from hitchfib.weights import (
    Bidegree,
    ParabolicWeights,
    component_shift,
    hecke_reduce,
    hitchin_class,
)
from hitchfib.utils.exceptions import UnsupportedFiber

T = KodairaType
F = Fraction

GENERIC = ParabolicWeights.from_alpha(F(3, 5))
SPECIAL = ParabolicWeights.from_alpha(1)


def _classes(entry):
    return entry.hitchin_ss_class, entry.hitchin_s_class


class TestHitchinClass(unittest.TestCase):
    def test_irreducible_fibers(self):
        self.assertEqual(_classes(hitchin_class(T.I1)), (LEF, LEF))
        self.assertEqual(_classes(hitchin_class(T.II, SPECIAL)), (LEF + PT, LEF + PT))

    def test_iii(self):
        entry = hitchin_class(T.III, GENERIC)
        self.assertEqual(_classes(entry), (GrothClass(2, 1), GrothClass(2, 1)))
        self.assertEqual(entry.bidegrees(), [Bidegree(0, 1), Bidegree(1, 0)])
        self.assertTrue(entry.compact)
        entry = hitchin_class(T.III, SPECIAL)
        self.assertEqual(_classes(entry), (LEF + PT, LEF))

    def test_i2(self):
        entry = hitchin_class(T.I2, GENERIC)
        self.assertEqual(_classes(entry), (2 * LEF, 2 * LEF))
        entry = hitchin_class(T.I2, SPECIAL)
        self.assertEqual(_classes(entry), (LEF, LEF - PT))
        self.assertEqual(entry.bidegrees(), [Bidegree(0, 1)])

    def test_degenerate(self):
        table = {
            T.I2: ((LEF - PT, LEF - PT), (LEF - PT, LEF - PT)),
            T.III: ((LEF, LEF), (LEF, LEF)),
            T.I3: ((2 * LEF - PT, 2 * LEF - PT), (LEF + PT, LEF)),
            T.IV: ((2 * LEF, 2 * LEF), (LEF + PT, LEF)),
        }
        for fiber, (generic, special) in table.items():
            entry = hitchin_class(fiber, GENERIC, degenerate=True)
            self.assertEqual(_classes(entry), generic, fiber)
            self.assertFalse(entry.compact)
            self.assertTrue(entry.degenerate)
            self.assertEqual(_classes(hitchin_class(fiber, SPECIAL, degenerate=True)), special)

    def test_generic_classes_match_kodaira(self):
        for fiber in (T.I1, T.II, T.III, T.I2):
            entry = hitchin_class(fiber)
            self.assertEqual(entry.hitchin_ss_class, groth_class(fiber))

    def test_unsupported(self):
        with self.assertRaises(UnsupportedFiber):
            hitchin_class(T.IV)
        with self.assertRaises(UnsupportedFiber):
            hitchin_class(T.II, degenerate=True)
        with self.assertRaises(UnsupportedFiber):
            hitchin_class(T.I_star(2))

    def test_degree_two_reductions_agree(self):
        w = ParabolicWeights(F(1, 2), F(1, 2), F(1, 2), F(1, 2))
        for fiber in (T.III, T.I2):
            plus = hitchin_class(fiber, hecke_reduce(w, prefer="+")[0])
            minus = hitchin_class(fiber, hecke_reduce(w, prefer="-")[0])
            self.assertEqual(_classes(plus), _classes(minus))

    def test_unreduced_bidegrees(self):
        # degree class 2 reduced by H-: bidegrees are reported before the reduction
        w = ParabolicWeights(F(1, 4), F(3, 4), F(1, 4), F(3, 4))
        entry = hitchin_class(T.III, w)
        self.assertEqual(entry.bidegrees(), [Bidegree(0, 0), Bidegree(1, -1)])


class TestWallCrossing(unittest.TestCase):
    def test_classes_survive_each_wall(self):
        eps = F(1, 10)
        for n in (0, 1, 2):
            below = ParabolicWeights.from_alpha(n - eps, extended=True)
            above = ParabolicWeights.from_alpha(n + eps, extended=True)
            for fiber, degenerate in ((T.III, False), (T.I2, False), (T.IV, True), (T.I3, True)):
                before = hitchin_class(fiber, below, degenerate)
                after = hitchin_class(fiber, above, degenerate)
                self.assertEqual(_classes(before), _classes(after), (n, fiber))
                self.assertEqual(
                    component_shift(before.bidegrees(), after.bidegrees()), [(-1, 1), (-1, 1)]
                )

    def test_special_on_the_wall(self):
        for n in (0, 1, 2):
            entry = hitchin_class(T.III, ParabolicWeights.from_alpha(n, extended=True))
            self.assertEqual(_classes(entry), (LEF + PT, LEF))
            self.assertEqual(entry.bidegrees(), [Bidegree(1 - n, n)])


if __name__ == "__main__":
    unittest.main()
