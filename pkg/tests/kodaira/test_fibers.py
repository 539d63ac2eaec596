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
from collections import Counter

from hitchfib.kodaira import (
    LEF,
    PT,
    GrothClass,
    KodairaType,
    allowed_companions,
    euler_number,
    fiber_multiset,
    groth_class,
    is_allowed_configuration,
)
from hitchfib.utils.exceptions import UnsupportedInfinityType

T = KodairaType

ALL_TYPES = [T.I(n) for n in range(1, 10)] + [T.I_star(n) for n in range(5)] + [
    T.II,
    T.III,
    T.IV,
    T.E6,
    T.E7,
    T.E8,
]


def _multiset(*types):
    return frozenset(Counter(types).items())


class TestKodairaType(unittest.TestCase):
    def test_components_and_euler(self):
        table = {
            T.I(3): (3, 3),
            T.I_star(2): (7, 8),
            T.II: (1, 2),
            T.III: (2, 3),
            T.IV: (3, 4),
            T.E6: (7, 8),
            T.E7: (8, 9),
            T.E8: (9, 10),
        }
        for t, (components, euler) in table.items():
            self.assertEqual(t.num_components, components, t)
            self.assertEqual(euler_number(t), euler, t)

    def test_names(self):
        self.assertEqual(T.I2.name, "i2")
        self.assertEqual(T.I_star(3).name, "i3*")
        self.assertEqual(T.E6.name, "e6~")
        self.assertEqual(T.III.name, "iii")
        for t in ALL_TYPES:
            self.assertEqual(T.parse(t.name), t)
        self.assertEqual(T.parse("IV*"), T.E6)
        self.assertEqual(T.parse("III*"), T.parse("e7~"))
        with self.assertRaises(ValueError):
            T.parse("v")

    def test_invalid_index(self):
        with self.assertRaises(ValueError):
            T.I(0)
        with self.assertRaises(ValueError):
            T.I_star(5)
        with self.assertRaises(ValueError):
            T("II", 2)

    def test_sort_key(self):
        ordered = sorted([T.III, T.I2, T.II, T.I1, T.IV], key=T.sort_key)
        self.assertEqual(ordered, [T.I1, T.I2, T.II, T.III, T.IV])


class TestGrothClass(unittest.TestCase):
    def test_small_fibers(self):
        self.assertEqual(groth_class(T.I1), LEF)
        self.assertEqual(groth_class(T.II), LEF + PT)
        self.assertEqual(groth_class(T.I2), 2 * LEF)
        self.assertEqual(groth_class(T.III), GrothClass(2, 1))
        self.assertEqual(groth_class(T.IV), GrothClass(3, 1))

    def test_glued_projective_lines(self):
        p1 = LEF + PT
        # I2: two lines glued at two points; III: two lines meeting once
        self.assertEqual(groth_class(T.I2), 2 * p1 - 2 * PT)
        self.assertEqual(groth_class(T.III), 2 * p1 - PT)
        # I_n*: a tree of n + 5 lines
        for n in range(5):
            self.assertEqual(groth_class(T.I_star(n)), (n + 5) * p1 - (n + 4) * PT)

    def test_euler_characteristic(self):
        # cycles of lines
        for t in (T.I1, T.I2, T.I3):
            self.assertEqual(groth_class(t).euler_characteristic(), euler_number(t))

    def test_str_and_json(self):
        self.assertEqual(str(GrothClass(2, 1)), "2L+Pt")
        self.assertEqual(str(LEF), "L")
        self.assertEqual(str(GrothClass(1, -1)), "L-Pt")
        self.assertEqual(GrothClass.from_json(GrothClass(3, 1).to_json()), GrothClass(3, 1))
        self.assertTrue(LEF.dominated_by(LEF + PT))
        self.assertFalse((LEF + PT).dominated_by(2 * LEF))


class TestCompanions(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(allowed_companions(T.I_star(4)), {_multiset(T.I1, T.I1)})
        self.assertEqual(
            allowed_companions(T.I_star(3)),
            {_multiset(T.I1, T.I1, T.I1), _multiset(T.II, T.I1)},
        )
        self.assertEqual(
            allowed_companions(T.E7),
            {
                _multiset(T.I1, T.I1, T.I1),
                _multiset(T.I2, T.I1),
                _multiset(T.II, T.I1),
                _multiset(T.III),
            },
        )

    def test_euler_sum_is_twelve(self):
        for infinity in (T.I_star(2), T.I_star(3), T.I_star(4), T.E6, T.E7):
            for m in allowed_companions(infinity):
                total = euler_number(infinity) + sum(euler_number(t) * k for t, k in m)
                self.assertEqual(total, 12, (infinity, m))

    def test_is_allowed_configuration(self):
        self.assertTrue(is_allowed_configuration(T.I_star(2), [T.I2, T.I2]))
        self.assertTrue(is_allowed_configuration(T.E6, [T.IV]))
        self.assertFalse(is_allowed_configuration(T.I_star(2), [T.I3, T.I1]))
        self.assertFalse(is_allowed_configuration(T.E7, [T.I1, T.I1]))

    def test_unsupported_infinity(self):
        for t in (T.I1, T.I_star(0), T.E8):
            with self.assertRaises(UnsupportedInfinityType):
                allowed_companions(t)

    def test_fiber_multiset(self):
        self.assertEqual(fiber_multiset([T.I1, T.II, T.I1]), Counter({"i1": 2, "ii": 1}))


if __name__ == "__main__":
    unittest.main()
