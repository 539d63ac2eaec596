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

from hitchfib.kodaira import GrothClass, KodairaType
from hitchfib.structures import Bidegree, FiberComponent, FiberReport, SingularFiberEntry

LEF = GrothClass(1, 0)


class TestBidegree(unittest.TestCase):
    def test_arithmetic(self):
        b = Bidegree(1, 0)
        self.assertEqual(b.shift(dminus=1), Bidegree(1, 1))
        self.assertEqual(b.total, 1)
        self.assertEqual(Bidegree(2, 1) - b, (1, 1))
        self.assertLess(Bidegree(0, 1), b)

    def test_json(self):
        self.assertEqual(Bidegree(2, -1).to_json(), [2, -1])
        self.assertEqual(Bidegree.from_json([2, -1]), Bidegree(2, -1))
        self.assertEqual(str(Bidegree(0, 1)), "(0,1)")


class TestSingularFiberEntry(unittest.TestCase):
    def _i2(self, stable_second=True):
        return SingularFiberEntry(
            KodairaType.I2,
            (
                FiberComponent(LEF, Bidegree(1, 0)),
                FiberComponent(LEF, Bidegree(0, 1), stable=stable_second),
            ),
        )

    def test_classes(self):
        entry = self._i2()
        self.assertEqual(entry.hitchin_ss_class, GrothClass(2, 0))
        self.assertEqual(entry.hitchin_s_class, GrothClass(2, 0))
        self.assertEqual(entry.bidegrees(), [Bidegree(1, 0), Bidegree(0, 1)])
        entry.check()

    def test_unstable_component(self):
        entry = self._i2(stable_second=False)
        self.assertEqual(entry.hitchin_s_class, LEF)
        entry.check()
        self.assertEqual(
            entry.to_json()["components"][1],
            {"class": [1, 0], "bidegree": [0, 1], "stable": False},
        )

    def test_check_catches_wrong_class(self):
        entry = SingularFiberEntry(KodairaType.III, (FiberComponent(LEF),))
        with self.assertRaises(AssertionError):
            entry.check()

    def test_label(self):
        self.assertEqual(self._i2().label(), "i2")
        unnamed = SingularFiberEntry(None, (FiberComponent(GrothClass(1, 1)),), compact=False)
        self.assertEqual(unnamed.label(), "L+Pt")
        self.assertNotIn("kodaira", unnamed.to_json())


class TestFiberReport(unittest.TestCase):
    def test_multiset_and_json(self):
        fibers = [
            SingularFiberEntry(KodairaType.I1, (FiberComponent(LEF),)),
            SingularFiberEntry(KodairaType.I1, (FiberComponent(LEF),)),
            SingularFiberEntry(
                KodairaType.IV, (FiberComponent(GrothClass(3, 1)),), degenerate=True
            ),
        ]
        report = FiberReport(KodairaType.I_star(1), fibers, "d22-sn/2", case="d22-sn")
        self.assertEqual(dict(report.multiset()), {"i1": 2, "iv~deg": 1})
        self.assertEqual(report.fiber_names(), ["i1", "i1", "iv"])
        self.assertEqual(len(report.kodaira_types()), 3)

        out = report.to_json()
        self.assertEqual(out["case"], "d22-sn")
        self.assertEqual(out["infinity"], "i1*")
        self.assertEqual(out["branch"], "d22-sn/2")
        self.assertEqual(out["walls_crossed"], 0)
        self.assertTrue(out["fibers"][2]["degenerate"])
        self.assertEqual(out["fibers"][2]["ss"], [3, 1])


if __name__ == "__main__":
    unittest.main()
