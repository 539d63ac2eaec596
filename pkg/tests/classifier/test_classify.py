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

from hitchfib.classifier import CLASSIFIER_REGISTRY, classify, classify_with_weights
from hitchfib.data import RandomPolarSampler, all_witnesses
from hitchfib.data.witnesses import d31_nn_params, d31_sn_params, semisimple_params
from hitchfib.kodaira import LEF, PT, GrothClass, KodairaType, is_allowed_configuration
from hitchfib.polar import CaseTag, PolarData, validate
from hitchfib.weights import Bidegree, ParabolicWeights

F = Fraction


def _inv(case, params):
    return validate(PolarData.create(case, params))


def _classes(entry):
    return entry.hitchin_ss_class, entry.hitchin_s_class


class TestClassify(unittest.TestCase):
    def test_registry(self):
        expected = sorted(c.registry_key for c in CaseTag)
        self.assertEqual(sorted(CLASSIFIER_REGISTRY.names()), expected)

    def test_witnesses(self):
        for w in all_witnesses():
            cl = classify(validate(w.data))
            self.assertEqual(cl.branch, w.branch)
            self.assertEqual(tuple(cl.keys()), w.expected, w.branch)

    def test_every_branch_has_a_witness(self):
        branches = {w.branch for w in all_witnesses()}
        for case, n in (("d22-ss", 7), ("d22-sn", 2), ("d31-ss", 4), ("d31-sn", 5)):
            for item in range(1, n + 1):
                self.assertIn(f"{case}/{item}", branches)

    def test_two_i2(self):
        cl = classify(_inv("d22-ss", semisimple_params(1, 1, 0, 0)))
        self.assertEqual(cl.infinity, KodairaType.I_star(2))
        self.assertEqual(cl.keys(), ["i2", "i2"])
        self.assertEqual(cl.branch, "d22-ss/5")

    def test_double_root_22_sn(self):
        cl = classify(
            _inv(
                "d22-sn",
                {
                    "a_plus": 0,
                    "a_minus": 1,
                    "lambda_plus": 0,
                    "lambda_minus": 3,
                    "b_m4": 0,
                    "b_m3": 2,
                    "b_m2": -3,
                },
            )
        )
        self.assertEqual(cl.infinity, KodairaType.I_star(3))
        self.assertEqual(cl.keys(), ["i1", "ii"])

    def test_degenerate_e7(self):
        cl = classify(_inv("d31-nn", d31_nn_params(F(1, 8), 2, -1)))
        self.assertEqual(cl.infinity, KodairaType.E7)
        self.assertEqual(cl.keys(), ["iii~deg"])

    def test_random_samples_are_admissible(self):
        for case in CaseTag:
            for d in RandomPolarSampler(case, bound=10, seed=1).sample(30):
                cl = classify(validate(d))
                if not case.degenerate:
                    self.assertTrue(is_allowed_configuration(cl.infinity, cl.kodaira_types()))


class TestClassifyWithWeights(unittest.TestCase):
    def test_triple_root_generic(self):
        report = classify_with_weights(_inv("d22-ss", semisimple_params(1, F(1, 4), 1, 1)))
        self.assertEqual(report.case_branch, "d22-ss/1")
        iii, i1 = sorted(report.fibers, key=lambda f: f.kodaira.name, reverse=True)
        self.assertEqual(iii.kodaira, KodairaType.III)
        self.assertEqual(_classes(iii), (GrothClass(2, 1), GrothClass(2, 1)))
        self.assertEqual(_classes(i1), (LEF, LEF))

    def test_triple_root_special(self):
        minus = _inv("d22-ss", semisimple_params(1, F(-1, 4), 1, -1))
        report = classify_with_weights(minus, w=ParabolicWeights.from_alpha(1))
        iii = [f for f in report.fibers if f.kodaira == KodairaType.III][0]
        self.assertEqual(_classes(iii), (LEF + PT, LEF))

        plus = _inv("d22-ss", semisimple_params(1, F(1, 4), 1, 1))
        report = classify_with_weights(plus, w=ParabolicWeights.from_alpha(1, extended=True))
        iii = [f for f in report.fibers if f.kodaira == KodairaType.III][0]
        self.assertEqual(_classes(iii), (LEF + PT, LEF))

    def test_section_sign_exchanges_weights(self):
        # alpha_+^1 + alpha_+^2 = 1 is special, alpha_+^1 + alpha_-^2 = 1/2 is generic
        w = ParabolicWeights(F(1, 2), 0, F(1, 2), 0)
        plus = classify_with_weights(_inv("d22-ss", semisimple_params(1, F(1, 4), 1, 1)), w=w)
        iii = [f for f in plus.fibers if f.kodaira == KodairaType.III][0]
        self.assertEqual(_classes(iii), (GrothClass(2, 1), GrothClass(2, 1)))

    def test_two_i2_walls(self):
        w = ParabolicWeights(F(1, 2), 0, F(1, 2), 0)
        report = classify_with_weights(_inv("d22-ss", semisimple_params(1, 1, 0, 0)), w=w)
        classes = sorted(_classes(f) for f in report.fibers)
        self.assertEqual(classes, [(LEF, LEF - PT), (2 * LEF, 2 * LEF)])

    def test_degenerate_iv(self):
        report = classify_with_weights(_inv("d31-sn", d31_sn_params(1, 0, 0)))
        (entry,) = report.fibers
        self.assertEqual(entry.kodaira, KodairaType.IV)
        self.assertEqual(_classes(entry), (2 * LEF, 2 * LEF))
        self.assertFalse(entry.compact)
        self.assertEqual(report.multiset()["iv~deg"], 1)

    def test_wall_invariance(self):
        for w in all_witnesses():
            inv = validate(w.data)
            below = classify_with_weights(inv, w=ParabolicWeights.from_alpha(F(1, 2), True))
            above = classify_with_weights(inv, w=ParabolicWeights.from_alpha(F(3, 2), True))
            self.assertEqual(
                [_classes(f) for f in below.fibers], [_classes(f) for f in above.fibers]
            )
            self.assertEqual((below.walls_crossed, above.walls_crossed), (0, 1))
            for b, a in zip(below.fibers, above.fibers):
                shifted = [x.shift(-1, 1) for x in b.bidegrees()]
                self.assertEqual(sorted(shifted), sorted(a.bidegrees()), w.branch)

    def test_report_json(self):
        report = classify_with_weights(_inv("d22-ss", semisimple_params(1, 1, 0, 0)))
        doc = report.to_json()
        self.assertEqual(doc["case"], "d22-ss")
        self.assertEqual(doc["infinity"], "i2*")
        self.assertEqual(doc["branch"], "d22-ss/5")
        self.assertEqual([f["kodaira"] for f in doc["fibers"]], ["i2", "i2"])
        first = doc["fibers"][0]
        self.assertEqual((first["ss"], first["s"], first["compact"]), ([2, 0], [2, 0], True))
        self.assertEqual(
            [c.get("bidegree") for c in first["components"]], [[0, 1], [1, 0], None, None]
        )

    def test_swapped_label(self):
        w = [w for w in all_witnesses() if w.case == "d22-ns"][0]
        report = classify_with_weights(validate(w.data))
        self.assertEqual(report.case, "d22-ns")
        self.assertEqual(report.fiber_names(), ["i1", "ii"])

    def test_generic_bidegrees(self):
        report = classify_with_weights(_inv("d31-ss", semisimple_params(3, 6, -1, -1)))
        i2 = [f for f in report.fibers if f.kodaira == KodairaType.I2][0]
        self.assertEqual(i2.bidegrees(), [Bidegree(0, 1), Bidegree(1, 0)])


if __name__ == "__main__":
    unittest.main()
