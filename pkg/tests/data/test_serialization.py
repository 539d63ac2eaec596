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

import json
import os
import tempfile
import unittest
from fractions import Fraction

from hitchfib.data import (
    all_witnesses,
    dumps,
    load_json,
    polar_from_json,
    polar_to_json,
    weights_from_json,
    weights_to_json,
)
from hitchfib.numerics import GaussianRational
from hitchfib.polar import CaseTag, validate
from hitchfib.utils.exceptions import InvalidWeights, ResidueViolation, SchemaError
from hitchfib.weights import ParabolicWeights

D22_NN = {
    "case": "d22-nn",
    "params": {"a_m4": 0, "a_m3": [1, 2], "a_m2": 0, "b_m4": 0, "b_m3": 1, "b_m2": 0},
}


class TestPolarJson(unittest.TestCase):
    def test_read(self):
        d = polar_from_json(D22_NN)
        self.assertEqual(d.case, CaseTag.D22_Nn)
        self.assertEqual(d["a_m3"], GaussianRational(Fraction(1, 2)))

    def test_gaussian_entries(self):
        doc = {"case": "d22-nn", "params": dict(D22_NN["params"], b_m3=[1, 1, -3, 4])}
        self.assertEqual(polar_from_json(doc)["b_m3"], GaussianRational(1, Fraction(-3, 4)))

    def test_witnesses(self):
        for w in all_witnesses():
            doc = json.loads(dumps(polar_to_json(w.data)))
            self.assertEqual(doc["case"], w.case)
            back = polar_from_json(doc)
            self.assertEqual(back.case, w.data.case)
            self.assertEqual(back.params, w.data.params)

    def test_schema_errors(self):
        for doc in (
            [],
            {"case": "d22-nn"},
            {"case": "d22-nn", "params": [1, 2]},
            {"case": "d99", "params": {}},
            {"case": "d22-nn", "params": dict(D22_NN["params"], a_m3=[1, 0])},
            {"case": "d22-nn", "params": dict(D22_NN["params"], a_m3=0.5)},
            {"case": "d22-nn", "params": dict(D22_NN["params"], a_m3=True)},
        ):
            with self.assertRaises(SchemaError, msg=doc):
                polar_from_json(doc)

    def test_residue(self):
        doc = {"case": "d22-nn", "params": dict(D22_NN["params"], b_m2=1)}
        d = polar_from_json(doc)
        with self.assertRaises(ResidueViolation):
            validate(d)


class TestWeightsJson(unittest.TestCase):
    def test_read(self):
        w = weights_from_json({"alpha": {"p1": "1/4", "m1": 0.25, "p2": [1, 4], "m2": "0.25"}})
        self.assertEqual(w, ParabolicWeights.generic())

    def test_extended(self):
        w = ParabolicWeights.from_alpha(Fraction(3, 2), extended=True)
        doc = json.loads(dumps(weights_to_json(w)))
        self.assertEqual(doc["extended_alpha_plus"], [3, 2])
        self.assertEqual(weights_from_json(doc), w)
        self.assertNotIn("extended_alpha_plus", weights_to_json(ParabolicWeights.generic()))

    def test_errors(self):
        for doc in (
            {},
            {"alpha": [0, 0, 0, 0]},
            {"alpha": {"p1": 0, "m1": 0, "p2": 0}},
            {"alpha": {"p1": 1, "m1": 0, "p2": 0, "m2": 0}},
            {"alpha": {"p1": "1/3", "m1": 0, "p2": 0, "m2": 0}},
            {"alpha": {"p1": "x", "m1": 0, "p2": 0, "m2": 0}},
        ):
            with self.assertRaises(InvalidWeights, msg=doc):
                weights_from_json(doc)
        self.assertTrue(issubclass(InvalidWeights, SchemaError))


class TestLoadJson(unittest.TestCase):
    def test_inline(self):
        self.assertEqual(load_json(' {"a": 1}'), {"a": 1})

    def test_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "params.json")
            with open(path, "w") as f:
                json.dump(D22_NN, f)
            self.assertEqual(load_json(path), D22_NN)

    def test_errors(self):
        with self.assertRaises(SchemaError):
            load_json("{not json")
        with self.assertRaises(SchemaError):
            load_json("/nonexistent/params.json")

    def test_dumps_sorted(self):
        self.assertEqual(dumps({"b": 1, "a": [1, 2]}).splitlines()[1], '  "a": [')


if __name__ == "__main__":
    unittest.main()
