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
from unittest import mock

from hitchfib.config import get_config
from hitchfib.engine import DefaultRunner, run, verify_sample
from hitchfib.engine.default import EXIT_DISAGREEMENT

TWO_I2 = {
    "case": "d22-ss",
    "params": {
        "a_plus": 0,
        "a_minus": 1,
        "b_plus": 0,
        "b_minus": 1,
        "lambda_plus": 0,
        "lambda_minus": 0,
        "mu_plus": 0,
        "mu_minus": 0,
    },
}

Q_ZERO = {
    "case": "d31-ns",
    "params": {
        "b_m6": 0,
        "b_m5": 0,
        "b_m4": 1,
        "b_m3": 1,
        "b_m2": -1,
        "mu_plus": 0,
        "mu_minus": 1,
    },
}


def _cfg(command, **run):
    cfg = get_config(f"{command}.py")
    cfg.run.progress = False
    for k, v in run.items():
        cfg.run[k] = json.dumps(v) if isinstance(v, dict) else v
    return cfg


class TestClassify(unittest.TestCase):
    def test_two_i2(self):
        code, report = run(_cfg("classify", params=TWO_I2))
        self.assertEqual(code, 0)
        self.assertEqual(report["command"], "classify")
        self.assertEqual(report["branch"], "d22-ss/5")
        self.assertEqual(report["infinity"], "i2*")
        self.assertEqual([f["kodaira"] for f in report["fibers"]], ["i2", "i2"])
        self.assertEqual(report["invariants"]["section_parity"], "+-")
        self.assertTrue(report["symmetric"]["identity_holds"])

    def test_weights(self):
        weights = {"alpha": {"p1": 0, "m1": 0, "p2": 0, "m2": 0}}
        code, report = run(_cfg("classify", params=TWO_I2, weights=weights))
        self.assertEqual(code, 0)
        self.assertEqual(len(report["fibers"]), 2)

    def test_missing_params(self):
        code, report = run(_cfg("classify"))
        self.assertEqual(code, 2)
        self.assertEqual(report["error"], "SchemaError")

    def test_schema_error(self):
        doc = {"case": "d22-ss", "params": {"a_plus": 0}}
        code, report = run(_cfg("classify", params=doc))
        self.assertEqual(code, 2)
        self.assertIn("missing", report["message"])

    def test_residue_violation(self):
        doc = json.loads(json.dumps(TWO_I2))
        doc["params"]["mu_plus"] = 1
        code, report = run(_cfg("classify", params=doc))
        self.assertEqual(code, 2)
        self.assertEqual(report["error"], "ResidueViolation")

    def test_invalid_weights(self):
        weights = {"alpha": {"p1": "1/3", "m1": 0, "p2": 0, "m2": 0}}
        code, report = run(_cfg("classify", params=TWO_I2, weights=weights))
        self.assertEqual(code, 2)
        self.assertEqual(report["error"], "InvalidWeights")

    def test_not_elliptic(self):
        code, report = run(_cfg("classify", params=Q_ZERO))
        self.assertEqual(code, 3)
        self.assertEqual(report["error"], "NotElliptic")
        self.assertEqual(report["reason"], "Q=0")
        self.assertEqual(report["case"], "d31-ns")

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "report.json")
            code, report = run(_cfg("classify", params=TWO_I2, output=path))
            with open(path) as f:
                self.assertEqual(json.load(f), report)
        self.assertEqual(code, 0)


class TestRunConfig(unittest.TestCase):
    def test_bad_tolerance(self):
        for key, value in (("tol", 2.0), ("cluster_tol", 0.0), ("samples", 0)):
            code, report = run(_cfg("verify", **{key: value}))
            self.assertEqual(code, 2, key)
            self.assertEqual(report["error"], "SchemaError")

    def test_unknown_case(self):
        code, _ = run(_cfg("verify", case="d33-ss", samples=2))
        self.assertEqual(code, 2)

    def test_unknown_command(self):
        cfg = _cfg("verify")
        cfg.run.command = "train"
        self.assertEqual(run(cfg)[0], 2)

    def test_default_evaluators(self):
        cfg = _cfg("verify")
        del cfg["evaluation"]
        self.assertEqual(len(DefaultRunner(cfg).build_evaluators()), 3)


class TestVerify(unittest.TestCase):
    def test_agreement(self):
        code, report = run(_cfg("verify", case="d22-nn", samples=20))
        self.assertEqual(code, 0)
        self.assertEqual((report["agree"], report["disagree"]), (20, 0))
        case = report["cases"]["d22-nn"]
        self.assertEqual(case["admissibility"]["violations"], 0)
        self.assertIn("rejection_rate", case["sampling"])

    def test_deterministic(self):
        first = run(_cfg("verify", case="d31-sn", samples=10, seed=3))
        second = run(_cfg("verify", case="d31-sn", samples=10, seed=3))
        self.assertEqual(json.dumps(first, sort_keys=True), json.dumps(second, sort_keys=True))

    def test_all_cases(self):
        code, report = run(_cfg("verify", samples=3))
        self.assertEqual(code, 0)
        self.assertEqual(len(report["cases"]), 7)
        self.assertEqual(report["agree"], 21)

    def test_disagreement(self):
        def broken(d, **kwargs):
            out = verify_sample(d, **kwargs)
            out["inferred"] = ["i1"]
            return out

        with mock.patch("hitchfib.engine.default.verify_sample", broken):
            code, report = run(_cfg("verify", case="d22-ss", samples=5))
        self.assertEqual(code, EXIT_DISAGREEMENT)
        self.assertEqual(report["disagree"], 5)
        details = report["cases"]["d22-ss"]["agreement"]["details"]
        self.assertEqual([r["index"] for r in details], list(range(5)))


class TestSweep(unittest.TestCase):
    def test_branch(self):
        code, report = run(_cfg("sweep", case="d31-sn", branch="d31-sn/3", samples=5))
        self.assertEqual(code, 0)
        self.assertEqual(report["disagree"], 0)
        self.assertTrue(report["rows"])
        self.assertEqual({r["branch"] for r in report["rows"]}, {"d31-sn/3"})
        sources = {r["source"] for r in report["rows"]}
        self.assertIn("witness", sources)
        self.assertIn("stratum", sources)
        self.assertEqual(list(report["results"]["branches"]), ["d31-sn/3"])

    def test_case(self):
        code, report = run(_cfg("sweep", case="d22-nn", samples=4))
        self.assertEqual(code, 0)
        self.assertEqual(report["agree"], len(report["rows"]))
        self.assertEqual(sum(r["source"] == "random" for r in report["rows"]), 4)

    def test_only_branch_samples_are_evaluated(self):
        code, report = run(_cfg("sweep", case="d31-sn", branch="d31-sn/3", samples=5))
        agreement = report["results"]["agreement"]
        self.assertEqual(agreement["agree"] + agreement["disagree"], len(report["rows"]))

    def test_workers(self):
        _, serial = run(_cfg("sweep", case="d22-nn", samples=6))
        _, pooled = run(_cfg("sweep", case="d22-nn", samples=6, num_workers=2))
        self.assertEqual(pooled["rows"], serial["rows"])
        self.assertEqual(pooled["agree"], serial["agree"])


class TestWallcross(unittest.TestCase):
    def test_walls(self):
        cfg = _cfg(
            "wallcross", params=TWO_I2, alpha_start="1/2", alpha_stop="3/2", alpha_step="1/2"
        )
        code, report = run(cfg)
        self.assertEqual(code, 0)
        self.assertEqual(report["walls"], [1])
        self.assertEqual(report["branch"], "d22-ss/5")
        steps = report["steps"]
        self.assertEqual([s["alpha_plus"] for s in steps], [[1, 2], [1, 1], [3, 2]])
        self.assertTrue(steps[1]["wall"])
        self.assertEqual((steps[0]["walls_crossed"], steps[2]["walls_crossed"]), (0, 1))
        self.assertEqual(len(steps[0]["fibers"]), 2)

    def test_default_range(self):
        code, report = run(_cfg("wallcross", params=TWO_I2))
        self.assertEqual(code, 0)
        self.assertEqual(report["walls"], [0, 1, 2])
        self.assertEqual(len(report["steps"]), 31)

    def test_empty_range(self):
        cfg = _cfg("wallcross", params=TWO_I2, alpha_start="1", alpha_stop="0")
        self.assertEqual(run(cfg)[0], 2)
        cfg = _cfg("wallcross", params=TWO_I2, alpha_step="0")
        self.assertEqual(run(cfg)[0], 2)


if __name__ == "__main__":
    unittest.main()
