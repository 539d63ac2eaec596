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
import math
import os
from dataclasses import replace
from functools import partial
from typing import Any, Dict, List, Optional, Sequence, Tuple

from hitchfib.classifier import classify, classify_with_weights
from hitchfib.config import LazyConfig, instantiate, try_get_key
from hitchfib.data import (
    STRATUM_REGISTRY,
    RandomPolarSampler,
    all_witnesses,
    dumps,
    load_json,
    polar_from_json,
    polar_to_json,
    rational_to_json,
    sample_stratum,
    weights_from_json,
)
from hitchfib.evaluation import (
    AdmissibilityEvaluator,
    AgreementEvaluator,
    SampleEvaluator,
    SymmetricIdentityEvaluator,
    format_table,
    inference_on_samples,
    print_csv_format,
)
from hitchfib.oracle import run_oracle, symmetric_checks
from hitchfib.polar import CaseTag, PolarData, parse_case, validate
from hitchfib.utils.exceptions import (
    AmbiguousCluster,
    DegenerateSystem,
    HitchFibError,
    NotElliptic,
    SchemaError,
)
from hitchfib.utils.logger import setup_logger
from hitchfib.weights import ParabolicWeights, as_rational

__all__ = ["default_setup", "DefaultRunner", "verify_sample", "run", "EXIT_DISAGREEMENT"]

EXIT_DISAGREEMENT = 4

_SYMMETRIC_CASES = (CaseTag.D22_Ss, CaseTag.D31_Ss)


def _highlight(code, filename):
    try:
        import pygments
    except ImportError:
        return code

    from pygments.formatters import Terminal256Formatter
    from pygments.lexers import Python3Lexer, YamlLexer

    lexer = Python3Lexer() if filename.endswith(".py") else YamlLexer()
    code = pygments.highlight(code, lexer, Terminal256Formatter(style="monokai"))
    return code


def default_setup(cfg, args):
    """
    Perform some basic common setups at the beginning of a job, including:

    1. Set up the hitchfib logger
    2. Log cmdline arguments and the config file
    3. Backup the config to the output directory

    Args:
        args (argparse.NameSpace): the command line arguments to be logged
    """
    output_dir = try_get_key(cfg, "run.output_dir")
    if output_dir:
        os.makedirs(output_dir, exist_ok=True)

    logger = setup_logger(output_dir, level=try_get_key(cfg, "run.log_level", default="INFO"))
    logger.info("Command line arguments: " + str(args))

    if getattr(args, "config_file", ""):
        with open(args.config_file, "r") as f:
            logger.info(
                "Contents of args.config_file={}:\n{}".format(
                    args.config_file, _highlight(f.read(), args.config_file)
                )
            )

    if output_dir:
        path = os.path.join(output_dir, "config.yaml")
        LazyConfig.save(cfg, path)
        logger.info("Full config saved to {}".format(path))


def _error_text(e: Exception) -> str:
    return f"{type(e).__name__}: {e}"


def verify_sample(
    d: PolarData, tol: float = 1e-9, cluster_tol: float = 1e-7, symmetric: bool = False
) -> Dict[str, Any]:
    """
    Classify one parameter set in closed form and with the oracle.

    Module level so that worker processes can unpickle it. Oracle failures are reported
    in ``outputs["error"]`` and count as disagreements.
    """
    inv = validate(d)
    cl = classify(inv)
    outputs: Dict[str, Any] = {
        "params": polar_to_json(d),
        "branch": cl.branch,
        "classification": cl,
        "classified": cl.keys(),
        "inferred": None,
        "error": None,
    }
    try:
        outputs["inferred"] = run_oracle(d, tol=tol, cluster_tol=cluster_tol, inv=inv).keys()
    except (AmbiguousCluster, DegenerateSystem, AssertionError) as e:
        outputs["error"] = _error_text(e)
    if symmetric and d.case in _SYMMETRIC_CASES:
        outputs["symmetric"] = symmetric_checks(inv, numeric=False)
    return outputs


def _params_text(d: PolarData) -> str:
    return ", ".join(f"{k}={v}" for k, v in sorted(d.input_params().items()))


def _check_run_config(run_cfg):
    if not 0 < run_cfg.tol < 1:
        raise SchemaError(f"tol={run_cfg.tol} is outside (0, 1)")
    if not 0 < run_cfg.cluster_tol < 1:
        raise SchemaError(f"cluster_tol={run_cfg.cluster_tol} is outside (0, 1)")
    if run_cfg.samples < 1:
        raise SchemaError(f"samples={run_cfg.samples} must be at least 1")
    if run_cfg.num_workers < 1:
        raise SchemaError(f"num_workers={run_cfg.num_workers} must be at least 1")


class _SweepRows(SampleEvaluator):
    """One report row per swept sample, in sample order."""

    def __init__(self, sources: Sequence[str]):
        self.sources = sources
        self.reset()

    def reset(self):
        self.rows: List[Dict[str, Any]] = []

    def process(self, index, sample, outputs):
        self.rows.append(
            {
                "source": self.sources[index],
                "case": sample.input_case,
                "params": outputs["params"]["params"],
                "branch": outputs["branch"],
                "classified": outputs["classified"],
                "inferred": outputs["inferred"],
                "agree": outputs["error"] is None and outputs["classified"] == outputs["inferred"],
            }
        )


class DefaultRunner:
    """
    Runs one of the commands ``classify``, ``verify``, ``sweep`` and ``wallcross``
    described by a config with a ``run`` section and, optionally, an ``evaluation``
    section listing evaluators as lazy calls.

    Every command returns ``(exit_code, report)`` where ``report`` is a JSON-ready dict.
    """

    def __init__(self, cfg):
        self.cfg = cfg
        self.run_cfg = cfg.run
        _check_run_config(self.run_cfg)
        self.logger = logging.getLogger(__name__)

    def build_evaluators(self):
        evaluators = try_get_key(self.cfg, "evaluation.evaluators")
        if evaluators is None:
            return [AgreementEvaluator(), AdmissibilityEvaluator(), SymmetricIdentityEvaluator()]
        return [instantiate(e) for e in evaluators]

    def _sample_fn(self):
        return partial(
            verify_sample,
            tol=self.run_cfg.tol,
            cluster_tol=self.run_cfg.cluster_tol,
            symmetric=bool(try_get_key(self.run_cfg, "symmetric_checks", default=False)),
        )

    def _cases(self) -> List[str]:
        if self.run_cfg.case:
            parse_case(self.run_cfg.case)
            return [self.run_cfg.case]
        return [c.value for c in CaseTag]

    def _seed(self, case: str):
        index = [c.value for c in CaseTag].index(parse_case(case)[0].value)
        return [int(self.run_cfg.seed), index]

    def _load_params(self) -> PolarData:
        if not self.run_cfg.params:
            raise SchemaError(f"{self.run_cfg.command} needs --params")
        return polar_from_json(load_json(self.run_cfg.params))

    def _load_weights(self) -> Optional[ParabolicWeights]:
        if not self.run_cfg.weights:
            return None
        return weights_from_json(load_json(self.run_cfg.weights))

    def _evaluate(self, samples: List[PolarData]) -> Dict[str, Any]:
        return inference_on_samples(
            samples,
            self._sample_fn(),
            self.build_evaluators(),
            num_workers=self.run_cfg.num_workers,
            progress=bool(try_get_key(self.run_cfg, "progress", default=False)),
        )

    def classify(self) -> Tuple[int, Dict[str, Any]]:
        d = self._load_params()
        inv = validate(d)
        report = classify_with_weights(inv, w=self._load_weights())
        report.extra["invariants"] = inv.as_dict()
        if d.case in _SYMMETRIC_CASES:
            report.extra["symmetric"] = symmetric_checks(inv).to_json()
        self.logger.info(f"{d.input_case}: {report.case_branch} -> {report.fiber_names()}")
        return 0, {"command": "classify", **report.to_json()}

    def verify(self) -> Tuple[int, Dict[str, Any]]:
        per_case: Dict[str, Any] = {}
        agree = disagree = 0
        for case in self._cases():
            sampler = RandomPolarSampler(case, bound=self.run_cfg.bound, seed=self._seed(case))
            samples = sampler.sample(self.run_cfg.samples)
            results = self._evaluate(samples)
            results.setdefault("sampling", {})["rejection_rate"] = round(
                sampler.rejection_rate, 6
            )
            print_csv_format({f"{case}/{k}": v for k, v in results.items()})
            per_case[case] = results
            agreement = results.get("agreement", {})
            agree += agreement.get("agree", 0)
            disagree += agreement.get("disagree", 0)
        self.logger.info(f"verify: {agree} agree, {disagree} disagree")
        report = {
            "command": "verify",
            "seed": self.run_cfg.seed,
            "samples": self.run_cfg.samples,
            "agree": agree,
            "disagree": disagree,
            "cases": per_case,
        }
        return (EXIT_DISAGREEMENT if disagree else 0), report

    def _sweep_samples(self) -> List[Tuple[str, PolarData]]:
        branch = self.run_cfg.branch
        cases = self._cases()
        out: List[Tuple[str, PolarData]] = []
        for w in all_witnesses():
            if w.case in cases:
                out.append(("witness", w.data))
        n = int(try_get_key(self.run_cfg, "stratum_samples", default=0))
        for name in STRATUM_REGISTRY.names():
            if name.split("/")[0] in cases and (branch is None or name == branch) and n:
                seed = [int(self.run_cfg.seed), sorted(STRATUM_REGISTRY.names()).index(name)]
                out.extend(
                    ("stratum", d)
                    for d in sample_stratum(name, n, bound=self.run_cfg.bound, seed=seed)
                )
        for case in cases:
            sampler = RandomPolarSampler(case, bound=self.run_cfg.bound, seed=self._seed(case))
            out.extend(("random", d) for d in sampler.sample(self.run_cfg.samples))
        return out

    def sweep(self) -> Tuple[int, Dict[str, Any]]:
        branch = self.run_cfg.branch
        swept = self._sweep_samples()
        if branch is not None:
            # the closed-form branch is cheap; only matching samples reach the oracle
            swept = [(s, d) for s, d in swept if classify(validate(d)).branch == branch]
        if not swept:
            raise SchemaError(f"no sweep sample falls on branch {branch}")
        sources, samples = zip(*swept)
        collector = _SweepRows(sources)
        evaluators = self.build_evaluators() + [collector]
        results = inference_on_samples(
            samples,
            self._sample_fn(),
            evaluators,
            num_workers=self.run_cfg.num_workers,
            progress=bool(try_get_key(self.run_cfg, "progress", default=False)),
        )
        rows = collector.rows

        table = [
            [r["branch"], r["source"], _params_text(samples[i]), "+".join(r["classified"])]
            + [r["agree"]]
            for i, r in enumerate(rows)
        ]
        self.logger.info(
            "Sweep:\n"
            + format_table(table, headers=["branch", "source", "params", "fibers", "agree"])
        )
        disagree = sum(not r["agree"] for r in rows)
        report = {
            "command": "sweep",
            "seed": self.run_cfg.seed,
            "branch": branch,
            "agree": len(rows) - disagree,
            "disagree": disagree,
            "results": results,
            "rows": rows,
        }
        return (EXIT_DISAGREEMENT if disagree else 0), report

    def wallcross(self) -> Tuple[int, Dict[str, Any]]:
        d = self._load_params()
        inv = validate(d)
        base = self._load_weights() or ParabolicWeights.generic()
        start = as_rational(self.run_cfg.alpha_start)
        stop = as_rational(self.run_cfg.alpha_stop)
        step = as_rational(self.run_cfg.alpha_step)
        if step <= 0 or stop < start:
            raise SchemaError(f"empty alpha range [{start}, {stop}] with step {step}")
        steps = []
        count = int((stop - start) / step)
        for k in range(count + 1):
            alpha = start + k * step
            w = replace(base, extended_alpha_plus=alpha)
            entry: Dict[str, Any] = {"alpha_plus": rational_to_json(alpha)}
            if alpha.denominator == 1:
                entry["wall"] = True
            else:
                report = classify_with_weights(inv, w=w)
                entry.update(
                    walls_crossed=report.walls_crossed,
                    fibers=[f.to_json() for f in report.fibers],
                )
            steps.append(entry)
        walls = list(range(math.ceil(start), math.floor(stop) + 1))
        self.logger.info(
            f"{d.input_case}: {len(steps)} weights in [{start}, {stop}], walls at {walls}"
        )
        report = {
            "command": "wallcross",
            "case": d.input_case,
            "branch": classify(inv).branch,
            "walls": walls,
            "steps": steps,
        }
        return 0, report

    def run(self) -> Tuple[int, Dict[str, Any]]:
        command = self.run_cfg.command
        if command not in ("classify", "verify", "sweep", "wallcross"):
            raise SchemaError(f"unknown command {command!r}")
        return getattr(self, command)()


def _error_report(e: HitchFibError) -> Dict[str, Any]:
    report: Dict[str, Any] = {"error": type(e).__name__, "message": str(e)}
    if isinstance(e, NotElliptic):
        report["reason"] = e.reason
        if e.case is not None:
            report["case"] = getattr(e.case, "value", e.case)
    return report


def run(cfg) -> Tuple[int, Dict[str, Any]]:
    """
    Run ``cfg.run.command`` and write its report to ``cfg.run.output`` when set.

    Returns:
        (exit_code, report): 0 on success, 2 on malformed input, 3 on non-elliptic
        parameters and 4 when the closed form and the oracle disagree.
    """
    logger = logging.getLogger(__name__)
    try:
        code, report = DefaultRunner(cfg).run()
    except HitchFibError as e:
        logger.error(_error_text(e))
        code, report = e.exit_code, _error_report(e)
    output = try_get_key(cfg, "run.output")
    if output:
        with open(output, "w") as f:
            f.write(dumps(report) + "\n")
        logger.info(f"Report saved to {output}")
    return code, report
