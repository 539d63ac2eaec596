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

import datetime
import logging
import time
from collections import Counter, OrderedDict, abc
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Sequence, Union

from tqdm import tqdm

from hitchfib.kodaira import euler_number, is_allowed_configuration
from hitchfib.utils.logger import log_every_n_seconds

__all__ = [
    "SampleEvaluator",
    "SampleEvaluators",
    "AgreementEvaluator",
    "AdmissibilityEvaluator",
    "BranchCoverageEvaluator",
    "SymmetricIdentityEvaluator",
    "inference_on_samples",
]


class SampleEvaluator:
    """
    Base class for evaluators over parameter samples.

    :func:`inference_on_samples` runs a function over every sample and hands each
    ``(index, sample, outputs)`` triple to :meth:`process`; :meth:`evaluate` summarizes.
    """

    def reset(self):
        """
        Preparation for a new round of evaluation.
        """

    def process(self, index: int, sample, outputs: Dict[str, Any]):
        """
        Args:
            index (int): position of the sample in the input sequence.
            sample: the sample, usually a ``PolarData``.
            outputs (dict): return value of the per-sample function.
        """

    def evaluate(self):
        """
        Returns:
            dict: task name -> {metric name: value}. Non-scalar values are allowed and
            are skipped by :func:`print_csv_format`.
        """


class SampleEvaluators(SampleEvaluator):
    """
    Dispatches every call to each of the wrapped evaluators.
    """

    def __init__(self, evaluators):
        super().__init__()
        self._evaluators = evaluators

    def reset(self):
        for evaluator in self._evaluators:
            evaluator.reset()

    def process(self, index, sample, outputs):
        for evaluator in self._evaluators:
            evaluator.process(index, sample, outputs)

    def evaluate(self):
        results = OrderedDict()
        for evaluator in self._evaluators:
            result = evaluator.evaluate()
            if result is not None:
                for k, v in result.items():
                    assert (
                        k not in results
                    ), "Different evaluators produce results with the same key {}".format(k)
                    results[k] = v
        return results


class AgreementEvaluator(SampleEvaluator):
    """
    Compares the closed-form fiber multiset (``outputs["classified"]``) with the one
    inferred by the oracle (``outputs["inferred"]``). A sample whose oracle run failed
    (``outputs["error"]``) counts as a disagreement.
    """

    def __init__(self, max_details: int = 50):
        self.max_details = max_details
        self.reset()

    def reset(self):
        self._agree = 0
        self._disagree = 0
        self._details: List[Dict[str, Any]] = []

    def process(self, index, sample, outputs):
        ok = outputs.get("error") is None and outputs["classified"] == outputs["inferred"]
        if ok:
            self._agree += 1
            return
        self._disagree += 1
        if len(self._details) < self.max_details:
            self._details.append(
                {
                    "index": index,
                    "params": outputs.get("params"),
                    "branch": outputs.get("branch"),
                    "classified": outputs.get("classified"),
                    "inferred": outputs.get("inferred"),
                    "error": outputs.get("error"),
                }
            )

    @property
    def disagreements(self) -> List[Dict[str, Any]]:
        return sorted(self._details, key=lambda r: r["index"])

    def evaluate(self):
        return {
            "agreement": {
                "agree": self._agree,
                "disagree": self._disagree,
                "details": self.disagreements,
            }
        }


class AdmissibilityEvaluator(SampleEvaluator):
    """Euler numbers summing to 12 and membership in the companion tables."""

    def reset(self):
        self._checked = 0
        self._violations = 0

    def process(self, index, sample, outputs):
        cl = outputs.get("classification")
        if cl is None:
            return
        self._checked += 1
        types = cl.kodaira_types()
        euler = euler_number(cl.infinity) + sum(euler_number(t) for t in types)
        allowed = cl.case.degenerate or is_allowed_configuration(cl.infinity, types)
        if euler != 12 or not allowed:
            self._violations += 1

    def evaluate(self):
        return {"admissibility": {"checked": self._checked, "violations": self._violations}}


class BranchCoverageEvaluator(SampleEvaluator):
    """Counts how often each decision-tree branch fired and which fibers it produced."""

    def reset(self):
        self._branches: Counter = Counter()
        self._fibers: Dict[str, str] = {}

    def process(self, index, sample, outputs):
        branch = outputs.get("branch")
        if branch is None:
            return
        self._branches[branch] += 1
        self._fibers.setdefault(branch, "+".join(outputs.get("classified") or []))

    def evaluate(self):
        return {
            "branches": {
                name: {"count": self._branches[name], "fibers": self._fibers[name]}
                for name in sorted(self._branches)
            }
        }


class SymmetricIdentityEvaluator(SampleEvaluator):
    """Counts samples where the exact pair product differs from its factored form."""

    def reset(self):
        self._checked = 0
        self._failures = 0

    def process(self, index, sample, outputs):
        checks = outputs.get("symmetric")
        if checks is None:
            return
        self._checked += 1
        if not checks.identity_holds:
            self._failures += 1

    def evaluate(self):
        return {"symmetric_identity": {"checked": self._checked, "failures": self._failures}}


def inference_on_samples(
    samples: Sequence,
    fn: Callable[[Any], Dict[str, Any]],
    evaluator: Union[SampleEvaluator, List[SampleEvaluator], None],
    num_workers: int = 1,
    progress: bool = False,
):
    """
    Run ``fn`` over ``samples`` and feed the outputs to ``evaluator`` in sample order.

    Args:
        samples: a sequence of inputs for ``fn``.
        fn: a picklable callable when ``num_workers > 1``.
        evaluator: the evaluator(s) to run, or ``None``.
        num_workers (int): worker processes; 1 runs in this process.
        progress (bool): show a tqdm progress bar.

    Returns:
        The return value of ``evaluator.evaluate()``.
    """
    logger = logging.getLogger(__name__)
    total = len(samples)
    logger.info("Start evaluation on {} samples".format(total))
    if evaluator is None:
        evaluator = SampleEvaluators([])
    if isinstance(evaluator, abc.MutableSequence):
        evaluator = SampleEvaluators(evaluator)
    evaluator.reset()

    start_time = time.perf_counter()
    if num_workers > 1:
        with ProcessPoolExecutor(max_workers=num_workers) as pool:
            outputs_iter = pool.map(fn, samples, chunksize=max(1, total // (4 * num_workers)))
            outputs = list(tqdm(outputs_iter, total=total, disable=not progress))
        for idx, (sample, out) in enumerate(zip(samples, outputs)):
            evaluator.process(idx, sample, out)
    else:
        for idx, sample in enumerate(tqdm(samples, total=total, disable=not progress)):
            evaluator.process(idx, sample, fn(sample))
            seconds_per_sample = (time.perf_counter() - start_time) / (idx + 1)
            eta = datetime.timedelta(seconds=int(seconds_per_sample * (total - idx - 1)))
            log_every_n_seconds(
                logging.INFO,
                f"Evaluated {idx + 1}/{total}. {seconds_per_sample:.4f} s/sample. ETA={eta}",
                n=5,
            )

    total_time = time.perf_counter() - start_time
    logger.info(
        "Total evaluation time: {} ({:.6f} s / sample, {} workers)".format(
            str(datetime.timedelta(seconds=total_time)), total_time / max(total, 1), num_workers
        )
    )
    results = evaluator.evaluate()
    if results is None:
        results = {}
    return results
