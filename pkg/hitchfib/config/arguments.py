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

import argparse
import sys

COMMANDS = ("classify", "verify", "sweep", "wallcross")

# command-line flag -> key under ``run`` in the config
FLAG_KEYS = {
    "case": "case",
    "params": "params",
    "weights": "weights",
    "tol": "tol",
    "cluster_tol": "cluster_tol",
    "samples": "samples",
    "seed": "seed",
    "out": "output",
    "branch": "branch",
    "num_workers": "num_workers",
    "alpha_start": "alpha_start",
    "alpha_stop": "alpha_stop",
    "alpha_step": "alpha_step",
}


class _ArgumentParser(argparse.ArgumentParser):
    """Flags may appear anywhere after the command, mixed with ``key=value`` overrides."""

    def parse_args(self, args=None, namespace=None):
        return self.parse_intermixed_args(args, namespace)


def default_argument_parser(epilog=None):
    """
    Create the parser of ``tools/run_net.py``.

    Args:
        epilog (str): epilog passed to ArgumentParser describing the usage.

    Returns:
        argparse.ArgumentParser:
    """
    parser = _ArgumentParser(
        epilog=epilog
        or f"""
Examples:

Classify one parameter set:
    $ python3 {sys.argv[0]} classify --params params.json --weights weights.json

Compare the closed-form classification with the numerical oracle:
    $ python3 {sys.argv[0]} verify --case d22-nn --samples 1000 --seed 7

Walk the extended weight across [-1/2, 5/2]:
    $ python3 {sys.argv[0]} wallcross --params params.json --alpha-start=-1/2 --alpha-stop=5/2

Change other config options:
    $ python3 {sys.argv[0]} sweep --config-file configs/sweep.py run.bound=10
""",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=COMMANDS, help="what to run")
    parser.add_argument("--config-file", default="", metavar="FILE", help="path to config file")
    parser.add_argument("--case", default=None, help="pole configuration, e.g. d22-ss")
    parser.add_argument(
        "--params", default=None, metavar="FILE", help="parameter JSON file or inline JSON"
    )
    parser.add_argument(
        "--weights", default=None, metavar="FILE", help="weights JSON file or inline JSON"
    )
    parser.add_argument("--tol", type=float, default=None, help="root tolerance in (0, 1)")
    parser.add_argument(
        "--cluster-tol", type=float, default=None, help="relative t-clustering tolerance"
    )
    parser.add_argument("--samples", type=int, default=None, help="random samples per case")
    parser.add_argument("--seed", type=int, default=None, help="random seed")
    parser.add_argument("--out", default=None, metavar="FILE", help="report path (default stdout)")
    parser.add_argument("--branch", default=None, help="only sweep this branch, e.g. d31-sn/3")
    parser.add_argument("--num-workers", type=int, default=None, help="worker processes")
    parser.add_argument(
        "--alpha-start", default=None, help="wallcross start of the extended alpha_plus"
    )
    parser.add_argument(
        "--alpha-stop", default=None, help="wallcross end of the extended alpha_plus"
    )
    parser.add_argument("--alpha-step", default=None, help="wallcross step, as a rational")
    parser.add_argument(
        "opts",
        help="""
Modify config options at the end of the command, using "path.key=value".
        """.strip(),
        default=None,
        nargs="*",
    )
    return parser


def args_to_overrides(args) -> dict:
    """Flag values given on the command line, keyed by their config name."""
    out = {}
    for flag, key in FLAG_KEYS.items():
        value = getattr(args, flag, None)
        if value is not None:
            out[key] = value
    return out
