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

import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), os.path.pardir)))
from hitchfib.config import (  # noqa: E402
    LazyConfig,
    args_to_overrides,
    default_argument_parser,
    get_config,
)
from hitchfib.data import dumps  # noqa: E402
from hitchfib.engine import default_setup, run  # noqa: E402


def main(args):
    if args.config_file:
        cfg = LazyConfig.load(args.config_file)
    else:
        cfg = get_config(f"{args.command}.py")
    cfg.run.command = args.command
    for key, value in args_to_overrides(args).items():
        cfg.run[key] = value
    cfg = LazyConfig.apply_overrides(cfg, args.opts)
    default_setup(cfg, args)

    code, report = run(cfg)
    if not cfg.run.output:
        print(dumps(report))
    return code


if __name__ == "__main__":
    args = default_argument_parser().parse_args()
    sys.exit(main(args))
