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


# This line will be programatically read/write by setup.py.
# Leave them at the bottom of this file and don't touch them.

from hitchfib import numerics
from hitchfib import kodaira
from hitchfib import polar
from hitchfib import weights
from hitchfib import classifier
from hitchfib import oracle
from hitchfib import data
from hitchfib import evaluation
from hitchfib import engine
from hitchfib import utils

try:
    from .version import __version__  # noqa: F401
except ImportError:
    pass
