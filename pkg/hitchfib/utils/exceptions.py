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

"""
Error types raised across hitchfib.

Every error carries an ``exit_code`` which ``tools/run_net.py`` returns to the shell:
2 for malformed input, 3 for a parameter set that does not give an elliptic fibration.
"""

__all__ = [
    "HitchFibError",
    "SchemaError",
    "ZeroPolynomial",
    "ToleranceOutOfRange",
    "UnsupportedInfinityType",
    "ResidueViolation",
    "NotElliptic",
    "DegenerateSystem",
    "AmbiguousCluster",
    "InvalidWeights",
    "OnWall",
    "UnsupportedFiber",
    "InconsistentBookkeeping",
]


class HitchFibError(Exception):
    exit_code = 1


class SchemaError(HitchFibError, ValueError):
    """Input JSON or config values do not match the expected layout."""

    exit_code = 2


class ZeroPolynomial(HitchFibError, ValueError):
    exit_code = 1


class ToleranceOutOfRange(HitchFibError, ValueError):
    exit_code = 2


class UnsupportedInfinityType(HitchFibError, ValueError):
    exit_code = 1


class ResidueViolation(SchemaError):
    """The residue theorem constraint of the pole configuration fails."""


class NotElliptic(HitchFibError, ValueError):
    """
    The pencil does not define an elliptic fibration.

    Args:
        reason (str): one of "A=0", "B=0", "M=0", "a_m3=0", "b_m3=0", "Q=0", "a_m3*b_m3=0"
    """

    exit_code = 3

    def __init__(self, reason, case=None):
        self.reason = reason
        self.case = case
        where = f" ({case})" if case is not None else ""
        super().__init__(f"not an elliptic fibration{where}: {reason}")


class DegenerateSystem(HitchFibError, RuntimeError):
    exit_code = 1


class AmbiguousCluster(HitchFibError, RuntimeError):
    exit_code = 1


class InvalidWeights(SchemaError):
    pass


class OnWall(HitchFibError, ValueError):
    exit_code = 1


class UnsupportedFiber(HitchFibError, ValueError):
    exit_code = 1


class InconsistentBookkeeping(HitchFibError, ValueError):
    exit_code = 1
