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

from .inference import (
    OracleReport,
    TCluster,
    cluster_by_t,
    group_by_member,
    infer_configuration,
    run_oracle,
)
from .locus import SingularPoint, singular_locus, singular_polynomial
from .members import Member, MemberSplit, member_polynomial, split_by_member
from .symmetric import SymmetricChecks, pair_quartic, symmetric_checks

__all__ = [
    "SingularPoint",
    "singular_locus",
    "singular_polynomial",
    "TCluster",
    "OracleReport",
    "cluster_by_t",
    "group_by_member",
    "Member",
    "MemberSplit",
    "member_polynomial",
    "split_by_member",
    "infer_configuration",
    "run_oracle",
    "SymmetricChecks",
    "symmetric_checks",
    "pair_quartic",
]
