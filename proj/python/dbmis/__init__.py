# Copyright 2026 The Authors.
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

"""Degree bounded matroid independent sets: solvers, reductions, oracles."""

from dbmis._core import (
    UNBOUNDED,
    ContractViolation,
    DbmisInstance,
    EdgeColoredGraph,
    InvalidArgument,
    Matroid,
    ResourceLimit,
    algorithm1,
    bench,
    direct_sum,
    free_matroid,
    graphic_matroid,
    instance_kind,
    parity_round_trip,
    parse_solution,
    partition_matroid,
    reduce_gpf_to_dbmis,
    run_cli,
    small_colors,
    solve_bundled_exact,
    solve_exact,
    solve_gpf_exact,
    solve_greedy,
    solve_p_exchange,
    solve_via_parity,
    suite_names,
    uniform_matroid,
)

__all__ = [
    "UNBOUNDED",
    "ContractViolation",
    "DbmisInstance",
    "EdgeColoredGraph",
    "InvalidArgument",
    "Matroid",
    "ResourceLimit",
    "algorithm1",
    "bench",
    "direct_sum",
    "free_matroid",
    "graphic_matroid",
    "instance_kind",
    "parity_round_trip",
    "parse_solution",
    "partition_matroid",
    "reduce_gpf_to_dbmis",
    "run_cli",
    "small_colors",
    "solve_bundled_exact",
    "solve_exact",
    "solve_gpf_exact",
    "solve_greedy",
    "solve_p_exchange",
    "solve_via_parity",
    "suite_names",
    "uniform_matroid",
]
