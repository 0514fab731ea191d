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

"""Smoke tests for the Python bindings."""

import itertools
import os

import pytest

import dbmis

FIXTURES = os.environ.get(
    "DBMIS_FIXTURE_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def triangle():
  return dbmis.EdgeColoredGraph(3, 1, [(0, 1, 0, 1), (1, 2, 0, 1),
                                       (0, 2, 0, 1)])


def test_matroids():
  g = dbmis.graphic_matroid(3, [(0, 1), (1, 2), (0, 2)])
  assert g.kind == "graphic"
  assert g.is_independent([0, 1])
  assert not g.is_independent([0, 1, 2])
  assert g.rank([0, 1, 2]) == 2
  s = dbmis.direct_sum([dbmis.uniform_matroid([0, 1], 1),
                        dbmis.free_matroid([2])])
  assert s.is_independent([1, 2])
  with pytest.raises(ValueError):
    g.is_independent([7])


def test_monochromatic_triangle():
  g = triangle()
  assert len(dbmis.algorithm1(g)) == 1
  assert len(dbmis.small_colors(g)) == 1
  assert len(dbmis.solve_bundled_exact(g)) == 1
  inst = dbmis.reduce_gpf_to_dbmis(g)
  assert len(dbmis.solve_exact(inst)) == 1
  assert len(dbmis.solve_via_parity(inst, t=1)) == 1


def test_dbmis_solvers_agree_with_brute_force():
  m = dbmis.graphic_matroid(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
  inst = dbmis.DbmisInstance(m, [([0, 4], 1), ([1, 2, 3], 1)],
                             [3, 1, 4, 1, 5])
  best = max(inst.total_weight(list(s))
             for r in range(6) for s in itertools.combinations(range(5), r)
             if inst.is_feasible(list(s)))
  assert inst.total_weight(dbmis.solve_exact(inst)) == best
  for solver in (dbmis.solve_greedy, dbmis.solve_p_exchange,
                 dbmis.solve_via_parity):
    s = solver(inst)
    assert inst.is_feasible(s)
    assert (inst.degree + 1) * inst.total_weight(s) >= best
  pushed, lifted, k = dbmis.parity_round_trip(inst, [2, 4])
  assert pushed == [2, 4] and lifted == [2, 4] and k == inst.degree + 1


def test_bench_and_cli():
  report = dbmis.bench("bundled", trials=20, seed=7)
  assert report["violations"] == 0
  assert report["text"].startswith("v1 report\n")
  assert report == dbmis.bench("bundled", trials=20, seed=7, jobs=2)
  assert "small-colors-k2" in dbmis.suite_names()
  code, out, _ = dbmis.run_cli(
      ["solve", os.path.join(FIXTURES, "mono_triangle.ecgraph"),
       "--alg", "algorithm1"])
  assert code == 0
  assert dbmis.parse_solution(out)["items"] and "size 1\n" in out
  code, _, err = dbmis.run_cli(["bogus"])
  assert code == 2
  assert dbmis.instance_kind(triangle().to_text()) == "ecgraph"
