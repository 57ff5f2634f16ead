# Copyright 2026 The sccckit Authors
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

import math

import pytest

sccckit = pytest.importorskip("sccckit")


def test_name_is_column_stacking():
    assert sccckit.name([[1, 2], [3, 4]]) == [1, 3, 2, 4]
    assert sccckit.unit(2) == [1, 0, 0, 1]


def test_norms_and_traces():
    assert sccckit.hs_norm_sq([[1, 2], [3, 4]]) == 30
    assert sccckit.trace([[1, 0], [0, 1]]) == 2
    assert sccckit.hs_inner([[1j]], [[2]]) == -2j


def test_born_probability():
    r = 1 / math.sqrt(2)
    assert sccckit.born_prob([r, r], [[1, 0], [0, 0]]) == pytest.approx(0.5, abs=1e-15)


def test_scalar_sums():
    assert sccckit.scalar_sum(1, 1) == pytest.approx(2, abs=1e-12)
    assert sccckit.scalar_sum(1, 1, nu="1/2") == pytest.approx(math.sqrt(2), abs=1e-12)


def test_derived_sum_matches_entrywise():
    f = [[1, 2j], [3, 4], [5, 6]]
    g = [[1j, 1], [0, -1], [2, 2]]
    s = sccckit.derived_sum(f, g)
    for r in range(3):
        for c in range(2):
            assert s[r][c] == pytest.approx(f[r][c] + g[r][c])


def test_phases():
    f = [[1, 2], [3, 4j]]
    assert sccckit.phase_equal(f, [[1j * x for x in row] for row in f])
    assert not sccckit.phase_equal(f, [[2 * x for x in row] for row in f])
    assert sccckit.canonical_rep([[1j], [0]]) == [[1], [0]]


def test_teleport():
    branches = sccckit.teleport([1, 0])
    assert len(branches) == 4
    for b in branches:
        assert b["corrected"][0] == pytest.approx(0.5)
        assert abs(b["corrected"][1]) < 1e-12
        assert b["probability"] == pytest.approx(0.25)


def test_suites():
    assert "prep-state" in sccckit.suite_names()
    report = sccckit.run_suite("prep-state", "fdhilb", trials=20, seed=3)
    assert report["ok"]
    assert {r["status"] for r in report["results"]} == {"expected-fail"}
    report = sccckit.run_suite("prep-state", "wproj:fdhilb", trials=20, seed=3)
    assert {r["status"] for r in report["results"]} == {"pass"}
    with pytest.raises(sccckit.SccError):
        sccckit.run_suite("nonsense")
