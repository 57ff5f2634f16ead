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

"""Python access to sccckit's matrix models and verification suites."""

import json

from ._sccckit import (
    SccError,
    born_prob,
    canonical_rep,
    derived_sum,
    doubled,
    hs_inner,
    hs_norm_sq,
    name,
    phase_equal,
    scalar_sum,
    suite_names,
    teleport,
    trace,
    unit,
)
from ._sccckit import run_suite as _run_suite

__all__ = [
    "SccError",
    "born_prob",
    "canonical_rep",
    "derived_sum",
    "doubled",
    "hs_inner",
    "hs_norm_sq",
    "name",
    "phase_equal",
    "run_suite",
    "scalar_sum",
    "suite_names",
    "teleport",
    "trace",
    "unit",
]


def run_suite(suite, model="fdhilb", **options):
    """Run a suite and return the report as a dict (same schema as the CLI's --json)."""
    return json.loads(_run_suite(suite, model, **options))
