# Copyright 2026 The locreal Authors
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
"""Bell and CHSH inequality toolkit."""

import json as _json

from ._core import (
    DensityOperator,
    HypothesisError,
    InvariantError,
    PovMeasure,
    Report,
    Scenario,
    ValidationError,
    check_bell,
    check_chsh,
    classical_lhv_bound,
    correlation,
    load_scenario,
    operator_norm,
    parse_scenario,
    quantum_max_value,
    qubit_pov,
    qubit_pov_xz,
    sample_correlation,
    scenario_distance,
    search_settings,
    singlet_state,
    trace_norm,
    werner_state,
)


def run(command, scenario, tol=None, seed=None, jobs=1):
    """Runs validate, check, search or simulate and returns the JSON document as a dict."""
    from ._core import run_json

    if isinstance(scenario, str):
        scenario = load_scenario(scenario)
    return _json.loads(run_json(command, scenario, tol, seed, jobs))
