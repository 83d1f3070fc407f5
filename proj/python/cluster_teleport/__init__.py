# Copyright 2026 The cluster-teleport Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Two-qubit teleportation through a four-qubit cluster channel."""

import json

from ._core import (
    BellOutcome,
    ConfigError,
    ImpossibleBranch,
    Pauli,
    Scheme,
    StateVector,
    apply_cz,
    apply_pauli,
    assemble_total,
    basis_state,
    bell_vector,
    cluster_state,
    derive_corrections,
    fidelity,
    inner,
    make_input,
    normalize,
    pauli_matrix,
    project_bell,
    run_branch,
    run_report,
    table_lookup,
    tensor,
)


def run(mode, **kwargs):
    """Runs a harness mode and returns the parsed JSON report."""
    kwargs["format"] = "json"
    text, _ = run_report(mode, **kwargs)
    return json.loads(text)


__all__ = [name for name in dir() if not name.startswith("_")]
