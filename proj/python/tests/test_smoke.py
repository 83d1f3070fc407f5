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

import math

import pytest

import cluster_teleport as ct

B = ct.BellOutcome


def test_basis_and_fidelity():
    s = ct.basis_state([1, 2], [1, 1])
    assert s.labels == [1, 2]
    assert s.amplitudes == [0, 0, 0, 1]
    h = 1 / math.sqrt(2)
    plus = ct.StateVector.from_amplitudes([1], [h, h])
    assert ct.fidelity(ct.basis_state([1], [0]), plus) == pytest.approx(0.5)
    assert ct.fidelity(plus, plus.with_global_phase(1.3)) == pytest.approx(1.0, abs=1e-12)


def test_rejects_duplicate_labels_and_zero_vectors():
    with pytest.raises(ValueError):
        ct.basis_state([1, 1], [0, 0])
    with pytest.raises(ct.ImpossibleBranch):
        ct.normalize([1], [0, 0])


def test_cluster_projection():
    p, rest = ct.project_bell(ct.cluster_state(), 3, 4, B.PhiPlus)
    assert p == pytest.approx(0.5)
    assert rest.labels == [5, 6]
    p, rest = ct.project_bell(ct.cluster_state(), 3, 4, B.PsiPlus)
    assert p == 0 and rest is None


def test_gates():
    s = ct.apply_pauli(ct.basis_state([4], [0]), 4, ct.Pauli.X)
    assert s.amplitudes == [0, 1]
    s = ct.apply_cz(ct.basis_state([4, 5], [1, 1]), 4, 5)
    assert s.amplitudes[3] == -1
    assert ct.pauli_matrix(ct.Pauli.Y)[0][1] == -1j


def test_run_branch_worked_example():
    t = ct.run_branch(ct.Scheme.Two, [0.5, 0.5, 0.5, 0.5], B.PhiPlus, B.PhiMinus)
    assert t["correction"] == "CZ45;I4Z5"
    assert t["probability"] == pytest.approx(1 / 16, abs=1e-12)
    assert t["fidelity"] >= 1 - 1e-10
    assert t["corrected_state"].labels == [4, 5]


def test_tables_and_derivation():
    assert ct.table_lookup(ct.Scheme.One, B.PhiPlus, B.PhiPlus) == ["I4Z5", "Z4I5"]
    assert ct.derive_corrections(ct.Scheme.Two, B.PsiMinus, B.PsiMinus) == ["CZ45;Y4Y5"]


def test_reports():
    r = ct.run("enumerate", scheme=2, coeffs="0.5,0.5,0.5,0.5")
    assert r["schema"] == 1
    assert len(r["branches"]) == 16
    assert r["aggregates"]["passed"]
    v = ct.run("verify", scheme=2)
    assert [c["verdict"] for c in v["verdicts"]] == ["exact-up-to-global-phase"] * 16
    csv, code = ct.run_report("enumerate", scheme=1, coeffs="0.6,0+0.8j", format="csv")
    assert code == 0
    assert len(csv.splitlines()) == 17
    a, _ = ct.run_report("sample", trials=300, seed=9)
    b, _ = ct.run_report("sample", trials=300, seed=9)
    assert a == b
    with pytest.raises(ct.ConfigError):
        ct.run_report("sample", trials=0)
    with pytest.raises(ct.ConfigError):
        ct.run_report("enumerate", scheme=1, coeffs="1,1")
