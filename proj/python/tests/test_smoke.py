# Copyright 2026 The fttomo Authors
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

import numpy as np
import pytest

import fttomo

BETA = fttomo.presets.RETARDANCE


def test_version():
    assert fttomo.__version__.count(".") == 2


def test_stokes_round_trip():
    rho = fttomo.random_ginibre_state(2, seed=3)
    s = fttomo.stokes_decompose(rho)
    assert len(s) == 16
    assert s[0] == pytest.approx(1.0)
    np.testing.assert_allclose(fttomo.stokes_compose(s), rho, atol=1e-12)


def test_single_qubit_example():
    rho = fttomo.presets.one_qubit_state()
    record = fttomo.synthesize(rho, fttomo.presets.one_qubit_config())
    assert record.kind == "probabilities"
    assert record.outcomes == ["H", "V"]
    spec = fttomo.analyze(fttomo.coincidence_signal(record), record.period)
    assert spec.a[0] == pytest.approx(1.0, abs=1e-3)
    assert spec.b[1] == pytest.approx(0.210, abs=1e-3)
    assert spec.b[2] == pytest.approx(-0.236, abs=1e-3)
    s = fttomo.invert_1q(spec, BETA)
    np.testing.assert_allclose(s, [1.0, -0.566, 0.566, 0.0], atol=1e-3)


def test_two_qubit_pipeline():
    config = fttomo.presets.two_qubit_config()
    assert fttomo.harmonic_set(config) == list(range(1, 13))
    record = fttomo.synthesize(fttomo.presets.two_qubit_state(), config)
    result = fttomo.reconstruct(record, physical=True)
    assert result.rho_raw.shape == (4, 4)
    assert result.rho_raw[1, 1].real == pytest.approx(0.625, abs=1e-9)
    assert result.rho_raw[0, 1] == pytest.approx(0.25 + 0.125j, abs=1e-9)
    assert result.rho_physical is not None
    closed = fttomo.invert_2q(result.spectrum, BETA, BETA)
    generic = fttomo.invert_generic(result.spectrum, fttomo.build_transfer_matrix(config))
    np.testing.assert_allclose(closed, generic, atol=1e-9)


def test_identifiability_and_errors():
    r2 = fttomo.build_transfer_matrix(fttomo.presets.two_qubit_config(ratio=2))
    report = fttomo.check_identifiability(r2)
    assert not report.identifiable
    assert report.rank < 16
    record = fttomo.synthesize(fttomo.presets.two_qubit_state(), fttomo.presets.two_qubit_config(ratio=2))
    with pytest.raises(fttomo.RankDeficientError):
        fttomo.reconstruct(record)
    with pytest.raises(fttomo.ValidationError):
        fttomo.ExperimentConfig([fttomo.PlateSpec(BETA, 5), fttomo.PlateSpec(BETA, 1)], 64)
    with pytest.raises(ValueError):
        fttomo.WavePlate(math.pi, 1.0)


def test_wave_plate_and_chi():
    plate = fttomo.WavePlate(BETA, 2 * math.pi)
    m = fttomo.projector(plate, 0.25)
    assert np.trace(fttomo.pauli(2) @ m).real == pytest.approx(fttomo.chi(plate, 2, 0.25))
    path = np.asarray(fttomo.bloch_path(plate, 21))
    assert path.shape == (21, 4)
    np.testing.assert_allclose(np.linalg.norm(path[:, 1:], axis=1), 1.0, atol=1e-12)


def test_shot_noise_is_seeded():
    config = fttomo.presets.one_qubit_config(shots=1000, seed=4)
    rho = fttomo.presets.one_qubit_state()
    a = fttomo.synthesize(rho, config)
    b = fttomo.synthesize(rho, config)
    np.testing.assert_array_equal(a.table, b.table)
    assert a.kind == "counts"
    assert np.all(a.table.sum(axis=1) == 1000)


def test_ewv():
    assert fttomo.ewv(math.pi / 2, 100) * 100 == pytest.approx(84.0, abs=0.5)
    points, beta_min, value = fttomo.ewv_scan(0.1, math.pi - 0.1, 500, 100)
    assert len(points) == 500
    assert beta_min == pytest.approx(2.27, abs=0.02)
    assert value == pytest.approx(41.7, abs=0.5)


def test_config_json_round_trip():
    config = fttomo.presets.two_qubit_config(shots=10, seed=2)
    back = fttomo.ExperimentConfig.from_json(config.to_json())
    assert back.seed == 2
    assert [p.frequency for p in back.plates] == [1, 5]


def test_cli_main(tmp_path):
    out = tmp_path / "ewv.csv"
    assert fttomo.cli_main(["ewv-scan", "--steps", "50", "--out", str(out)]) == 0
    assert out.read_text().startswith("beta,ewv_times_n")
    assert fttomo.cli_main(["simulate", "--config", str(tmp_path / "none.json"),
                            "--state", "x", "--out", str(tmp_path / "s.csv")]) == 1
