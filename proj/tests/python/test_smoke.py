import math

import numpy as np
import pytest

import telecloning as tc


def test_optimal_fidelity():
    assert tc.optimal_fidelity(1, 2) == pytest.approx(5 / 6)
    assert tc.optimal_fidelity(1, 3) == pytest.approx(7 / 9)


def test_dicke_state():
    d = tc.dicke_state(3, 2)
    assert d.shape == (8,)
    assert np.allclose(np.abs(d[[3, 5, 6]]) ** 2, 1 / 3)
    with pytest.raises(ValueError):
        tc.dicke_state(3, 5)


def test_cost():
    assert tc.cnot_cost("aapccc", "deferred", "lnn")["total"] == 45
    audit = tc.audit_cost("pcc", "deferred", "full")
    assert audit["formula"] == audit["emitted"]


def test_exact_clones():
    rhos = tc.clone_densities("pccc", "deferred", "lnn", theta_y=0.4, theta_z=2.0)
    assert len(rhos) == 3
    for rho in rhos:
        assert rho.shape == (2, 2)
        assert tc.fidelity_pure(0.4, 2.0, rho) == pytest.approx(7 / 9, abs=1e-9)


def test_sweep_exact_and_sampled():
    exact = tc.sweep("apcc", grid="3x3")
    assert len(exact) == 18
    assert all(abs(r["fidelity"] - 5 / 6) < 1e-9 for r in exact)
    a = tc.sweep("pcc", grid="2x2", shots=3000, seed=4)
    b = tc.sweep("pcc", grid="2x2", shots=3000, seed=4)
    assert a == b
    assert tc.mean_fidelity(a) == pytest.approx(5 / 6, abs=0.03)


def test_postselect():
    recs = tc.postselect("pcc", n_theta_y=3)
    first = {r["variant"]: r for r in recs if r["theta_y"] == 0.0}
    assert first["00"]["kept_proportion"] == pytest.approx(1 / 3)
    assert first["10"]["clone_fidelities"][0] == pytest.approx(0.5)


def test_export_roundtrip():
    text = tc.export_circuit("pcc", "deferred", dialect="qasm", theta_y=0.3)
    assert text.startswith("OPENQASM 2.0;")
    assert tc.roundtrip_circuit_text(text, "qasm") == text
    with pytest.raises(ValueError):
        tc.export_circuit("pcc", "feedforward", dialect="qasm")


def test_mle_and_mitigation():
    rho = tc.mle_fit(1.0, 1.0, 1.0)
    assert np.trace(rho).real == pytest.approx(1.0)
    assert np.linalg.eigvalsh(rho).min() > -1e-12
    eps = 0.1
    cal = np.array([[1 - eps, eps], [eps, 1 - eps]])
    q = tc.mitigate([900.0, 100.0], cal)
    assert q[0] == pytest.approx(1000.0, abs=1e-6)


def test_config_errors():
    with pytest.raises(tc.ConfigError):
        tc.sweep("pccccc")
    with pytest.raises(tc.ConfigError):
        tc.sweep("pcc", noise={"bogus": 1})
    assert math.isfinite(tc.sweep("pcc", grid="1x1", noise={"p2": 0.01})[0]["fidelity"])
