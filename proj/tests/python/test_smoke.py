# SPDX-License-Identifier: Apache-2.0
import json

import numpy as np
import pytest

import hjd


def exact_sets(n, rng, unitary=True):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    if unitary:
        a, _ = np.linalg.qr(a)
    ms = [a @ np.diag(rng.standard_normal(n) + 1j * rng.standard_normal(n)) @ a.conj().T for _ in range(3)]
    ns = [a @ np.diag(rng.standard_normal(n) + 1j * rng.standard_normal(n)) @ a.T for _ in range(3)]
    return a, ms, ns


def test_co_hjd_exact():
    rng = np.random.default_rng(1)
    a, ms, ns = exact_sets(4, rng)
    out = hjd.co_hjd(ms, ns, mixing=a)
    assert out["converged"]
    assert out["sweeps"][-1]["pi"] < 1e-10
    v = out["V"]
    assert np.allclose(v.conj().T @ v, np.eye(4), atol=1e-12)
    assert hjd.jd_cost(ms, ns, v) < 1e-18


def test_h_cjdi_nonorthogonal():
    rng = np.random.default_rng(2)
    a, ms, ns = exact_sets(4, rng, unitary=False)
    out = hjd.h_cjdi(ms, ns, mixing=a)
    assert out["sweeps"][-1]["pi"] < 1e-6


def test_metrics():
    assert hjd.performance_index(np.eye(3)) == 0.0
    assert hjd.performance_index(np.ones((2, 2))) == pytest.approx(1.0)
    assert hjd.modulus_of_uniqueness([[1, 0], [0, 1]]) == pytest.approx(0.0)


def test_errors_map_to_value_error():
    assert issubclass(hjd.HjdError, ValueError)
    with pytest.raises(hjd.HjdError):
        hjd.ro_hjd([np.eye(3)], [])
    with pytest.raises(ValueError):
        hjd.run_experiment("no-such-config")


def test_run_experiment_deterministic():
    assert "fig3" in hjd.builtin_config_names()
    a = hjd.run_experiment("fig4a", trials=2)
    b = hjd.run_experiment("fig4a", trials=2)
    assert a["results_csv"] == b["results_csv"]
    summary = json.loads(a["summary_json"])
    assert summary["config"]["trials"] == 2


def test_oracle_check():
    ok, detail = hjd.oracle_check("metrics", 3, 20)
    assert ok, detail
