import math

import numpy as np
import pytest

import aptx


def test_spec_and_repr():
    s = aptx.spec("aptx")
    assert s.kind == "aptx"
    assert "aptx" in repr(s)
    with pytest.raises(ValueError):
        aptx.spec("gelu")
    with pytest.raises(ValueError):
        aptx.spec("aptx", beta=0.0)


def test_scalar_values():
    assert aptx.eval(aptx.spec("sigmoid"), 0.0) == pytest.approx(0.5, abs=1e-15)
    assert aptx.eval(aptx.spec("mish"), 1.0) == pytest.approx(
        0.8650983882673103, abs=1e-14
    )
    value, grad = aptx.eval_grad(aptx.spec("aptx"), 0.0)
    assert value == 0.0
    assert grad == 0.5


def test_batch_matches_scalar():
    s = aptx.spec("mish")
    xs = np.linspace(-6.0, 6.0, 101)
    values = aptx.eval_batch(s, xs)
    grads = aptx.grad_batch(s, xs)
    assert values.shape == xs.shape
    for x, v, g in zip(xs, values, grads):
        ev, eg = aptx.eval_grad(s, float(x))
        assert v == ev  # batch path is bit-identical to scalar
        assert g == eg


def test_swish_identity():
    sw = aptx.spec("swish", rho=2.0)
    ap = aptx.spec("aptx", alpha=1.0, beta=1.0, gamma=0.5)
    xs = np.linspace(-20.0, 20.0, 2001)
    diff = np.max(np.abs(aptx.eval_batch(sw, xs) - aptx.eval_batch(ap, xs)))
    assert diff <= 1e-12


def test_find_min_pins():
    r = aptx.find_min(aptx.spec("mish"), -10.0, 0.0)
    assert r["argmin"] == pytest.approx(-1.1924312145154952, abs=1e-6)
    assert r["min_value"] == pytest.approx(-0.30884341301725041, abs=1e-6)


def test_count_ops_dominance():
    ap = aptx.count_ops(aptx.spec("aptx"))
    mi = aptx.count_ops(aptx.spec("mish"))
    assert ap["forward"]["transcendental_total"] == 1
    assert mi["forward"]["transcendental_total"] == 3
    assert (
        ap["derivative"]["transcendental_total"]
        < mi["derivative"]["transcendental_total"]
    )


def test_compare_split():
    rep = aptx.compare(aptx.spec("aptx"), aptx.spec("mish"), -1.0, 1.0, 0.5)
    assert rep["n_samples"] == 5
    assert rep["negative"]["n_samples"] == 2
    assert rep["positive"]["n_samples"] == 3


def test_mish_closed_form():
    s = aptx.spec("mish")
    for x in np.linspace(-15.0, 15.0, 61):
        _, g = aptx.eval_grad(s, float(x))
        assert aptx.mish_grad_closed_form(float(x)) == pytest.approx(g, abs=1e-9)
    with pytest.raises(ValueError):
        aptx.mish_grad_closed_form(500.0)


def test_verify_subset_passes():
    checks = aptx.verify("swish-identity")
    assert len(checks) == 2
    assert all(passed for _, passed, _ in checks)
