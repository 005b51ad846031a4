import math

import numpy as np
import pytest

from zeta_forge.quadrature import (
    QuadratureError,
    QuadratureResult,
    integrate_halfline,
    integrate_segment,
    tanh_sinh,
)


def test_polynomial():
    r = tanh_sinh(lambda nd: nd.t**3)
    assert r.value_real == pytest.approx(0.25, abs=1e-14)
    assert r.value_imag == 0.0 and r.evaluations > 0 and r.error_estimate >= 0


@pytest.mark.parametrize("a", [0.5, 0.1, 0.05])
def test_power_singularity_at_zero(a):
    # integral_0^1 t^(a-1) = 1/a
    r = tanh_sinh(lambda nd: np.exp((a - 1) * nd.log_t))
    assert r.value_real == pytest.approx(1 / a, rel=1e-12)


def test_log_singularity_at_one():
    r = tanh_sinh(lambda nd: nd.log_omt)
    assert r.value_real == pytest.approx(-1.0, abs=1e-13)


def test_complex_integrand():
    r = tanh_sinh(lambda nd: np.exp(1j * math.pi * nd.t))
    assert complex(r.value) == pytest.approx(2j / math.pi, abs=1e-14)


def test_segment_offsets():
    seen = {}

    def g(x, dl, dr):
        seen["ok"] = np.allclose(dl + dr, 2.0) and np.allclose(x - 1.0, dl)
        return x**2

    r = integrate_segment(g, 1.0, 3.0)
    assert seen["ok"]
    assert r.value_real == pytest.approx(26 / 3, rel=1e-13)


def test_halfline():
    r = integrate_halfline(lambda x, d: 1.0 / (1.0 + x**2), 1.0)
    assert r.value_real == pytest.approx(math.pi / 4, rel=1e-13)


def test_nonfinite_integrand_raises():
    with pytest.raises(QuadratureError):
        tanh_sinh(lambda nd: np.full_like(nd.t, np.nan))


def test_result_arithmetic():
    a = QuadratureResult(1.0, 2.0, 0.1, 10)
    b = QuadratureResult(0.5, -1.0, 0.2, 5)
    s = a + b
    assert (s.value_real, s.value_imag, s.evaluations) == (1.5, 1.0, 15)
    assert s.error_estimate == pytest.approx(0.3)
    assert a.scaled(-2).error_estimate == pytest.approx(0.2)
