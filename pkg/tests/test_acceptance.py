"""Exit criteria for the package. Each test records one PASS/FAIL line,
printed in the terminal summary under "acceptance criteria".

Run alone with ``pytest tests/test_acceptance.py``.
"""

import json
import math
import os
import subprocess
import sys
import textwrap

import pytest

from zeta_forge.reflection import (
    fubini_inner_check,
    grid_from_spec,
    plemelj_sweep,
    product_identity_check,
    reflection_closed_form_check,
    representation_check,
    ode_residual,
)
from zeta_forge.sequences import bernoulli_recurrence, bernoulli_table_from_tangent, tangent_numbers
from zeta_forge.series import coulomb_force, partial_zeta_sum, polygamma_series
from zeta_forge.zeta import polygamma_half_exact

PI = math.pi
EPS_SWEEP = [1e-1, 1e-2, 1e-3, 1e-4]

# |Im(phi_eps) - pi| for sign "minus", computed with mpmath.quad on the unfolded
# integral over (0, inf) at 30 digits (split at 1, 1 +/- eps, 1 +/- 50 eps, 2)
PLEMELJ_FIXTURES = {
    0.3: [0.0742238381845, 0.00690841797814, 0.000685362469497, 6.84811458195e-5],
    0.5: [0.0116957721113, 0.000117801134926, 1.17809638607e-6, 1.17809723651e-8],
    0.7: [0.140025061263, 0.0157893733025, 0.00159587999943, 0.00015975635308],
}


def _cold_run(code: str) -> dict:
    """Run ``code`` in a fresh interpreter (empty memo caches); it prints JSON."""
    out = subprocess.run([sys.executable, "-c", textwrap.dedent(code)],
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def test_exact_goldens(record_criterion):
    res = _cold_run("""
        import json, time
        from zeta_forge.zeta import zeta_validated
        from zeta_forge.exact import format_rational
        t = time.perf_counter()
        coeffs = [format_rational(zeta_validated(k).coeff) for k in range(1, 7)]
        print(json.dumps({"coeffs": coeffs, "seconds": time.perf_counter() - t}))
    """)
    expected = ["1/6", "1/90", "1/945", "1/9450", "1/93555", "691/638512875"]
    ok = res["coeffs"] == expected and res["seconds"] < 1.0
    assert record_criterion("exact zeta goldens k=1..6, < 1 s", ok, f"{res['seconds']:.3f} s")


def test_tangent_goldens(record_criterion):
    t = tangent_numbers(11)
    got = [t[n] for n in (3, 5, 7, 9, 11)]
    ok = got == [2, 16, 272, 7936, 353792]
    assert record_criterion("tangent goldens T_3..T_11", ok, str([int(v) for v in got]))


def test_four_route_equivalence(record_criterion):
    res = _cold_run("""
        import json, time
        from zeta_forge.zeta import (zeta_via_tangent, zeta_via_cotangent,
            zeta_via_self_recurrence, zeta_via_bernoulli)
        t = time.perf_counter()
        bad = []
        for k in range(1, 101):
            vals = {f(k).coeff for f in (zeta_via_tangent, zeta_via_cotangent,
                                         zeta_via_self_recurrence, zeta_via_bernoulli)}
            if len(vals) != 1:
                bad.append(k)
        print(json.dumps({"bad": bad, "seconds": time.perf_counter() - t}))
    """)
    ok = res["bad"] == [] and res["seconds"] < 30.0
    assert record_criterion("four zeta routes agree exactly, k=1..100, < 30 s", ok, f"{res['seconds']:.2f} s")


def test_bernoulli_route_equivalence(record_criterion):
    rec = bernoulli_recurrence(50)
    tan = bernoulli_table_from_tangent(100)
    ok = all(rec[2 * n] == tan[2 * n] for n in range(1, 51))
    assert record_criterion("Bernoulli recurrence == tangent route, B_2..B_100", ok)


def test_series_convergence(record_criterion):
    basel = partial_zeta_sum(1, 10**6)
    force = coulomb_force(0.5, 10**6)
    ok = basel.contains(PI**2 / 6) and basel.width < 2e-6 and force.contains(PI**2 / 2)
    assert record_criterion("series brackets contain pi^2/6 and pi^2/2 (N=1e6)", ok,
                            f"bracket width {basel.width:.2e}")


def test_polygamma_check(record_criterion):
    ref = polygamma_half_exact(2).to_float()
    err = abs(polygamma_series(2, 0.5, 10**3).value_estimate - ref)
    assert record_criterion("psi_3(1/2) series within 1e-8 of pi^4 (N=1e3)", err <= 1e-8, f"err {err:.2e}")


def test_reflection_closed_form(record_criterion):
    grid = grid_from_spec("0.1:0.9:0.05")
    closed = reflection_closed_form_check(grid).max_abs_residual
    agree = representation_check(grid).max_abs_residual
    ok = closed <= 1e-8 and agree <= 1e-8
    assert record_criterion("phi_PV + pi cot(pi x) <= 1e-8; PV == unit-interval form <= 1e-8", ok,
                            f"{closed:.2e}, {agree:.2e}")


def test_ode(record_criterion):
    r = ode_residual(grid_from_spec("0.2:0.8:0.05"), 1e-3).max_abs_residual
    assert record_criterion("phi' - pi^2 - phi^2 <= 1e-4 (h=1e-3, Richardson)", r <= 1e-4, f"{r:.2e}")


def test_product_identity(record_criterion):
    r = product_identity_check(grid_from_spec("0.2:0.8:0.05")).max_abs_residual
    assert record_criterion("-I(x) - pi^2 - phi^2 <= 1e-7", r <= 1e-7, f"{r:.2e}")


def test_plemelj_sweep(record_criterion):
    ok = True
    worst_fixture_gap = 0.0
    for x, frozen in PLEMELJ_FIXTURES.items():
        imag = plemelj_sweep(x, EPS_SWEEP).extra["imag_residuals"]
        ok &= all(b < a for a, b in zip(imag, imag[1:]))
        ok &= imag[-1] <= 0.05
        for got, want in zip(imag, frozen):
            worst_fixture_gap = max(worst_fixture_gap, abs(got - want) / want)
    ok &= worst_fixture_gap <= 1e-6
    assert record_criterion("|Im phi_eps - pi| strictly decreasing, <= 0.05 at eps=1e-4, matches fixtures",
                            ok, f"max rel. fixture gap {worst_fixture_gap:.1e}")


def test_fubini_inner(record_criterion):
    ok = True
    worst = 0.0
    for y in (0.5, 2.0, 5.0):
        res = fubini_inner_check(y, EPS_SWEEP).residuals
        ok &= all(b < a for a, b in zip(res, res[1:]))
        ok &= res[-1] <= 1e-2
        worst = max(worst, res[-1])
    assert record_criterion("Fubini inner integral -> -ln y/(1-y), <= 1e-2 at eps=1e-4, improving", ok,
                            f"worst {worst:.2e}")


@pytest.mark.parametrize("cmd", ["verify-series", "verify-reflection", "verify-pv",
                                 "verify-plemelj", "verify-ode", "verify-fubini"])
def test_cli_verification_headless(record_criterion, cmd):
    out = subprocess.run([sys.executable, "-m", "zeta_forge", cmd], capture_output=True, text=True,
                         env=dict(os.environ))
    data = json.loads(out.stdout)
    ok = out.returncode == 0 and data["passed"]
    assert record_criterion(f"CLI {cmd} exits 0", ok, f"max residual {data['max_abs_residual']:.2e}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
