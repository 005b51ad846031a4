"""Numerical checks of the integral proof of psi(x) - psi(1-x) = -pi cot(pi x).

Every integral over (0, inf) is folded onto (0, 1) with ``t -> 1/t`` before
quadrature, so the tanh-sinh rule only ever meets endpoint behaviour:
``t^-x`` growth at 0 and the (removable or Lorentzian) structure at 1.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

import numpy as np

from ._accel import max_workers
from .quadrature import (
    QuadratureResult,
    UnitNodes,
    integrate_halfline,
    integrate_segment,
    tanh_sinh,
)
from .reports import GridReport
from .series import EULER_GAMMA

__all__ = [
    "digamma_integral",
    "phi_unit_interval",
    "phi_principal_value",
    "phi_epsilon",
    "log_kernel_integral",
    "fubini_inner_integral",
    "fubini_closed_form",
    "fubini_inner_check",
    "plemelj_sweep",
    "phi_derivative",
    "ode_residual",
    "reflection_closed_form_check",
    "representation_check",
    "product_identity_check",
    "closed_form_phi",
    "grid_from_spec",
]

_LN2 = math.log(2.0)


def _check_open_unit(x: float) -> float:
    x = float(x)
    if not 0.0 < x < 1.0:
        raise ValueError(f"x must lie strictly inside (0, 1), got {x!r}")
    return x


def closed_form_phi(x: float) -> float:
    return -math.pi * math.cos(math.pi * x) / math.sin(math.pi * x)


def _map_grid(fn: Callable[[float], float], points: Sequence[float]) -> list[float]:
    with ThreadPoolExecutor(max_workers()) as pool:
        return list(pool.map(fn, points))


def grid_from_spec(spec: str) -> list[float]:
    """Parse ``start:stop:step``; stop is included when it lies on the lattice."""
    try:
        start, stop, step = (float(s) for s in spec.split(":"))
    except ValueError:
        raise ValueError(f"grid must look like start:stop:step, got {spec!r}") from None
    if step <= 0 or stop < start:
        raise ValueError(f"grid {spec!r} needs step > 0 and stop >= start")
    span = (stop - start) / step
    n = math.floor(span + 1e-9)
    points = [start + i * step for i in range(n + 1)]
    if abs(span - round(span)) <= 1e-9:
        points[-1] = stop
    return [round(p, 12) for p in points]


def digamma_integral(x: float) -> QuadratureResult:
    """``psi(1 - x) = -gamma + integral_0^1 (1 - t^-x) / (1 - t) dt`` for ``0 <= x < 1``."""
    x = float(x)
    if not 0.0 <= x < 1.0:
        raise ValueError(f"x must lie in [0, 1), got {x!r}")

    def f(nd: UnitNodes) -> np.ndarray:
        return -np.expm1(-x * nd.log_t) / nd.omt

    return tanh_sinh(f).shifted(-EULER_GAMMA)


def phi_unit_interval(x: float) -> QuadratureResult:
    """``phi(x) = integral_0^1 (t^-x - t^(x-1)) / (1 - t) dt``."""
    x = _check_open_unit(x)

    def f(nd: UnitNodes) -> np.ndarray:
        # t^-x - t^(x-1) = t^(x-1) expm1((1-2x) log t), exact near t = 1
        return np.exp((x - 1.0) * nd.log_t) * np.expm1((1.0 - 2.0 * x) * nd.log_t) / nd.omt

    return tanh_sinh(f)


def phi_principal_value(x: float) -> QuadratureResult:
    """``P integral_0^inf t^-x / (1 - t) dt``.

    The pole is excised symmetrically through the window (0, 2): there
    ``t^-x / (1-t) = (t^-x - 1)/(1-t) + 1/(1-t)`` and the second piece has zero
    principal value by odd symmetry about t = 1. The regular remainder on
    (2, inf) is folded onto (0, 1/2) with ``t = 1/y``.
    """
    x = _check_open_unit(x)

    def left(nd: UnitNodes) -> np.ndarray:
        return np.expm1(-x * nd.log_t) / nd.omt

    def right(nd: UnitNodes) -> np.ndarray:
        # t = 1 + s on (1, 2)
        return -np.expm1(-x * np.log1p(nd.t)) / nd.t

    def tail(nd: UnitNodes) -> np.ndarray:
        # integral_2^inf t^-x/(1-t) dt = -integral_0^{1/2} y^(x-1)/(1-y) dy,  y = u/2
        return -0.5 * np.exp((x - 1.0) * (nd.log_t - _LN2)) / (1.0 - 0.5 * nd.t)

    return tanh_sinh(left) + tanh_sinh(right) + tanh_sinh(tail)


def phi_epsilon(x: float, eps: float, sign: str = "minus") -> QuadratureResult:
    """``integral_0^inf t^-x / (1 - t - i s eps) dt`` with ``s = +1`` for ``sign="minus"``.

    ``sign`` names the sign in front of ``i eps`` in the denominator, so
    ``"minus"`` tends to ``phi(x) + i pi`` and ``"plus"`` to ``phi(x) - i pi``.
    """
    x = _check_open_unit(x)
    if not 0.0 < eps <= 0.1:
        raise ValueError(f"eps must lie in (0, 0.1], got {eps!r}")
    if sign not in ("minus", "plus"):
        raise ValueError(f"sign must be 'minus' or 'plus', got {sign!r}")
    ie = 1j * eps * (1.0 if sign == "minus" else -1.0)

    def f(nd: UnitNodes) -> np.ndarray:
        direct = np.exp(-x * nd.log_t) / (nd.omt - ie)
        # (1, inf) folded by t = 1/y: -y^(x-1) / (1 - y + i s eps y)
        folded = -np.exp((x - 1.0) * nd.log_t) / (nd.omt + ie * nd.t)
        return direct + folded

    return tanh_sinh(f, max_evals=1 << 22)


def log_kernel_integral(x: float) -> QuadratureResult:
    """``I(x) = integral_0^inf t^-x log(t) / (1 - t) dt`` (no principal value needed)."""
    x = _check_open_unit(x)

    def f(nd: UnitNodes) -> np.ndarray:
        # folding (1, inf) adds the t^(x-1) branch
        kernel = nd.log_t / nd.omt
        return (np.exp(-x * nd.log_t) + np.exp((x - 1.0) * nd.log_t)) * kernel

    return tanh_sinh(f)


def fubini_closed_form(y: float) -> float:
    """``-log(y) / (1 - y)``, the eps -> 0 value of the inner t-integral."""
    if y <= 0:
        raise ValueError("y must be positive")
    if y == 1.0:
        raise ValueError("y = 1 is degenerate; the limit there is 1")
    return -math.log(y) / (1.0 - y)


def fubini_inner_integral(y: float, eps: float) -> QuadratureResult:
    """``integral_0^inf dt / ((1 - t + i eps)(t - y - i eps t))`` by quadrature.

    The range is cut at the two near-poles t = 1 and t = y so that both sit
    at segment endpoints, where the node density follows them.
    """
    y = float(y)
    if not y > 0:
        raise ValueError(f"y must be positive, got {y!r}")
    if abs(y - 1.0) < 1e-12:
        raise ValueError("y = 1 is degenerate; the limit there is 1")
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    ie = 1j * eps
    lo, hi = min(1.0, y), max(1.0, y)

    def integrand(t, one_minus_t, t_minus_y):
        return 1.0 / ((one_minus_t + ie) * (t_minus_y - ie * t))

    def offsets(a, b):
        def g(t, dl, dr):
            one_minus_t = -dl if a == 1.0 else (dr if b == 1.0 else 1.0 - t)
            t_minus_y = dl if a == y else (-dr if b == y else t - y)
            return integrand(t, one_minus_t, t_minus_y)

        return g

    def tail(t, dl):
        return integrand(t, -dl if hi == 1.0 else 1.0 - t, dl if hi == y else t - y)

    kw = {"max_evals": 1 << 22}
    return (
        integrate_segment(offsets(0.0, lo), 0.0, lo, **kw)
        + integrate_segment(offsets(lo, hi), lo, hi, **kw)
        + integrate_halfline(tail, hi, **kw)
    )


def fubini_inner_check(y: float, eps_list: Iterable[float]) -> GridReport:
    """Residual ``|J(eps) - (-log y / (1 - y))|`` for each eps."""
    eps_values = [float(e) for e in eps_list]
    target = fubini_closed_form(y)
    residuals = _map_grid(lambda e: abs(fubini_inner_integral(y, e).value - target), eps_values)
    return GridReport.build(eps_values, residuals, y=y, closed_form=target)


def plemelj_sweep(x: float, eps_list: Iterable[float], sign: str = "minus") -> GridReport:
    """Residuals ``|phi_eps(x) - (phi(x) +/- i pi)|`` along an eps sweep.

    ``extra`` carries the real and imaginary deviations separately.
    """
    eps_values = [float(e) for e in eps_list]
    phi = phi_principal_value(x).value_real
    target = complex(phi, math.pi if sign == "minus" else -math.pi)
    values = _map_grid(lambda e: complex(phi_epsilon(x, e, sign).value), eps_values)
    return GridReport.build(
        eps_values,
        [abs(v - target) for v in values],
        x=x,
        sign=sign,
        real_residuals=[abs(v.real - target.real) for v in values],
        imag_residuals=[abs(v.imag - target.imag) for v in values],
    )


def phi_derivative(x: float, h: float = 1e-3) -> float:
    """Central difference of ``phi`` with one Richardson step (h, h/2)."""

    def central(step: float) -> float:
        return (phi_unit_interval(x + step).value_real - phi_unit_interval(x - step).value_real) / (2 * step)

    d_h = central(h)
    d_h2 = central(h / 2)
    return (4.0 * d_h2 - d_h) / 3.0


def ode_residual(grid: Iterable[float], h: float = 1e-3) -> GridReport:
    """``|phi'(x) - pi^2 - phi(x)^2|`` on a grid inside [0.2, 0.8]."""
    points = [float(x) for x in grid]
    for x in points:
        if not 0.2 - 1e-12 <= x <= 0.8 + 1e-12:
            raise ValueError(f"grid point {x!r} outside [0.2, 0.8]")
    if not 1e-6 <= h <= 1e-2:
        raise ValueError(f"h must lie in [1e-6, 1e-2], got {h!r}")

    def residual(x: float) -> float:
        phi = phi_unit_interval(x).value_real
        return abs(phi_derivative(x, h) - math.pi**2 - phi**2)

    return GridReport.build(points, _map_grid(residual, points), h=h)


def _check_interior(points: Sequence[float], margin: float = 0.05) -> None:
    for x in points:
        if not margin - 1e-12 <= x <= 1.0 - margin + 1e-12:
            raise ValueError(f"grid point {x!r} is closer than {margin} to 0 or 1")


def reflection_closed_form_check(grid: Iterable[float]) -> GridReport:
    """``|phi(x) + pi cot(pi x)|`` with phi from the principal-value form."""
    points = [float(x) for x in grid]
    _check_interior(points)
    residuals = _map_grid(lambda x: abs(phi_principal_value(x).value_real - closed_form_phi(x)), points)
    return GridReport.build(points, residuals)


def representation_check(grid: Iterable[float]) -> GridReport:
    """Pointwise gap between the principal-value and unit-interval forms of phi."""
    points = [float(x) for x in grid]
    _check_interior(points)
    residuals = _map_grid(
        lambda x: abs(phi_principal_value(x).value_real - phi_unit_interval(x).value_real), points
    )
    return GridReport.build(points, residuals)


def product_identity_check(grid: Iterable[float]) -> GridReport:
    """``|-I(x) - pi^2 - phi(x)^2|`` with I the log-kernel integral."""
    points = [float(x) for x in grid]
    _check_interior(points)

    def residual(x: float) -> float:
        phi = phi_unit_interval(x).value_real
        return abs(-log_kernel_integral(x).value_real - math.pi**2 - phi**2)

    return GridReport.build(points, _map_grid(residual, points))
