"""Summation kernels for the lattice series.

Each kernel exists twice: a numba loop with Neumaier compensation, and a
numpy version that builds the term array and hands it to ``math.fsum``
(correctly rounded). :data:`USE_NUMBA` picks the default; both are importable
directly for testing and benchmarking.

All kernels sum ``n = 1 .. N`` in ascending order.
"""

from __future__ import annotations

import math

import numpy as np

from ._accel import USE_NUMBA, njit

__all__ = [
    "USE_NUMBA",
    "shifted_power_sum",
    "potential_sum",
    "shifted_power_sum_numba",
    "potential_sum_numba",
    "shifted_power_sum_numpy",
    "potential_sum_numpy",
]

# numpy path materialises terms in blocks to bound memory at N ~ 1e7
_BLOCK = 1 << 20


@njit(cache=False, nogil=True)
def shifted_power_sum_numba(shift, power, n_terms):
    total = 0.0
    comp = 0.0
    for n in range(1, n_terms + 1):
        term = 1.0 / (n - shift) ** power
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
    return total + comp


@njit(cache=False, nogil=True)
def potential_sum_numba(x, n_terms):
    # 1/(n - x) - 1/n written without cancellation
    total = 0.0
    comp = 0.0
    for n in range(1, n_terms + 1):
        term = x / (n * (n - x))
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
    return total + comp


def _blocks(n_terms: int):
    for start in range(1, n_terms + 1, _BLOCK):
        yield np.arange(start, min(start + _BLOCK, n_terms + 1), dtype=np.float64)


def shifted_power_sum_numpy(shift: float, power: int, n_terms: int) -> float:
    parts = []
    for n in _blocks(n_terms):
        parts.append(math.fsum((1.0 / (n - shift) ** power).tolist()))
    return math.fsum(parts)


def potential_sum_numpy(x: float, n_terms: int) -> float:
    parts = []
    for n in _blocks(n_terms):
        parts.append(math.fsum((x / (n * (n - x))).tolist()))
    return math.fsum(parts)


def shifted_power_sum(shift: float, power: int, n_terms: int) -> float:
    """``sum_{n=1}^{N} (n - shift)^(-power)``."""
    if USE_NUMBA:
        return float(shifted_power_sum_numba(float(shift), int(power), int(n_terms)))
    return shifted_power_sum_numpy(float(shift), int(power), int(n_terms))


def potential_sum(x: float, n_terms: int) -> float:
    """``sum_{n=1}^{N} (1/(n - x) - 1/n)``."""
    if USE_NUMBA:
        return float(potential_sum_numba(float(x), int(n_terms)))
    return potential_sum_numpy(float(x), int(n_terms))
