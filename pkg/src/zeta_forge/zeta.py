"""Exact even zeta values ``zeta(2k) = coeff * pi^(2k)`` along four routes."""

from __future__ import annotations

import enum
import json
import math
import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import factorial, format_rational, parse_rational
from .sequences import (
    _cotangent_list,
    _tangent_list,
    bernoulli_from_tangent,
    bernoulli_recurrence,
    tangent_numbers,
)

__all__ = [
    "ZetaRoute",
    "ZetaValue",
    "PiMonomial",
    "RouteDisagreementError",
    "DEFAULT_VALIDATED_DEPTH",
    "zeta_via_tangent",
    "zeta_via_cotangent",
    "zeta_via_self_recurrence",
    "zeta_via_bernoulli",
    "zeta_validated",
    "polygamma_half_exact",
    "parse_pi_monomial",
]

DEFAULT_VALIDATED_DEPTH = 100


class ZetaRoute(str, enum.Enum):
    TANGENT = "Tangent"
    COTANGENT = "Cotangent"
    SELF_RECURRENCE = "SelfRecurrence"
    BERNOULLI = "Bernoulli"
    VALIDATED = "Validated"


class RouteDisagreementError(ArithmeticError):
    """Two zeta routes produced different exact coefficients."""


_PI_RE = re.compile(r"^\s*(\S+)\s*\*\s*pi\^(\d+)\s*$")


@dataclass(frozen=True)
class PiMonomial:
    coeff: Fraction
    pi_power: int

    def __str__(self) -> str:
        return f"{format_rational(self.coeff)} * pi^{self.pi_power}"

    def to_float(self) -> float:
        return float(self.coeff) * math.pi**self.pi_power


def parse_pi_monomial(text: str) -> PiMonomial:
    m = _PI_RE.match(text)
    if m is None:
        raise ValueError(f"expected 'p/q * pi^n', got {text!r}")
    return PiMonomial(parse_rational(m.group(1)), int(m.group(2)))


@dataclass(frozen=True)
class ZetaValue:
    """``zeta(2k) = coeff * pi^(2k)``; equality ignores the route tag."""

    k: int
    coeff: Fraction
    route: ZetaRoute = field(default=ZetaRoute.VALIDATED, compare=False)

    @property
    def pi_power(self) -> int:
        return 2 * self.k

    def __str__(self) -> str:
        return str(PiMonomial(self.coeff, self.pi_power))

    def to_float(self) -> float:
        return float(self.coeff) * math.pi**self.pi_power

    def to_dict(self, routes_agreed: bool | None = None) -> dict:
        if routes_agreed is None:
            routes_agreed = self.route is ZetaRoute.VALIDATED
        return {
            "k": self.k,
            "coeff": format_rational(self.coeff),
            "pi_power": self.pi_power,
            "routes_agreed": routes_agreed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def parse(cls, text: str, route: ZetaRoute = ZetaRoute.VALIDATED) -> "ZetaValue":
        mono = parse_pi_monomial(text)
        if mono.pi_power == 0 or mono.pi_power % 2:
            raise ValueError(f"zeta(2k) needs an even positive power of pi: {text!r}")
        return cls(mono.pi_power // 2, mono.coeff, route)


def _check_k(k: int) -> None:
    if int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def zeta_via_tangent(k: int) -> ZetaValue:
    """``T_{2k-1} / (2 (2^{2k} - 1) (2k-1)!)``."""
    _check_k(k)
    t = _tangent_list(2 * k - 1)[2 * k - 1]
    coeff = Fraction(t, 2 * (4**k - 1) * factorial(2 * k - 1))
    return ZetaValue(k, coeff, ZetaRoute.TANGENT)


def zeta_via_cotangent(k: int) -> ZetaValue:
    """``-S_{2k} / (2 (2k)!)``."""
    _check_k(k)
    s = _cotangent_list(2 * k)[2 * k]
    return ZetaValue(k, -s / (2 * factorial(2 * k)), ZetaRoute.COTANGENT)


class _SelfRecurrence:
    """q_k from ``(k + 1/2) q_k = sum_{m=1}^{k-1} q_m q_{k-m}``, seeded with q_1."""

    def __init__(self) -> None:
        self._q: list[Fraction] = []
        self._lock = threading.Lock()

    def get(self, k: int) -> Fraction:
        with self._lock:
            if not self._q:
                self._q = [Fraction(0), zeta_via_tangent(1).coeff]
            q = self._q
            while len(q) <= k:
                n = len(q)
                acc = sum((q[m] * q[n - m] for m in range(1, n)), Fraction(0))
                q.append(acc / Fraction(2 * n + 1, 2))
            return q[k]


_SELF = _SelfRecurrence()


def zeta_via_self_recurrence(k: int) -> ZetaValue:
    _check_k(k)
    return ZetaValue(k, _SELF.get(k), ZetaRoute.SELF_RECURRENCE)


_BERNOULLI_LOCK = threading.Lock()
_bernoulli_cache: dict[int, Fraction] = {}


def _bernoulli_even(k: int) -> Fraction:
    """B_{2k} through the seeded quadratic recurrence (not the tangent formula)."""
    with _BERNOULLI_LOCK:
        if k not in _bernoulli_cache:
            size = max(k, 2 * max(_bernoulli_cache, default=0), 8)
            seed = bernoulli_from_tangent(2, tangent_numbers(1))
            table = bernoulli_recurrence(size, seed)
            _bernoulli_cache.update({n // 2: v for n, v in table.values.items()})
        return _bernoulli_cache[k]


def zeta_via_bernoulli(k: int) -> ZetaValue:
    """``(-1)^{k+1} 2^{2k} B_{2k} / (2 (2k)!)``."""
    _check_k(k)
    sign = 1 if k % 2 == 1 else -1
    coeff = sign * Fraction(4**k, 2 * factorial(2 * k)) * _bernoulli_even(k)
    return ZetaValue(k, coeff, ZetaRoute.BERNOULLI)


_ROUTES = (
    zeta_via_tangent,
    zeta_via_cotangent,
    zeta_via_self_recurrence,
    zeta_via_bernoulli,
)


def zeta_validated(k: int) -> ZetaValue:
    """Run every route and insist on exact agreement."""
    _check_k(k)
    results = [route(k) for route in _ROUTES]
    ref = results[0]
    for other in results[1:]:
        if other.coeff != ref.coeff:
            raise RouteDisagreementError(
                f"zeta({2 * k}): route {ref.route.value} gives {format_rational(ref.coeff)}"
                f" but route {other.route.value} gives {format_rational(other.coeff)}"
            )
    return ZetaValue(k, ref.coeff, ZetaRoute.VALIDATED)


def polygamma_half_exact(k: int) -> PiMonomial:
    """``psi_{2k-1}(1/2) = T_{2k-1} / 2 * pi^(2k)``."""
    _check_k(k)
    t = _tangent_list(2 * k - 1)[2 * k - 1]
    return PiMonomial(Fraction(t, 2), 2 * k)
