"""Tangent, cotangent-expansion and Bernoulli numbers, exactly.

* ``T_n``: n-th derivative of ``tan x`` at 0.
* ``S_n``: n-th derivative of ``x cot x`` at 0.
* ``B_n``: Bernoulli numbers, from the tangent numbers or from Euler's
  quadratic recurrence.

Every table is built bottom-up from its seeds. Results are cached in
append-only memos so repeated requests only extend what is missing.
"""

from __future__ import annotations

import enum
import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .exact import binomial, format_rational, parse_rational

__all__ = [
    "Kind",
    "Route",
    "SequenceTable",
    "CotDerivativePoly",
    "MissingIndexError",
    "tangent_numbers",
    "cotangent_numbers",
    "tangent_from_cotangent",
    "bernoulli_from_tangent",
    "bernoulli_recurrence",
    "cot_derivative_poly",
]


class Kind(str, enum.Enum):
    TANGENT = "Tangent"
    COTANGENT = "Cotangent"
    BERNOULLI = "Bernoulli"


class Route(str, enum.Enum):
    RECURRENCE = "Recurrence"
    FROM_TANGENT = "FromTangent"


class MissingIndexError(KeyError):
    """A table was asked for an index it does not hold."""


@dataclass(frozen=True)
class SequenceTable:
    kind: Kind
    route: Route
    values: Mapping[int, Fraction] = field(default_factory=dict)

    def __getitem__(self, n: int) -> Fraction:
        try:
            return self.values[n]
        except KeyError:
            raise MissingIndexError(
                f"{self.kind.value} table ({self.route.value}) has no index {n}"
            ) from None

    def __contains__(self, n: object) -> bool:
        return n in self.values

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_index(self) -> int:
        return max(self.values) if self.values else -1

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "route": self.route.value,
            "values": {str(n): format_rational(v) for n, v in sorted(self.values.items())},
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping) -> "SequenceTable":
        values = {int(n): parse_rational(v) for n, v in data["values"].items()}
        return cls(Kind(data["kind"]), Route(data["route"]), values)

    @classmethod
    def from_json(cls, text: str) -> "SequenceTable":
        return cls.from_dict(json.loads(text))


class _Memo:
    """Append-only list of sequence values extended on demand."""

    def __init__(self, seeds: list, step: Callable[[list], object]) -> None:
        self._values = list(seeds)
        self._step = step
        self._lock = threading.Lock()

    def upto(self, n: int) -> list:
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._step(self._values))
            return self._values[: n + 1]


def _tangent_step(t: list[int]) -> int:
    # T_n = sum_{r=0}^{n-1} C(n-1, r) T_r T_{n-1-r}, only odd r contribute
    n = len(t)
    if n % 2 == 0:
        return 0
    return sum(binomial(n - 1, r) * t[r] * t[n - 1 - r] for r in range(1, n - 1, 2))


def _cotangent_step(s: list[Fraction]) -> Fraction:
    # n-th derivative at 0 of  x (x cot x)' = x cot x - x^2 cot^2 x - x^2
    # gives (n+1) S_n = -sum_{r=1}^{n-1} C(n,r) S_r S_{n-r} - 2 [n == 2]
    n = len(s)
    if n % 2 == 1:
        return Fraction(0)
    acc = sum(
        (binomial(n, r) * s[r] * s[n - r] for r in range(2, n - 1, 2)),
        Fraction(0),
    )
    if n == 2:
        acc += 2
    return -acc / (n + 1)


_TANGENT = _Memo([0, 1], _tangent_step)
_COTANGENT = _Memo([Fraction(1), Fraction(0)], _cotangent_step)


def _tangent_list(max_index: int) -> list[int]:
    return _TANGENT.upto(max_index)


def _cotangent_list(max_index: int) -> list[Fraction]:
    return _COTANGENT.upto(max_index)


def tangent_numbers(max_index: int) -> SequenceTable:
    """Table of ``T_0 .. T_max_index`` (integers stored as Fractions)."""
    if max_index < 0:
        raise ValueError("max_index must be non-negative")
    values = {n: Fraction(v) for n, v in enumerate(_tangent_list(max_index))}
    return SequenceTable(Kind.TANGENT, Route.RECURRENCE, values)


def cotangent_numbers(max_index: int) -> SequenceTable:
    """Table of ``S_0 .. S_max_index``, the Taylor data of ``x cot x`` at 0."""
    if max_index < 0:
        raise ValueError("max_index must be non-negative")
    values = dict(enumerate(_cotangent_list(max_index)))
    return SequenceTable(Kind.COTANGENT, Route.RECURRENCE, values)


def tangent_from_cotangent(k: int, table: SequenceTable) -> Fraction:
    """``T_{2k-1} = -(2^{2k} - 1) / (2k) * S_{2k}``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    s = table[2 * k]
    return -Fraction(4**k - 1, 2 * k) * s


def bernoulli_from_tangent(n: int, tangent: SequenceTable) -> Fraction:
    """``B_n = -n T_{n-1} / ((2i)^n (2^n - 1))`` for ``n >= 2``, in real form."""
    if n < 2:
        raise ValueError(f"tangent-number formula for B_n needs n >= 2, got {n}")
    t = tangent[n - 1]
    if n % 2 == 1:
        return Fraction(0)
    m = n // 2
    # (2i)^{2m} = (-1)^m 4^m
    sign = 1 if m % 2 == 1 else -1
    return sign * Fraction(n, 4**m * (4**m - 1)) * t


def bernoulli_recurrence(max_n: int, seed_B2: Fraction | None = None) -> SequenceTable:
    """``B_2 .. B_{2 max_n}`` from ``(2n+1) B_{2n} = -sum C(2n,2m) B_{2m} B_{2n-2m}``.

    The recurrence has an empty right-hand side at ``n = 1``, so ``B_2`` is a
    seed. By default it is taken from :func:`bernoulli_from_tangent`.
    """
    if max_n < 1:
        raise ValueError("max_n must be positive")
    if seed_B2 is None:
        seed_B2 = bernoulli_from_tangent(2, tangent_numbers(1))
    b = {1: Fraction(seed_B2)}  # keyed by half-index m -> B_{2m}
    for n in range(2, max_n + 1):
        acc = sum(
            (binomial(2 * n, 2 * m) * b[m] * b[n - m] for m in range(1, n)),
            Fraction(0),
        )
        b[n] = -acc / (2 * n + 1)
    values = {2 * m: v for m, v in b.items()}
    return SequenceTable(Kind.BERNOULLI, Route.RECURRENCE, values)


def bernoulli_table_from_tangent(max_index: int) -> SequenceTable:
    """``B_2 .. B_max_index`` (odd entries zero) via the tangent numbers."""
    tangent = tangent_numbers(max(max_index - 1, 1))
    values = {n: bernoulli_from_tangent(n, tangent) for n in range(2, max_index + 1)}
    return SequenceTable(Kind.BERNOULLI, Route.FROM_TANGENT, values)


@dataclass(frozen=True)
class CotDerivativePoly:
    """``d^n/dx^n cot(pi x) = pi^n * sum_j coefficients[j] * cot(pi x)^j``."""

    order: int
    coefficients: tuple[int, ...]

    def constant(self) -> int:
        return self.coefficients[0] if self.coefficients else 0

    def __call__(self, c: float) -> float:
        """Evaluate the integer polynomial at ``c = cot(pi x)`` (Horner)."""
        acc = 0.0
        for coeff in reversed(self.coefficients):
            acc = acc * c + coeff
        return acc


def _cot_poly_step(p: list[int]) -> list[int]:
    # P_{n+1}(c) = -(1 + c^2) P_n'(c)
    dp = [j * p[j] for j in range(1, len(p))]
    out = [0] * (len(dp) + 2)
    for j, a in enumerate(dp):
        out[j] -= a
        out[j + 2] -= a
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


_COT_POLYS = _Memo([[0, 1]], lambda ps: _cot_poly_step(ps[-1]))


def cot_derivative_poly(n: int) -> CotDerivativePoly:
    if n < 0:
        raise ValueError("derivative order must be non-negative")
    return CotDerivativePoly(n, tuple(_COT_POLYS.upto(n)[n]))
