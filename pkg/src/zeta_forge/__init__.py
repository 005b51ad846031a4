"""Exact even zeta values and numerical checks of the digamma reflection formula."""

from .exact import binomial, factorial, format_rational, parse_rational
from .sequences import (
    SequenceTable,
    bernoulli_from_tangent,
    bernoulli_recurrence,
    cot_derivative_poly,
    cotangent_numbers,
    tangent_from_cotangent,
    tangent_numbers,
)
from .zeta import (
    PiMonomial,
    RouteDisagreementError,
    ZetaValue,
    polygamma_half_exact,
    zeta_validated,
    zeta_via_bernoulli,
    zeta_via_cotangent,
    zeta_via_self_recurrence,
    zeta_via_tangent,
)

__version__ = "0.1.0"
