"""Real-argument special functions built directly on double precision.

Log-gamma and digamma shift their argument upward by recurrence until the
asymptotic (de Moivre / Stirling) series applies, the Hurwitz zeta function
is summed by Euler-Maclaurin, and polygamma values come from the zeta
connection psi^(m)(x) = (-1)^(m+1) m! zeta(m+1, x).  Derivatives of cot are
kept exact as integer-coefficient polynomials in c = cot x.

Every function here is a pure function of its arguments; there is no
shared mutable state, so concurrent callers need no coordination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "DomainError",
    "UnsupportedOrderError",
    "MAX_DERIVATIVE_ORDER",
    "CotPolynomial",
    "lgamma",
    "gamma_reflection_defect",
    "digamma",
    "hurwitz_zeta",
    "polygamma",
    "trigamma",
    "cot_derivative_poly",
    "cot_derivative",
]


class DomainError(ValueError):
    """Argument lies outside the real domain of the requested function."""


class UnsupportedOrderError(ValueError):
    """Requested derivative order is outside the supported range."""


#: Highest derivative order served by polygamma and the cot machinery.
#: Order 12 keeps every CotPolynomial coefficient well inside 64-bit range.
MAX_DERIVATIVE_ORDER = 12

# Bernoulli numbers B_2 .. B_16 as exact rationals.
# Source: OEIS A027641 / A027642 (numerators / denominators).
_BERNOULLI = {
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
}

_HALF_LN_TWO_PI = 0.9189385332046727  # ln(2*pi)/2

# Arguments below this are raised by recurrence before the asymptotic
# series is applied; at 12 the last retained term is already ~1e-18.
_ASYMPTOTIC_START = 12.0

# ln Gamma(x) ~ (x - 1/2) ln x - x + ln(2 pi)/2 + sum_k c_k x^(1-2k)
# with c_k = B_2k / (2k (2k-1)).
_LGAMMA_SERIES = tuple(
    float(_BERNOULLI[2 * k] / (2 * k * (2 * k - 1))) for k in range(1, 9)
)

# psi(x) ~ ln x - 1/(2x) - sum_k d_k x^(-2k) with d_k = B_2k / (2k).
_DIGAMMA_SERIES = tuple(float(_BERNOULLI[2 * k] / (2 * k)) for k in range(1, 8))

# Euler-Maclaurin corrections for the zeta tail: B_2j / (2j)!.
_ZETA_HEAD_TERMS = 16
_ZETA_SERIES = tuple(
    float(_BERNOULLI[2 * j] / math.factorial(2 * j)) for j in range(1, 7)
)

# Below this |sin x| a double-precision cot carries no information.
_COT_POLE_GUARD = 1e-12


def _require_positive(x: float, where: str) -> None:
    if math.isnan(x) or math.isinf(x) or x <= 0.0:
        raise DomainError(f"{where} requires a finite argument > 0, got {x!r}")


def _check_order(m: int, low: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or not (low <= m <= MAX_DERIVATIVE_ORDER):
        raise UnsupportedOrderError(
            f"derivative order must be an integer in [{low}, {MAX_DERIVATIVE_ORDER}], got {m!r}"
        )


def lgamma(x: float) -> float:
    """ln Gamma(x) for finite x > 0."""
    _require_positive(x, "lgamma")
    shift = 0.0
    y = x
    if y < _ASYMPTOTIC_START:
        logs = []
        while y < _ASYMPTOTIC_START:
            logs.append(math.log(y))
            y += 1.0
        shift = math.fsum(logs)
    r = 1.0 / (y * y)
    series = 0.0
    for c in reversed(_LGAMMA_SERIES):
        series = series * r + c
    series /= y
    return (y - 0.5) * math.log(y) - y + _HALF_LN_TWO_PI + series - shift


def gamma_reflection_defect(z: float) -> float:
    """lgamma(z) + lgamma(1-z) - ln(pi / sin(pi z)), zero in exact arithmetic.

    Computing both sides independently makes this a direct numeric probe
    of the reflection formula; callers assert it is ~0.
    """
    if not (0.0 < z < 1.0):
        raise DomainError(f"reflection defect is defined on (0, 1), got {z!r}")
    rhs = math.log(math.pi) - math.log(math.sin(math.pi * z))
    return lgamma(z) + lgamma(1.0 - z) - rhs


def digamma(x: float) -> float:
    """psi(x) = d/dx ln Gamma(x) for finite x > 0."""
    _require_positive(x, "digamma")
    y = x
    recips = []
    while y < _ASYMPTOTIC_START:
        recips.append(1.0 / y)
        y += 1.0
    r = 1.0 / (y * y)
    series = 0.0
    for d in reversed(_DIGAMMA_SERIES):
        series = series * r + d
    value = math.log(y) - 0.5 / y - series * r
    if recips:
        value -= math.fsum(recips)
    return value


def hurwitz_zeta(s: float, a: float) -> float:
    """zeta(s, a) = sum_{k>=0} (k + a)^(-s) for s > 1, a > 0.

    Direct sum of the first 16 terms, then an integral tail with
    Euler-Maclaurin corrections through B_12; good to ~1e-15 relative
    over the whole admissible domain.
    """
    if math.isnan(s) or math.isinf(s) or s <= 1.0:
        raise DomainError(f"hurwitz_zeta requires finite s > 1, got {s!r}")
    _require_positive(a, "hurwitz_zeta")
    head = math.fsum((k + a) ** -s for k in range(_ZETA_HEAD_TERMS))
    n = _ZETA_HEAD_TERMS + a
    pw = n**-s
    total = head + n * pw / (s - 1.0) + 0.5 * pw
    factor = pw / n
    rising = s  # s (s+1) ... (s + 2j - 2), extended as j advances
    corrections = 0.0
    for j, c in enumerate(_ZETA_SERIES, start=1):
        corrections += c * rising * factor
        factor /= n * n
        rising *= (s + (2 * j - 1)) * (s + 2 * j)
    return total + corrections


def polygamma(m: int, x: float) -> float:
    """psi^(m)(x) = (-1)^(m+1) m! zeta(m+1, x) for 1 <= m <= 12, x > 0."""
    _check_order(m, low=1)
    _require_positive(x, "polygamma")
    sign = 1.0 if m % 2 else -1.0
    return sign * math.factorial(m) * hurwitz_zeta(m + 1.0, x)


def trigamma(x: float) -> float:
    """psi'(x); identical to polygamma(1, x)."""
    return polygamma(1, x)


@dataclass(frozen=True)
class CotPolynomial:
    """d^order/dx^order cot x written as an integer polynomial in c = cot x.

    ``coeffs[k]`` is the coefficient of c**k.  The polynomial for order m
    has degree exactly m + 1 and contains only powers whose parity
    matches m + 1; both facts are enforced at construction time.
    """

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        degree = len(self.coeffs) - 1
        if degree != self.order + 1 or self.coeffs[-1] == 0:
            raise ValueError(
                f"order-{self.order} polynomial must have degree {self.order + 1}"
            )
        for k, coeff in enumerate(self.coeffs):
            if coeff != 0 and (degree - k) % 2 != 0:
                raise ValueError(
                    f"parity violation at c^{k} in the order-{self.order} polynomial"
                )

    def __call__(self, c: float) -> float:
        acc = 0.0
        for coeff in reversed(self.coeffs):
            acc = acc * c + coeff
        return acc


def _build_cot_polynomials() -> tuple[CotPolynomial, ...]:
    polys = [CotPolynomial(0, (0, 1))]
    for _ in range(MAX_DERIVATIVE_ORDER):
        prev = polys[-1].coeffs
        # dc/dx = -(1 + c^2), so if P represents the current derivative the
        # next one is -(1 + c^2) P'(c)
        deriv = [k * prev[k] for k in range(1, len(prev))]
        nxt = [0] * (len(deriv) + 2)
        for i, q in enumerate(deriv):
            nxt[i] -= q
            nxt[i + 2] -= q
        polys.append(CotPolynomial(polys[-1].order + 1, tuple(nxt)))
    return tuple(polys)


_COT_POLYNOMIALS = _build_cot_polynomials()


def cot_derivative_poly(m: int) -> CotPolynomial:
    """Exact polynomial (in cot x) form of the m-th derivative of cot."""
    _check_order(m, low=0)
    return _COT_POLYNOMIALS[m]


def cot_derivative(m: int, x: float) -> float:
    """m-th derivative of cot at x; x must stay clear of the poles of cot."""
    poly = cot_derivative_poly(m)
    if math.isnan(x) or math.isinf(x):
        raise DomainError(f"cot_derivative requires finite x, got {x!r}")
    s = math.sin(x)
    if abs(s) < _COT_POLE_GUARD:
        raise DomainError(f"x = {x!r} is within {_COT_POLE_GUARD} of a pole of cot")
    return poly(math.cos(x) / s)
