"""Independent reference computations used to pin expected test values.

Everything here deliberately avoids the algorithms used inside the
package: brute partial sums with a midpoint tail integral, finite
differences, and stdlib math only.  Oracle accuracy is noted next to
each helper so tests can budget their tolerances.
"""

import math


def euler_gamma(n_terms: int = 20_000) -> float:
    """Euler-Mascheroni constant from H_N - ln N, midpoint-corrected.

    Error is about 1/(120 N^4), far below 1e-15 at the default N.
    """
    harmonic = math.fsum(1.0 / k for k in range(1, n_terms + 1))
    return harmonic - math.log(n_terms) - 0.5 / n_terms + 1.0 / (12.0 * n_terms**2)


def zeta_partial(s: float, a: float = 1.0, n_terms: int = 40_000) -> float:
    """sum_{k>=0} (k+a)^(-s) by brute partial summation plus a tail integral.

    The tail uses the midpoint rule int_{N-1/2}^inf (x+a)^(-s) dx, whose
    error ~ s(s+1)/24 * N^(-s-1) stays below 1e-14 for s >= 2 at the
    default N.  No Bernoulli machinery, so it is independent of any
    Euler-Maclaurin implementation it may be used to check.
    """
    head = math.fsum((k + a) ** -s for k in range(n_terms))
    tail = (n_terms + a - 0.5) ** (1.0 - s) / (s - 1.0)
    return head + tail


def nested_central_diff(f, x: float, h: float, order: int) -> float:
    """order-fold nested central difference of f at x with step h."""
    if order == 0:
        return f(x)
    return (
        nested_central_diff(f, x + h, h, order - 1)
        - nested_central_diff(f, x - h, h, order - 1)
    ) / (2.0 * h)
