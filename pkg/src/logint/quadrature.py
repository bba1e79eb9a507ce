"""Deterministic double-exponential quadrature on plain Python floats.

``integrate_finite`` applies the tanh-sinh transform, which soaks up
integrable endpoint singularities (ln x, inverse square roots) without any
subdivision logic; ``integrate_semi_infinite`` is the exp-sinh analogue for
half-lines, and ``integrate_bilateral`` folds the real line at zero into
two half-line integrals.

Refinement halves the trapezoid step once per level.  Nodes are generated
in a fixed center-outward order, abscissas are formed as offsets from the
nearest endpoint (so no precision is lost next to a singularity), partial
sums use compensated (Kahan) accumulation, and the error estimate is the
last level-to-level difference floored at machine precision.  Identical
inputs therefore produce bit-identical outcomes.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, replace
from itertools import count
from typing import Callable, Iterable, Iterator

__all__ = [
    "QuadratureConfig",
    "QuadratureOutcome",
    "integrate_finite",
    "integrate_semi_infinite",
    "integrate_bilateral",
]

_EPS = sys.float_info.epsilon
_HALF_PI = math.pi / 2.0

# Two consecutive contributions at or below this magnitude exhaust one
# side of the node ladder; genuine mass cannot hide below it.
_NEGLIGIBLE = 1e-300


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and effort caps shared by all integrators."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_level: int = 12
    max_evals: int = 200_000

    def __post_init__(self) -> None:
        for name in ("abs_tol", "rel_tol"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0.0:
                raise ValueError(f"{name} must be finite and >= 0, got {value!r}")
        if self.abs_tol == 0.0 and self.rel_tol == 0.0:
            raise ValueError("at least one of abs_tol, rel_tol must be positive")
        if not isinstance(self.max_level, int) or not (1 <= self.max_level <= 16):
            raise ValueError(f"max_level must be an integer in [1, 16], got {self.max_level!r}")
        if not isinstance(self.max_evals, int) or not (1 <= self.max_evals <= 10_000_000):
            raise ValueError(f"max_evals must be an integer in [1, 1e7], got {self.max_evals!r}")


@dataclass(frozen=True)
class QuadratureOutcome:
    """Result of one integration: value, error claim, and effort spent."""

    value: float
    error_estimate: float
    evaluations: int
    converged: bool


class _OutOfBudget(Exception):
    """Internal: the integrand evaluation cap was reached mid-sweep."""


class _EvalCounter:
    __slots__ = ("used", "cap")

    def __init__(self, cap: int) -> None:
        self.used = 0
        self.cap = cap

    def call(self, f: Callable[[float], float], x: float) -> float:
        if self.used >= self.cap:
            raise _OutOfBudget
        self.used += 1
        return f(x)


class _Kahan:
    """Compensated accumulator; addition order is part of the contract."""

    __slots__ = ("total", "_comp")

    def __init__(self) -> None:
        self.total = 0.0
        self._comp = 0.0

    def add(self, term: float) -> None:
        t = term - self._comp
        fresh = self.total + t
        self._comp = (fresh - self.total) - t
        self.total = fresh


def _refine(
    level0: float,
    pair_sum: Callable[[float, Iterable[int]], float],
    counter: _EvalCounter,
    cfg: QuadratureConfig,
) -> QuadratureOutcome:
    """Shared level-doubling driver: halve h, reuse the previous sum."""
    value = level0
    err = math.inf
    h = 1.0
    for _ in range(cfg.max_level):
        h *= 0.5
        try:
            refined = 0.5 * value + h * pair_sum(h, count(1, 2))
        except _OutOfBudget:
            return QuadratureOutcome(value, err, counter.used, False)
        err = abs(refined - value)
        floor = _EPS * abs(refined)
        if err < floor:
            err = floor  # cannot honestly claim accuracy below roundoff
        value = refined
        if err <= max(cfg.abs_tol, cfg.rel_tol * abs(value)):
            return QuadratureOutcome(value, err, counter.used, True)
    return QuadratureOutcome(value, err, counter.used, False)


def integrate_finite(
    f: Callable[[float], float],
    a: float,
    b: float,
    cfg: QuadratureConfig | None = None,
) -> QuadratureOutcome:
    """Integrate f over the open interval (a, b), both endpoints finite.

    The endpoints themselves are never passed to f: abscissas are built as
    offsets from the nearer endpoint, and a node whose offset rounds away
    entirely is dropped (its transform weight is negligible by then).
    Integrable endpoint singularities of log or inverse-power type are
    handled without any special casing.
    """
    if cfg is None:
        cfg = QuadratureConfig()
    if not (math.isfinite(a) and math.isfinite(b)) or a >= b:
        raise ValueError(f"need finite a < b, got a={a!r}, b={b!r}")
    halfspan = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    counter = _EvalCounter(cfg.max_evals)

    def pair_sum(h: float, ks: Iterator[int]) -> float:
        acc = _Kahan()
        left_alive = True
        right_alive = True
        for k in ks:
            t = k * h
            y = _HALF_PI * math.sinh(t)
            q = math.exp(-2.0 * y)
            if q == 0.0:
                break  # weights underflow from here on
            one_plus = 1.0 + q
            w = halfspan * _HALF_PI * math.cosh(t) * 4.0 * q / (one_plus * one_plus)
            offset = halfspan * (2.0 * q / one_plus)  # halfspan * (1 - |tanh|)
            contribution = 0.0
            if left_alive:
                x = a + offset
                if x <= a:
                    left_alive = False  # node rounded onto the endpoint
                else:
                    contribution += w * counter.call(f, x)
            if right_alive:
                x = b - offset
                if x >= b:
                    right_alive = False
                else:
                    contribution += w * counter.call(f, x)
            if not (left_alive or right_alive):
                break
            acc.add(contribution)
        return acc.total

    try:
        center = halfspan * _HALF_PI * counter.call(f, mid)
        level0 = center + pair_sum(1.0, count(1))
    except _OutOfBudget:
        return QuadratureOutcome(0.0, math.inf, counter.used, False)
    return _refine(level0, pair_sum, counter, cfg)


def integrate_semi_infinite(
    f: Callable[[float], float],
    a: float,
    cfg: QuadratureConfig | None = None,
) -> QuadratureOutcome:
    """Integrate f over (a, inf); f must decay fast enough to be integrable.

    The exp-sinh change of variables x = a + exp((pi/2) sinh t) compresses
    both the approach to a and the unbounded tail double-exponentially.
    An integrable singularity at a is fine; a is never sampled.
    """
    if cfg is None:
        cfg = QuadratureConfig()
    if not math.isfinite(a):
        raise ValueError(f"lower limit must be finite, got {a!r}")
    counter = _EvalCounter(cfg.max_evals)

    def pair_sum(h: float, ks: Iterator[int]) -> float:
        acc = _Kahan()
        near_alive = True  # t < 0, x slides down to a
        far_alive = True  # t > 0, x runs to infinity
        near_tiny = 0
        far_tiny = 0
        for k in ks:
            t = k * h
            y = _HALF_PI * math.sinh(t)
            base = _HALF_PI * math.cosh(t)
            contribution = 0.0
            if far_alive and y > 709.0:
                far_alive = False  # exp(y) would overflow; x is unrepresentable
            if far_alive:
                grow = math.exp(y)
                w = base * grow
                x = a + grow
                if not (math.isfinite(w) and math.isfinite(x)):
                    far_alive = False  # beyond representable range
                else:
                    c = w * counter.call(f, x)
                    if abs(c) <= _NEGLIGIBLE:
                        far_tiny += 1
                        if far_tiny >= 2:
                            far_alive = False
                    else:
                        far_tiny = 0
                    contribution += c
            if near_alive:
                decay = math.exp(-y)
                w = base * decay
                x = a + decay
                if x <= a or w == 0.0:
                    near_alive = False  # node rounded onto the endpoint
                else:
                    c = w * counter.call(f, x)
                    if abs(c) <= _NEGLIGIBLE:
                        near_tiny += 1
                        if near_tiny >= 2:
                            near_alive = False
                    else:
                        near_tiny = 0
                    contribution += c
            if not (near_alive or far_alive):
                break
            acc.add(contribution)
        return acc.total

    try:
        center = _HALF_PI * counter.call(f, a + 1.0)
        level0 = center + pair_sum(1.0, count(1))
    except _OutOfBudget:
        return QuadratureOutcome(0.0, math.inf, counter.used, False)
    return _refine(level0, pair_sum, counter, cfg)


def integrate_bilateral(
    f: Callable[[float], float],
    cfg: QuadratureConfig | None = None,
) -> QuadratureOutcome:
    """Integrate f over the whole real line, split at zero.

    Implemented as the half-line integral of f(t) plus that of f(-t), so a
    removable singularity at 0 never gets sampled; the caller supplies the
    limit-safe integrand.  The error estimate is the sum of the two
    half-line estimates.
    """
    if cfg is None:
        cfg = QuadratureConfig()
    half_cfg = replace(cfg, max_evals=max(1, cfg.max_evals // 2))
    positive = integrate_semi_infinite(f, 0.0, half_cfg)
    negative = integrate_semi_infinite(lambda t: f(-t), 0.0, half_cfg)
    return QuadratureOutcome(
        positive.value + negative.value,
        positive.error_estimate + negative.error_estimate,
        positive.evaluations + negative.evaluations,
        positive.converged and negative.converged,
    )
