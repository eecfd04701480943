"""Brute-force numeric referee for limits of ratios.

The estimate evaluates ``f(n)/g(n)`` along ``n = 2**k`` and classifies the
trend.  It never looks at the dominance structure of the terms: every term is
evaluated numerically (in log space, so exponential terms do not overflow
before the ratio itself leaves the float range).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .growth_algebra import GrowthFunction, log_evaluate
from .rclass import RClass, RClassKind

ZERO_THRESHOLD = 1e-9
INFINITE_THRESHOLD = 1e9
AGREEMENT_TOL = 1e-3
DEFAULT_SCHEDULE = tuple(2**k for k in range(4, 41))

# exp() of a larger magnitude is outside double range
_LOG_RATIO_LIMIT = 700.0


class OracleClass(enum.Enum):
    ZERO = "zero"
    FINITE = "finite"
    INFINITE = "infinite"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class OracleEstimate:
    classification: OracleClass
    value: Optional[float]
    samples: tuple[tuple[int, float], ...]

    @property
    def conclusive(self) -> bool:
        return self.classification is not OracleClass.INCONCLUSIVE


def _non_increasing(xs: Sequence[float]) -> bool:
    return all(b <= a for a, b in zip(xs, xs[1:]))


def _non_decreasing(xs: Sequence[float]) -> bool:
    return all(b >= a for a, b in zip(xs, xs[1:]))


def estimate_limit(
    f: GrowthFunction, g: GrowthFunction, schedule: Sequence[int] = DEFAULT_SCHEDULE
) -> OracleEstimate:
    samples: list[tuple[int, float]] = []
    for n in schedule:
        log_ratio = log_evaluate(f, n) - log_evaluate(g, n)
        if log_ratio > _LOG_RATIO_LIMIT:
            samples.append((n, math.inf))
            break
        if log_ratio < -_LOG_RATIO_LIMIT:
            samples.append((n, 0.0))
            break
        samples.append((n, math.exp(log_ratio)))

    ratios = [r for _, r in samples]
    tail = ratios[-3:]
    frozen = tuple(samples)
    overflowed = bool(ratios) and (ratios[-1] == 0.0 or math.isinf(ratios[-1]))
    if len(tail) < 3 and not overflowed:
        return OracleEstimate(OracleClass.INCONCLUSIVE, None, frozen)
    last = tail[-1]
    if last < ZERO_THRESHOLD and _non_increasing(tail):
        return OracleEstimate(OracleClass.ZERO, 0.0, frozen)
    if last > INFINITE_THRESHOLD and _non_decreasing(tail):
        return OracleEstimate(OracleClass.INFINITE, math.inf, frozen)
    if math.isfinite(last) and last > 0 and (max(tail) - min(tail)) < AGREEMENT_TOL * last:
        return OracleEstimate(OracleClass.FINITE, last, frozen)
    return OracleEstimate(OracleClass.INCONCLUSIVE, None, frozen)


def oracle_member(estimate: OracleEstimate, cls: RClass) -> Optional[bool]:
    """Membership implied by a numeric estimate, or None when it abstains.

    Finite estimates are only accurate to ``AGREEMENT_TOL``; a rate within
    that band of the estimate counts as equal.
    """
    c = estimate.classification
    if c is OracleClass.INCONCLUSIVE:
        return None
    kind = cls.kind
    if kind is RClassKind.SMALL_O:
        return c is OracleClass.ZERO
    if kind is RClassKind.SMALL_OMEGA:
        return c is OracleClass.INFINITE
    r = float(cls.r)
    if c is OracleClass.ZERO:
        return kind is RClassKind.BIG_O
    if c is OracleClass.INFINITE:
        return kind is RClassKind.BIG_OMEGA
    v = estimate.value
    close = abs(v - r) <= AGREEMENT_TOL * r
    if kind is RClassKind.BIG_THETA:
        return close
    if kind is RClassKind.BIG_O:
        return close or v < r
    return close or v > r
