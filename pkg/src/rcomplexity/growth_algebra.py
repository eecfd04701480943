"""Closed algebra of positive growth functions.

A growth function is a finite sum of terms ``c * q**n * n**a * log(n)**b``
with ``c > 0``, ``q >= 1``, ``a >= 0`` and natural logarithm.  All numeric
fields are stored as :class:`fractions.Fraction` so that normalization,
arithmetic and limits of ratios are exact.  Floats handed to the public
constructors are read through their shortest round-trip decimal
(``2.1`` becomes ``21/10``), which keeps ``float(Fraction) == x``.

Terms are ordered by the dominance key ``(q, a, b)``: a larger base beats any
polynomial factor, a larger power beats any logarithmic factor.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import DomainError, EmptyFunction, GrowthOverflow, InvalidTerm, NonPositiveScalar

Number = Union[int, float, Fraction, Decimal, str]

__all__ = [
    "ExtendedNonNegReal",
    "GrowthFunction",
    "GrowthTerm",
    "LimitTag",
    "add",
    "evaluate",
    "exact",
    "limit_ratio",
    "log_evaluate",
    "multiply",
    "normalize",
    "scale",
    "term",
]


def exact(x: Number) -> Fraction:
    """Convert a user-supplied number to an exact Fraction."""
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise InvalidTerm(f"non-finite value {x!r}")
        return Fraction(repr(x))
    if isinstance(x, (Decimal, str)):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidTerm(f"not a number: {x!r}") from exc
    raise TypeError(f"unsupported number type {type(x).__name__}")


def _log_fraction(x: Fraction) -> float:
    # math.log accepts arbitrarily large ints, float(x) might overflow
    return math.log(x.numerator) - math.log(x.denominator)


@dataclass(frozen=True)
class GrowthTerm:
    """One term ``coeff * exp_base**n * n**poly_exp * log(n)**log_exp``."""

    coeff: Fraction
    exp_base: Fraction = Fraction(1)
    poly_exp: Fraction = Fraction(0)
    log_exp: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("coeff", "exp_base", "poly_exp", "log_exp"):
            object.__setattr__(self, name, exact(getattr(self, name)))
        if self.coeff <= 0:
            raise InvalidTerm(f"coefficient must be positive, got {self.coeff}")
        if self.exp_base < 1:
            raise InvalidTerm(f"exponential base must be >= 1, got {self.exp_base}")
        if self.poly_exp < 0:
            raise InvalidTerm(f"polynomial exponent must be >= 0, got {self.poly_exp}")
        if self.log_exp < 0 and self.poly_exp == 0 and self.exp_base == 1:
            raise InvalidTerm("negative log exponent needs a polynomial or exponential factor")

    @property
    def key(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.exp_base, self.poly_exp, self.log_exp)

    def with_coeff(self, coeff: Fraction) -> GrowthTerm:
        return GrowthTerm(coeff, self.exp_base, self.poly_exp, self.log_exp)

    def value(self, n: int) -> float:
        try:
            v = (
                float(self.coeff)
                * float(self.exp_base) ** n
                * float(n) ** float(self.poly_exp)
                * math.log(n) ** float(self.log_exp)
            )
        except OverflowError as exc:
            raise GrowthOverflow(f"term overflows at n={n}") from exc
        if math.isinf(v):
            raise GrowthOverflow(f"term overflows at n={n}")
        return v

    def log_value(self, n: int) -> float:
        return (
            _log_fraction(self.coeff)
            + n * _log_fraction(self.exp_base)
            + float(self.poly_exp) * math.log(n)
            + float(self.log_exp) * math.log(math.log(n))
        )


def term(coeff: Number = 1, exp_base: Number = 1, poly_exp: Number = 0, log_exp: Number = 0) -> GrowthTerm:
    return GrowthTerm(exact(coeff), exact(exp_base), exact(poly_exp), exact(log_exp))


@dataclass(frozen=True)
class GrowthFunction:
    """Normalized sum of growth terms, dominant term first.

    Build instances with :func:`normalize` (or the arithmetic operators); the
    constructor only checks that the term tuple is already normal.
    """

    terms: tuple[GrowthTerm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise EmptyFunction("growth function needs at least one term")
        keys = [t.key for t in self.terms]
        if any(a <= b for a, b in zip(keys, keys[1:])):
            raise InvalidTerm("terms must be merged and sorted by descending dominance")

    @property
    def dominant(self) -> GrowthTerm:
        return self.terms[0]

    def __add__(self, other: GrowthFunction) -> GrowthFunction:
        if not isinstance(other, GrowthFunction):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other):
        if isinstance(other, GrowthFunction):
            return multiply(self, other)
        if isinstance(other, (int, float, Fraction, Decimal)) and not isinstance(other, bool):
            return scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, n: int) -> float:
        return evaluate(self, n)

    def __str__(self) -> str:
        from .expression_io import format_function

        return format_function(self)


def normalize(terms: Iterable[GrowthTerm]) -> GrowthFunction:
    """Merge like terms and sort them by descending dominance."""
    merged: dict[tuple[Fraction, Fraction, Fraction], Fraction] = {}
    for t in terms:
        if not isinstance(t, GrowthTerm):
            raise InvalidTerm(f"not a growth term: {t!r}")
        merged[t.key] = merged.get(t.key, Fraction(0)) + t.coeff
    if not merged:
        raise EmptyFunction("cannot normalize an empty term list")
    return GrowthFunction(tuple(GrowthTerm(c, *k) for k, c in sorted(merged.items(), reverse=True)))


def evaluate(f: GrowthFunction, n: int) -> float:
    if n < 2:
        raise DomainError(f"growth functions are evaluated at n >= 2, got {n}")
    total = math.fsum(t.value(n) for t in f.terms)
    if math.isinf(total):
        raise GrowthOverflow(f"sum overflows at n={n}")
    return total


def log_evaluate(f: GrowthFunction, n: int) -> float:
    """Natural log of ``f(n)``, computed without overflow (log-sum-exp)."""
    if n < 2:
        raise DomainError(f"growth functions are evaluated at n >= 2, got {n}")
    logs = [t.log_value(n) for t in f.terms]
    top = max(logs)
    return top + math.log(math.fsum(math.exp(v - top) for v in logs))


def add(f: GrowthFunction, g: GrowthFunction) -> GrowthFunction:
    return normalize(f.terms + g.terms)


def scale(f: GrowthFunction, x: Number) -> GrowthFunction:
    x = exact(x)
    if x <= 0:
        raise NonPositiveScalar(f"scale factor must be positive, got {x}")
    return GrowthFunction(tuple(t.with_coeff(t.coeff * x) for t in f.terms))


def multiply(f: GrowthFunction, g: GrowthFunction) -> GrowthFunction:
    products = [
        GrowthTerm(
            a.coeff * b.coeff,
            a.exp_base * b.exp_base,
            a.poly_exp + b.poly_exp,
            a.log_exp + b.log_exp,
        )
        for a in f.terms
        for b in g.terms
    ]
    return normalize(products)


class LimitTag(enum.Enum):
    ZERO = "zero"
    FINITE = "finite"
    INFINITE = "infinite"


@dataclass(frozen=True)
class ExtendedNonNegReal:
    """A value in ``[0, +inf]`` with exact zero/finite/infinite tagging."""

    tag: LimitTag
    value: Fraction | None = None

    def __post_init__(self) -> None:
        if self.tag is LimitTag.FINITE:
            if self.value is None:
                raise ValueError("finite limit needs a value")
            object.__setattr__(self, "value", exact(self.value))
            if self.value <= 0:
                raise ValueError("finite limit must be positive; use ZERO for 0")
        elif self.value is not None:
            raise ValueError(f"{self.tag.value} limit carries no value")

    @classmethod
    def zero(cls) -> ExtendedNonNegReal:
        return cls(LimitTag.ZERO)

    @classmethod
    def infinite(cls) -> ExtendedNonNegReal:
        return cls(LimitTag.INFINITE)

    @classmethod
    def finite(cls, value: Number) -> ExtendedNonNegReal:
        return cls(LimitTag.FINITE, exact(value))

    @property
    def is_zero(self) -> bool:
        return self.tag is LimitTag.ZERO

    @property
    def is_finite(self) -> bool:
        return self.tag is LimitTag.FINITE

    @property
    def is_infinite(self) -> bool:
        return self.tag is LimitTag.INFINITE

    def reciprocal(self) -> ExtendedNonNegReal:
        if self.is_zero:
            return ExtendedNonNegReal.infinite()
        if self.is_infinite:
            return ExtendedNonNegReal.zero()
        return ExtendedNonNegReal.finite(1 / self.value)

    def __float__(self) -> float:
        if self.is_zero:
            return 0.0
        if self.is_infinite:
            return math.inf
        return float(self.value)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.is_infinite:
            return "inf"
        return format(float(self.value), ".12g")


def limit_ratio(f: GrowthFunction, g: GrowthFunction) -> ExtendedNonNegReal:
    """Exact ``lim f(n)/g(n)`` decided by the dominant terms."""
    df, dg = f.dominant, g.dominant
    if df.key > dg.key:
        return ExtendedNonNegReal.infinite()
    if df.key < dg.key:
        return ExtendedNonNegReal.zero()
    return ExtendedNonNegReal.finite(df.coeff / dg.coeff)
