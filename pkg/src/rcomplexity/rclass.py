"""r-Complexity classes and the calculus rules that relate them.

Membership is decided by the limit criterion: with ``l = lim f/g``

* ``Theta_r(g)``  iff ``l == r``
* ``O_r(g)``      iff ``l in [0, r]``
* ``Omega_r(g)``  iff ``l in [r, inf]``
* ``o(g)``        iff ``l == 0``
* ``w(g)``        iff ``l == inf``

The small classes coincide with the classical ones; their rate is stored as 1
and never consulted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import KindMismatch, NonPositiveScalar, NotApplicable, PreconditionFailed
from .growth_algebra import (
    ExtendedNonNegReal,
    GrowthFunction,
    Number,
    add,
    exact,
    limit_ratio,
    scale,
)

__all__ = [
    "MembershipVerdict",
    "RATE_REL_TOL",
    "RClass",
    "RClassKind",
    "add_classes",
    "compare_rates",
    "compose_transitive",
    "member",
    "project_theta",
    "rescale_reference",
    "symmetry_dual",
    "theta_signature",
    "transpose_dual",
]

RATE_REL_TOL = 1e-12


class RClassKind(enum.Enum):
    BIG_THETA = "theta"
    BIG_O = "O"
    BIG_OMEGA = "omega"
    SMALL_O = "o"
    SMALL_OMEGA = "w"

    @property
    def is_big(self) -> bool:
        return self in _BIG_KINDS


_BIG_KINDS = frozenset({RClassKind.BIG_THETA, RClassKind.BIG_O, RClassKind.BIG_OMEGA})
BIG_KINDS = (RClassKind.BIG_THETA, RClassKind.BIG_O, RClassKind.BIG_OMEGA)


@dataclass(frozen=True)
class RClass:
    kind: RClassKind
    reference: GrowthFunction
    r: Fraction = field(default=Fraction(1))

    def __post_init__(self) -> None:
        r = Fraction(1) if not self.kind.is_big else exact(self.r)
        if r <= 0:
            raise ValueError(f"rate must be positive, got {r}")
        object.__setattr__(self, "r", r)

    def __str__(self) -> str:
        from .expression_io import format_class

        return format_class(self)


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    limit: ExtendedNonNegReal

    def __bool__(self) -> bool:
        return self.member


def compare_rates(a: Fraction, b: Fraction) -> int:
    """Three-way comparison; exact unless the values differ by < 1e-12 relative."""
    if a == b:
        return 0
    if abs(a - b) <= RATE_REL_TOL * max(abs(a), abs(b)):
        return 0
    return -1 if a < b else 1


def _admits(kind: RClassKind, r: Fraction, limit: ExtendedNonNegReal) -> bool:
    if kind is RClassKind.SMALL_O:
        return limit.is_zero
    if kind is RClassKind.SMALL_OMEGA:
        return limit.is_infinite
    if kind is RClassKind.BIG_THETA:
        return limit.is_finite and compare_rates(limit.value, r) == 0
    if kind is RClassKind.BIG_O:
        return limit.is_zero or (limit.is_finite and compare_rates(limit.value, r) <= 0)
    # BIG_OMEGA
    return limit.is_infinite or (limit.is_finite and compare_rates(limit.value, r) >= 0)


def member(f: GrowthFunction, cls: RClass) -> MembershipVerdict:
    limit = limit_ratio(f, cls.reference)
    return MembershipVerdict(_admits(cls.kind, cls.r, limit), limit)


def theta_signature(f: GrowthFunction) -> tuple[GrowthFunction, Fraction]:
    """Return ``(monic dominant shape, dominant coefficient)``.

    ``f`` is always a member of ``Theta_r(shape)`` for the returned pair.
    """
    dom = f.dominant
    return GrowthFunction((dom.with_coeff(Fraction(1)),)), dom.coeff


def rescale_reference(cls: RClass, x: Number) -> RClass:
    """Move between parameterizations: ``K_r(g) == K_{r*x}(g/x)``."""
    if not cls.kind.is_big:
        raise NotApplicable(f"{cls.kind.value}-classes carry no rate to rescale")
    x = exact(x)
    if x <= 0:
        raise NonPositiveScalar(f"rescale factor must be positive, got {x}")
    return RClass(cls.kind, scale(cls.reference, 1 / x), cls.r * x)


def compose_transitive(outer: RClass, inner_rate: Number) -> Fraction:
    """Rate of ``f`` against ``h`` given ``f in K_r(g)`` and ``g in K_r'(h)``.

    For the small kinds the rate is meaningless and 1 is returned; the kind is
    preserved either way.
    """
    if not outer.kind.is_big:
        return Fraction(1)
    inner_rate = exact(inner_rate)
    if inner_rate <= 0:
        raise ValueError("rates must be positive")
    return outer.r * inner_rate


def symmetry_dual(f: GrowthFunction, g: GrowthFunction, r: Number) -> MembershipVerdict:
    r = exact(r)
    if not member(f, RClass(RClassKind.BIG_THETA, g, r)):
        raise PreconditionFailed(f"f is not in theta_{r}(g)")
    return member(g, RClass(RClassKind.BIG_THETA, f, 1 / r))


def transpose_dual(
    f: GrowthFunction, g: GrowthFunction, r: Number
) -> tuple[MembershipVerdict, MembershipVerdict]:
    r = exact(r)
    forward = member(f, RClass(RClassKind.BIG_O, g, r))
    backward = member(g, RClass(RClassKind.BIG_OMEGA, f, 1 / r))
    return forward, backward


def project_theta(
    f: GrowthFunction, g: GrowthFunction, r: Number
) -> tuple[MembershipVerdict, MembershipVerdict, MembershipVerdict]:
    r = exact(r)
    return tuple(member(f, RClass(kind, g, r)) for kind in BIG_KINDS)


def add_classes(a: RClass, b: RClass) -> RClass:
    """Class containing every ``f' + g'`` with ``f'`` in ``a`` and ``g'`` in ``b``.

    With ``t = lim f/g`` for the references ``f`` and ``g``:

    * ``t == 0``   -> ``b``
    * ``t == inf`` -> ``a``
    * finite ``t`` -> ``K_r(f + (q/r) g)``

    The finite-limit reference uses ``q/r``; that is the only weighting for
    which ``lim h / reference`` equals ``r`` for Theta representatives.  The
    small kinds follow classical rules: the sum lands in the class of the
    dominant reference.
    """
    if a.kind is not b.kind:
        raise KindMismatch(f"cannot add {a.kind.value}-class and {b.kind.value}-class")
    t = limit_ratio(a.reference, b.reference)
    if t.is_zero:
        return b
    if t.is_infinite:
        return a
    if not a.kind.is_big:
        return a
    return RClass(a.kind, add(a.reference, scale(b.reference, b.r / a.r)), a.r)
