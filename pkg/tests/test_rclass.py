from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from corpus import growth_functions, rates
from rcomplexity.errors import KindMismatch, NonPositiveScalar, NotApplicable, PreconditionFailed
from rcomplexity.expression_io import parse_class, parse_function
from rcomplexity.growth_algebra import ExtendedNonNegReal, limit_ratio, scale
from rcomplexity.rclass import (
    BIG_KINDS,
    RClass,
    RClassKind,
    add_classes,
    compose_transitive,
    member,
    project_theta,
    rescale_reference,
    symmetry_dual,
    theta_signature,
    transpose_dual,
)

P = parse_function
THETA, BIG_O, OMEGA = RClassKind.BIG_THETA, RClassKind.BIG_O, RClassKind.BIG_OMEGA
SMALL_O, SMALL_W = RClassKind.SMALL_O, RClassKind.SMALL_OMEGA
kinds = st.sampled_from(list(RClassKind))


def test_rclass_rate_rules():
    with pytest.raises(ValueError):
        RClass(THETA, P("n"), 0)
    with pytest.raises(ValueError):
        RClass(BIG_O, P("n"), -2)
    assert RClass(SMALL_O, P("n"), 7).r == 1


# -- member ------------------------------------------------------------------


def test_member_examples():
    v = member(P("2.1*n + 1"), RClass(THETA, P("n"), 2.1))
    assert v.member and v.limit == ExtendedNonNegReal.finite(Fraction(21, 10))

    v = member(P("n"), RClass(SMALL_O, P("n^2")))
    assert v.member and v.limit.is_zero

    v = member(P("3*n^2 + 6"), RClass(OMEGA, P("n^2"), 2))
    assert v.member and v.limit == ExtendedNonNegReal.finite(3)


@pytest.mark.parametrize(
    "kind, r, expected",
    [
        (BIG_O, 3, True),  # closed upper end
        (BIG_O, 2.999, False),
        (OMEGA, 3, True),  # closed lower end
        (OMEGA, 3.001, False),
        (THETA, 3, True),
        (THETA, 3.0000001, False),
        (SMALL_O, 1, False),
        (SMALL_W, 1, False),
    ],
)
def test_member_boundaries(kind, r, expected):
    assert member(P("3*n^2 + 6"), RClass(kind, P("n^2"), r)).member is expected


def test_member_zero_and_infinite_limits():
    low, high = P("n"), P("n^3")
    assert member(low, RClass(BIG_O, high, 0.001)).member
    assert not member(low, RClass(OMEGA, high, 0.001)).member
    assert member(high, RClass(OMEGA, low, 1e6)).member
    assert member(high, RClass(SMALL_W, low)).member
    assert not member(high, RClass(BIG_O, low, 1e6)).member


def test_theta_tolerance_for_float_noise():
    f = P("2.1000000000000005*n")
    assert member(f, RClass(THETA, P("n"), 2.1)).member


@given(growth_functions, growth_functions, rates, kinds)
def test_member_is_limit_criterion(f, g, r, kind):
    lim = limit_ratio(f, g)
    cls = RClass(kind, g, r)
    expected = {
        THETA: lim.is_finite and lim.value == r,
        BIG_O: lim.is_zero or (lim.is_finite and lim.value <= r),
        OMEGA: lim.is_infinite or (lim.is_finite and lim.value >= r),
        SMALL_O: lim.is_zero,
        SMALL_W: lim.is_infinite,
    }[kind]
    assert member(f, cls).member is expected


# -- theta_signature -----------------------------------------------------------


@pytest.mark.parametrize(
    "text, shape, r",
    [("3*n^2 + 6", "n^2", 3), ("n", "n", 1), ("5*2^n + n^3", "2^n", 5)],
)
def test_theta_signature(text, shape, r):
    f = P(text)
    g, rate = theta_signature(f)
    assert g == P(shape) and rate == r
    assert limit_ratio(f, g) == ExtendedNonNegReal.finite(r)
    assert member(f, RClass(THETA, g, rate)).member


# -- rescale_reference -----------------------------------------------------------


def test_rescale_examples():
    out = rescale_reference(RClass(THETA, P("3*n^2"), 1), 3)
    assert out == RClass(THETA, P("n^2"), 3)
    same = RClass(BIG_O, P("n + 1"), 2)
    assert rescale_reference(same, 1) == same
    assert rescale_reference(RClass(BIG_O, P("n"), 2), Fraction(1, 2)) == RClass(BIG_O, P("2*n"), 1)


def test_rescale_rejects():
    with pytest.raises(NotApplicable):
        rescale_reference(RClass(SMALL_O, P("n")), 2)
    with pytest.raises(NonPositiveScalar):
        rescale_reference(RClass(THETA, P("n"), 2), 0)


@given(growth_functions, growth_functions, rates, st.sampled_from(BIG_KINDS), rates)
def test_rescale_preserves_membership(f, g, r, kind, x):
    cls = RClass(kind, g, r)
    assert member(f, cls).member == member(f, rescale_reference(cls, x)).member


# -- transitivity ----------------------------------------------------------------


def test_compose_examples():
    assert compose_transitive(RClass(THETA, P("3*n"), 2), 3) == 6
    f, g, h = P("6*n"), P("3*n"), P("n")
    assert member(f, RClass(THETA, g, 2)) and member(g, RClass(THETA, h, 3))
    assert member(f, RClass(THETA, h, 6))

    assert compose_transitive(RClass(BIG_O, P("n"), 1), 1) == 1

    r = compose_transitive(RClass(THETA, P("(1/5)*n^2"), 5), Fraction(1, 5))
    assert r == 1
    f, g, h = P("n^2"), P("(1/5)*n^2"), P("n^2")
    assert member(f, RClass(THETA, g, 5)) and member(g, RClass(THETA, h, Fraction(1, 5)))
    assert member(f, RClass(THETA, h, r))


def test_compose_small_kinds_ignore_rates():
    assert compose_transitive(RClass(SMALL_O, P("n")), 17) == 1


@given(growth_functions, growth_functions, growth_functions, rates, rates, kinds)
def test_transitivity_on_random_triples(f, g, h, r, r2, kind):
    if member(f, RClass(kind, g, r)) and member(g, RClass(kind, h, r2)):
        outer = RClass(kind, g, r)
        assert member(f, RClass(kind, h, compose_transitive(outer, r2)))


# -- symmetry / transpose / projection ------------------------------------------


def test_symmetry_examples():
    assert symmetry_dual(P("2*n"), P("n"), 2).member
    assert symmetry_dual(P("n + 1"), P("n + 1"), 1).member
    v = symmetry_dual(P("3*n^2 + 6"), P("n^2"), 3)
    assert v.member and v.limit == ExtendedNonNegReal.finite(Fraction(1, 3))


def test_symmetry_precondition():
    with pytest.raises(PreconditionFailed):
        symmetry_dual(P("2*n"), P("n"), 3)


@given(growth_functions, rates)
def test_symmetry_involution(g, r):
    f = scale(g, r)
    assert symmetry_dual(f, g, r).member
    # back again: rate 1/(1/r) is exactly r
    assert symmetry_dual(g, f, 1 / r).member
    assert member(f, RClass(THETA, g, 1 / (1 / r))).member


@pytest.mark.parametrize(
    "f, g, r, expected",
    [("n", "n^2", 1, True), ("2*n", "n", 2, True), ("3*n", "n", 2, False)],
)
def test_transpose_examples(f, g, r, expected):
    fwd, back = transpose_dual(P(f), P(g), r)
    assert fwd.member is expected and back.member is expected


def test_transpose_witness_limits():
    fwd, back = transpose_dual(P("n"), P("n^2"), 1)
    assert fwd.limit.is_zero and back.limit.is_infinite
    fwd, back = transpose_dual(P("2*n"), P("n"), 2)
    assert fwd.limit.value == 2 and back.limit.value == Fraction(1, 2)


@given(growth_functions, growth_functions, rates)
def test_transpose_equivalence(f, g, r):
    fwd, back = transpose_dual(f, g, r)
    assert fwd.member == back.member


@given(growth_functions, rates)
def test_transpose_boundary(g, r):
    f = scale(g, r)
    fwd, back = transpose_dual(f, g, r)
    assert fwd.member and back.member


def test_projection_examples():
    assert all(v.member for v in project_theta(P("2.1*n + 1"), P("n"), 2.1))
    theta, big_o, omega = project_theta(P("n"), P("n"), 2)
    assert (theta.member, big_o.member, omega.member) == (False, True, False)
    assert all(v.member for v in project_theta(P("n^2"), P("n^2"), 1))


@given(growth_functions, growth_functions, rates, st.booleans())
def test_projection(f, g, r, on_boundary):
    if on_boundary:
        lim = limit_ratio(f, g)
        assume(lim.is_finite)
        r = lim.value
    theta, big_o, omega = project_theta(f, g, r)
    assert theta.member == (big_o.member and omega.member)


# -- add_classes -------------------------------------------------------------------


def test_add_examples():
    assert add_classes(parse_class("theta_2(n)"), parse_class("theta_3(n^2)")) == parse_class("theta_3(n^2)")
    assert add_classes(parse_class("theta_2(n)"), parse_class("theta_3(n)")) == parse_class("theta_2(2.5*n)")
    assert add_classes(parse_class("O_1(n^2)"), parse_class("O_1(n*log(n))")) == parse_class("O_1(n^2)")


def test_add_finite_case_witness():
    h = P("2*n + 3*n")
    cls = add_classes(parse_class("theta_2(n)"), parse_class("theta_3(n)"))
    assert member(h, cls).member
    assert limit_ratio(h, cls.reference) == ExtendedNonNegReal.finite(2)


def test_add_rejects_mixed_kinds():
    with pytest.raises(KindMismatch):
        add_classes(parse_class("theta_2(n)"), parse_class("O_2(n)"))


def test_add_small_kinds_classical():
    assert add_classes(parse_class("o(n)"), parse_class("o(n^2)")) == parse_class("o(n^2)")
    assert add_classes(parse_class("w(n^3)"), parse_class("w(n)")) == parse_class("w(n^3)")
    h = P("n + n^1.5")
    assert member(h, add_classes(parse_class("o(n^2)"), parse_class("o(n^2)"))).member
