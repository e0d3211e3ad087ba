# Copyright 2026 The polyinv authors
# SPDX-License-Identifier: Apache-2.0

"""Smoke tests for the compiled module: parsing, classification,
decomposition, and the classical identities, exercised through the
Python surface."""

import pytest

import polyinv


@pytest.fixture(scope="module")
def ctx():
    return polyinv.Context(["x", "y", "z"], 1)


def test_parse_format_roundtrip(ctx):
    f = polyinv.parse("z*(x+y+z)", ctx)
    assert str(f) == "x*z + y*z + z^2"
    assert polyinv.parse(str(f), ctx) == f
    assert str(polyinv.parse("3/2*x^2 - z", ctx)) == "3/2*x^2 - z"


def test_arithmetic_and_division(ctx):
    x = ctx.variable(0)
    y = ctx.variable(1)
    assert (x + y) * (x - y) == polyinv.parse("x^2 - y^2", ctx)
    quotient = polyinv.exact_div(x * x - y * y, x + y)
    assert quotient == x - y
    assert polyinv.exact_div(polyinv.parse("z^2 + x", ctx), polyinv.parse("z", ctx)) is None


def test_cyclotomic_scalars():
    c3 = polyinv.Context(["x", "z"], 3)
    zeta = c3.generator_scalar()
    assert polyinv.root_of_unity_order(zeta) == 3
    assert polyinv.root_of_unity_order(c3.scalar(polyinv.Rational(2))) is None
    assert zeta.pow(3).is_one()
    f = polyinv.parse("w*z + x", c3)
    cls = polyinv.classify_map(f)
    assert cls.kind == "adequate"
    assert cls.adequate.order == 3


def test_classify_kinds(ctx):
    assert polyinv.classify_map(polyinv.parse("z^2", ctx)).kind == "nonlinear_in_z"
    assert polyinv.classify_map(polyinv.parse("z + x", ctx)).kind == "translation_like"
    assert polyinv.classify_map(polyinv.parse("2*z", ctx)).kind == "unit_not_root_of_unity"
    assert polyinv.classify_map(polyinv.parse("x*z", ctx)).kind == "nonconstant_leading"
    assert polyinv.classify_map(polyinv.parse("z", ctx)).kind == "identity"


def test_decompose_roundtrip(ctx):
    cls = polyinv.classify_map(polyinv.parse("-(x+y+z)", ctx))
    assert cls.kind == "adequate"
    gmap = cls.adequate
    b = polyinv.invariant_generator(gmap)
    f = b * b + ctx.variable(0).scaled(ctx.scalar(polyinv.Rational(3))) * b
    dec = polyinv.decompose(f, gmap)
    assert [str(c) for c in dec.coeffs] == ["0", "3*x", "1"]
    assert polyinv.expand(dec) == f


def test_decompose_rejects_noninvariant(ctx):
    cls = polyinv.classify_map(polyinv.parse("-(x+y+z)", ctx))
    with pytest.raises(polyinv.NotInvariantError):
        polyinv.decompose(polyinv.parse("z", ctx), cls.adequate)


def test_fermat_pipeline():
    fact = polyinv.cauchy_factorization(7)
    assert fact.multiplicity == 2
    assert str(fact.cauchy) == "1"
    exp = polyinv.e3_expansion(7)
    assert exp.n == 2
    tri = polyinv.trivariate_context()
    assert exp.a[1] == polyinv.parse("2*x^2 + 3*x*y + 2*y^2", tri)
    assert polyinv.check_xy_identity(7).equal
    assert polyinv.e2_by_division(7) == polyinv.e2_closed_form(7)


def test_catalan():
    assert polyinv.catalan_check(9).equal
    with pytest.raises(ValueError):
        polyinv.catalan_check(4)


def test_parse_error_positions(ctx):
    with pytest.raises(ValueError):
        polyinv.parse("2x", ctx)


def test_suites_small():
    report = polyinv.run_cauchy_suite(13)
    assert report.all_passed()
    assert all(c.passed for c in report.checks)
    roundtrip = polyinv.run_roundtrip_suite(25, 7)
    assert roundtrip.all_passed()
