from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import R, monomials, polys
from gradedq import catalog
from gradedq.polyring import (
    Polynomial,
    PolynomialSyntaxError,
    RingMismatchError,
    RingSpec,
    SignedSubstitution,
    format_poly,
    monomial_mul,
    parse,
    substitute,
    weighted_degree,
)

P = R.poly


def test_add_cancels():
    assert P("m^2+h^2") + P("-h^2") == P("m^2")
    assert P("m^2+h^2-n^2-t^2") + P("n^2+t^2") == P("m^2+h^2")
    p = P("3*m*n - t^2")
    assert p + R.zero == p


def test_mul_examples():
    assert P("m+h") * P("m-h") == P("m^2-h^2")
    assert P("m") * P("h") == P("m*h")
    assert P("m^2+h^2") ** 2 == P("m^4+2*m^2*h^2+h^4")


def test_no_zero_coefficients_stored():
    p = Polynomial(R, {(1, 0, 0, 0): Fraction(0), (0, 1, 0, 0): Fraction(2)})
    assert len(p) == 1
    assert not (P("m") - P("m")).terms


def test_weighted_degree():
    assert weighted_degree((1, 1, 0, 0), R) == 4
    assert weighted_degree((0, 0, 0, 0), R) == 0
    ext = RingSpec.from_pairs(("a", 3), ("b", 3))
    assert weighted_degree((1, 1), ext) == 6


def test_substitution_signs():
    c = catalog.c_minus_plus()
    assert substitute(P("m*h"), c) == P("m*h")
    assert substitute(P("m*n"), c) == P("-m*n")
    ident = SignedSubstitution.identity(R)
    p = P("m^2 - 2*h*t + 1/3*n")
    assert substitute(p, ident) == p


def test_substitution_must_preserve_degree():
    ring = RingSpec.from_pairs(("x", 1), ("y", 2))
    with pytest.raises(ValueError):
        SignedSubstitution.from_mapping(ring, {"x": "y", "y": "x"})
    with pytest.raises(ValueError):
        SignedSubstitution.from_mapping(R, {"m": "h"})  # not a bijection


def test_parse_examples():
    assert parse("m^2+h^2-n^2-t^2", R) == catalog.ideal_i2().generators[2]
    assert parse("0", R) == R.zero
    p = parse("3/2*m*h", R)
    assert p.coeff((1, 1, 0, 0)) == Fraction(3, 2) and len(p) == 1
    assert parse("  m ^ 2 *h  ", R) == P("m^2*h")


def test_parse_aliases():
    assert parse("mu^2 + eta^2", R) == P("m^2+h^2")
    torus = RingSpec.from_pairs(("e1", 2), ("e2", 2))
    assert torus.poly("e1*e2") == torus.var("e1") * torus.var("e2")


@pytest.mark.parametrize("text", ["m^", "m**2", "2/0*m", "q", "m +", "(m)", "m^-1"])
def test_parse_errors_report_position(text):
    with pytest.raises(PolynomialSyntaxError) as ei:
        parse(text, R)
    assert ei.value.position >= 0


def test_format():
    assert format_poly(P("m^2+h^2-n^2-t^2")) == "m^2 + h^2 - n^2 - t^2"
    assert format_poly(P("3/2*m*h")) == "3/2*m*h"
    assert format_poly(R.zero) == "0"
    assert format_poly(P("-1")) == "-1"


def test_ring_mismatch():
    other = RingSpec.from_pairs(("m", 2), ("h", 2))
    with pytest.raises(RingMismatchError):
        _ = P("m") + other.poly("m")


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == R.zero
    assert a * R.one == a


@given(polys())
def test_format_parse_roundtrip(p):
    text = format_poly(p)
    assert parse(text, R) == p
    assert format_poly(parse(text, R)) == text


@given(monomials(4), monomials(4))
def test_degree_additive(a, b):
    assert weighted_degree(monomial_mul(a, b), R) == weighted_degree(a, R) + weighted_degree(b, R)


@given(polys(), st.sampled_from(["cmp", "cpm", "swap"]))
def test_substitution_preserves_homogeneity(p, which):
    s = {"cmp": catalog.c_minus_plus(), "cpm": catalog.c_plus_minus(),
         "swap": SignedSubstitution.from_mapping(R, {"m": "n", "n": "-m", "h": "t", "t": "h"})}[which]
    for d in p.degrees():
        part = p.homogeneous_part(d)
        img = substitute(part, s)
        assert not img or img.degrees() == {d}
