import random

import pytest

from cikernel.parse import ParseError, parse_generators, parse_polynomial
from cikernel.poly import RingContext, format_polynomial

from helpers import random_poly, small_ring


def test_saturated_statement_binomial():
    ring = RingContext([f"p_{a}{b}{c}" for a in "12" for b in "12" for c in "12"])
    f = parse_polynomial("p_111*p_212 - p_211*p_112", ring)
    assert len(f.terms) == 2
    assert f == ring.var("p_111") * ring.var("p_212") - ring.var("p_211") * ring.var("p_112")


def test_zero_and_constants():
    ring = RingContext(["x", "y"])
    assert parse_polynomial("0", ring).is_zero
    assert parse_polynomial("7", ring) == ring.constant(7)
    assert parse_polynomial("3/2", ring) == ring.constant("3/2")
    assert parse_polynomial("-x", ring) == -ring.var("x")


def test_parabola_circle_inputs():
    ring = RingContext(["x", "y"])
    f = parse_polynomial("x^2 - y", ring)
    assert f.total_degree() == 2
    assert str(f) == "x^2 - y"


def test_parens_and_whitespace():
    ring = RingContext(["x", "y"])
    f = parse_polynomial(" ( x + y ) * ( x - y ) ", ring)
    assert f == parse_polynomial("x^2 - y^2", ring)


def test_errors_carry_positions():
    ring = RingContext(["x", "y"])
    with pytest.raises(ParseError) as err:
        parse_polynomial("x + $", ring)
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse_polynomial("x + zebra", ring)
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse_polynomial("x^-2", ring)
    with pytest.raises(ParseError):
        parse_polynomial("(x + y", ring)
    with pytest.raises(ParseError):
        parse_polynomial("x y", ring)
    with pytest.raises(ParseError):
        parse_polynomial("1/0", ring)


def test_round_trip_random():
    rng = random.Random(42)
    for _ in range(400):
        ring = small_ring(rng)
        f = random_poly(rng, ring, max_terms=5, max_exp=4, max_coeff=9)
        assert parse_polynomial(format_polynomial(f), ring) == f


def test_round_trip_fractional_coefficients():
    ring = RingContext(["x", "y"])
    f = parse_polynomial("1/2*x^2 - 2/3*x*y + 5", ring)
    assert parse_polynomial(str(f), ring) == f


def test_parse_generators_semicolons():
    ring = RingContext(["x", "y"])
    gens = parse_generators("x^2 - y; y^2; ", ring)
    assert len(gens) == 2
