import random
from fractions import Fraction

from mpdiag.scalars import (ONE, X, ZERO, RationalPolynomial, evaluate, falling_factorial,
                            format_coeff, format_poly)


def test_falling_factorial_small():
    assert falling_factorial(X, 0) == ONE
    assert falling_factorial(X, 2) == X * X - X
    assert falling_factorial(X - 2, 3) == (X - 2) * (X - 3) * (X - 4)


def test_evaluate():
    assert evaluate(X * X - X, 3) == 6
    assert evaluate(ZERO, 17) == 0
    assert evaluate((X - 2) * (X - 3) * (X - 4), 5) == 6


def _rand_poly(rng):
    return RationalPolynomial(Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                              for _ in range(rng.randint(0, 4)))


def test_evaluation_is_a_ring_map():
    rng = random.Random(3)
    for _ in range(200):
        p, q, n = _rand_poly(rng), _rand_poly(rng), rng.randint(-6, 6)
        assert evaluate(p * q, n) == evaluate(p, n) * evaluate(q, n)
        assert evaluate(p + q, n) == evaluate(p, n) + evaluate(q, n)


def test_falling_factorial_recurrence():
    for m in range(6):
        assert falling_factorial(X + 1, m + 1) == falling_factorial(X + 1, m) * (X + 1 - m)


def test_canonical_dense_form():
    assert RationalPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert ZERO.coeffs == ()
    assert (X - X) == ZERO


def test_format():
    assert format_poly((X * X - X) / 2) == "(x^2 - x)/2"
    assert format_poly(X / 4) == "x/4"
    assert format_poly(RationalPolynomial([Fraction(-1, 3)])) == "-1/3"
    assert format_poly(ZERO) == "0"
    assert format_coeff(X - 2) == "(x - 2)"


def test_json_round_trip():
    p = RationalPolynomial([Fraction(1, 2), 0, Fraction(-7, 3)])
    assert RationalPolynomial.from_json(p.to_json()) == p
    assert p.to_json() == {"num": [1, 0, -7], "den": [2, 1, 3]}
