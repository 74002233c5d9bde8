from fractions import Fraction
import math
import random

import pytest

from diagharm.polyalg import (
    DimensionPolynomial,
    QPolynomial,
    binomial_poly,
    interpolate,
    knuth_boundary_defect,
    knuth_poly,
    pentagonal_term_counts,
    poly_sum_range,
    power_sum_poly,
    q_coeff,
    q_factorial,
    q_integer,
)


def test_q_integer_and_factorial():
    assert q_integer(3) == QPolynomial([1, 1, 1])
    assert q_integer(0).is_zero()
    assert q_factorial(0) == QPolynomial([1])
    assert q_factorial(3) == QPolynomial([1, 2, 2, 1])
    assert q_factorial(4).evaluate(1) == 24
    assert q_factorial(5).is_symmetric()


@pytest.mark.parametrize("k", range(0, 11))
def test_q_factorial_symmetry_and_mass(k):
    factorial = q_factorial(k)
    assert factorial.is_symmetric()
    assert sum(factorial.coeffs) == math.factorial(k)
    assert factorial.degree == k * (k - 1) // 2


def test_q_coeff():
    assert q_coeff(q_factorial(4), 2) == 5
    assert q_coeff(q_integer(3), 5) == 0
    assert q_coeff(q_factorial(0), 0) == 1


def test_negative_q_analogs_raise():
    with pytest.raises(ValueError):
        q_integer(-1)
    with pytest.raises(ValueError):
        q_factorial(-2)


def test_dimension_polynomial_arithmetic():
    p = DimensionPolynomial([0, -2, 1])
    assert p(4) == 8
    assert p.degree == 2
    assert p.shift(-1) == DimensionPolynomial([3, -4, 1])
    assert p - p == DimensionPolynomial()
    assert (p * 2)(3) == 6
    assert p * DimensionPolynomial([1, 1]) == DimensionPolynomial([0, -2, -1, 1])
    assert DimensionPolynomial([5, 0, 0]).degree == 0
    assert DimensionPolynomial().degree == -1
    assert DimensionPolynomial([1]) == 1


def test_dimension_polynomial_rendering():
    assert str(DimensionPolynomial([0, -2, 1])) == "n^2 - 2n"
    cubic = DimensionPolynomial([0, Fraction(-7, 6), 0, Fraction(1, 6)])
    assert str(cubic) == "1/6 n^3 - 7/6 n"
    assert str(DimensionPolynomial()) == "0"
    assert "frac" in cubic.to_latex()


def test_binomial_poly():
    assert binomial_poly(0, 2)(5) == 10
    assert binomial_poly(-1, 1) == DimensionPolynomial([-1, 1])
    assert binomial_poly(3, -1).is_zero()
    # Analytic continuation below the combinatorial range.
    assert binomial_poly(0, 2)(-1) == 1


@pytest.mark.parametrize("m", range(0, 21))
def test_knuth_poly_matches_q_factorial(m):
    for k in range(m + 1):
        assert knuth_poly(k, 0)(m) == q_coeff(q_factorial(m), k)


def test_knuth_poly_shift_and_degree():
    assert knuth_poly(1, 0) == DimensionPolynomial([-1, 1])
    assert knuth_poly(2, 0) == DimensionPolynomial([-1, Fraction(-1, 2), Fraction(1, 2)])
    assert knuth_poly(0, 5) == DimensionPolynomial([1])
    for k in range(8):
        assert knuth_poly(k, 0).degree == k
    # m = n - shift
    assert knuth_poly(3, 2)(9) == q_coeff(q_factorial(7), 3)


@pytest.mark.parametrize("m", range(1, 16))
def test_knuth_boundary_defect(m):
    assert knuth_boundary_defect(m) == -1


def test_pentagonal_term_counts():
    assert pentagonal_term_counts(0) == (0, 0)
    assert pentagonal_term_counts(1) == (1, 0)
    assert pentagonal_term_counts(2) == (1, 1)
    assert pentagonal_term_counts(5) == (2, 1)
    assert pentagonal_term_counts(7) == (2, 2)


def test_power_sum_poly():
    assert power_sum_poly(0) == DimensionPolynomial([0, 1])
    assert power_sum_poly(1) == DimensionPolynomial([0, Fraction(1, 2), Fraction(1, 2)])
    assert power_sum_poly(2)(4) == 30
    assert power_sum_poly(3)(5) == 225


def test_poly_sum_range():
    ones = DimensionPolynomial([1])
    assert poly_sum_range(ones, 3) == DimensionPolynomial([-2, 1])

    P = DimensionPolynomial([0, -2, 1])
    F = poly_sum_range(P, 4)
    assert F(3) == 0
    assert F(6) == P(4) + P(5) + P(6)
    # Continued below the summation range.
    assert F(2) == -P(3)


def test_interpolate():
    target = DimensionPolynomial([1, Fraction(-3, 2), -1, Fraction(1, 2)])
    points = [(n, target(n)) for n in range(3, 7)]
    assert interpolate(points) == target
    assert interpolate([(0, 1)]) == DimensionPolynomial([1])

    with pytest.raises(ValueError):
        interpolate([(1, 1), (1, 2)])


@pytest.mark.parametrize("p", range(0, 11))
def test_power_sum_poly_matches_direct_sum(p):
    S = power_sum_poly(p)
    total = 0
    for n in range(1, 51):
        total += n ** p
        assert S(n) == total


@pytest.mark.parametrize("seed", range(5))
def test_poly_sum_range_matches_direct_sum(seed):
    rng = random.Random(seed)
    for degree in range(7):
        P = DimensionPolynomial(
            Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(degree + 1)
        )
        for m in range(6):
            F = poly_sum_range(P, m)
            assert F(m - 1) == 0
            for n in range(5, 31):
                assert F(n) == sum(P(i) for i in range(m, n + 1))


@pytest.mark.parametrize("k", range(0, 9))
def test_binomial_poly_matches_comb(k):
    for n in range(k, 15):
        assert binomial_poly(0, k)(n) == math.comb(n, k)


def test_constants_hash_like_scalars():
    assert DimensionPolynomial([3]) == 3 and hash(DimensionPolynomial([3])) == hash(3)
    assert hash(DimensionPolynomial([Fraction(1, 2)])) == hash(Fraction(1, 2))
    assert hash(DimensionPolynomial()) == hash(0)
    assert QPolynomial([2]) == 2 and hash(QPolynomial([2])) == hash(2)
    assert len({DimensionPolynomial([5]), 5, Fraction(5)}) == 1
    assert {QPolynomial([1, 1]): "q + 1"}[q_integer(2)] == "q + 1"
