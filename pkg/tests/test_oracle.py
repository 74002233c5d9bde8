import itertools

import pytest

from diagharm.config import Config
from diagharm.oracle import (
    TABLE1,
    BruteForceIndex,
    Report,
    brute_force_index,
    hilbert_parking,
    interpolate_dimension_poly,
    recursion_identity_holds,
    table1_polynomial,
    verify_oracle,
    verify_sharpness,
    verify_stability,
    verify_table1,
)
from diagharm.combinat import iter_parking_functions, pf_stats
from diagharm.polyalg import DimensionPolynomial
from diagharm.schedules import BivariateSeries, hilbert_schedules
from diagharm.stability import dimension_polynomial


def test_table1_reference():
    assert len(TABLE1) == 10
    assert table1_polynomial(1, 1) == DimensionPolynomial([0, -2, 1])
    assert table1_polynomial(0, 3) == table1_polynomial(3, 0)
    with pytest.raises(ValueError):
        table1_polynomial(4, 0)


def test_hilbert_parking_small():
    assert hilbert_parking(1) == BivariateSeries.one()
    assert hilbert_parking(2) == BivariateSeries({(0, 0): 1, (1, 0): 1, (0, 1): 1})
    assert hilbert_parking(3).total() == 16
    with pytest.raises(ValueError):
        hilbert_parking(0)


@pytest.mark.parametrize("n", range(1, 5))
def test_hilbert_parking_matches_direct_enumeration(n):
    direct = BivariateSeries()
    for parking_function in iter_parking_functions(n):
        area, dinv = pf_stats(parking_function)
        direct.add_monomial(dinv, area, 1)
    assert hilbert_parking(n) == direct


@pytest.mark.parametrize("n", range(1, 7))
def test_parking_matches_schedules(n):
    assert hilbert_parking(n) == hilbert_schedules(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_parking_matches_schedules_large(n):
    parking = hilbert_parking(n)
    assert parking == hilbert_schedules(n)
    assert parking.total() == (n + 1) ** (n - 1)


def test_brute_force_index():
    index = BruteForceIndex(4)
    assert index.count((1,), (2,)) == 1
    assert index.witness((1,), (2,)) == (3, 1, 2, 4)
    assert index.witness((2,), (3, 1)) is None
    # Every permutation has some descent set; the empty one is the identity.
    assert index.count((), ()) == 1
    with pytest.raises(ValueError):
        index.count((2,), (1,))


def test_brute_force_index_from_config():
    index = BruteForceIndex.from_config(Config(), n=3)
    assert index.n == 3
    with pytest.raises(ValueError):
        BruteForceIndex.from_config(Config(), n=11)


def test_recursion_identity(small_states):
    for state in small_states:
        for n in range(state.last_descent + 1, 7):
            assert recursion_identity_holds(state, n)


@pytest.mark.slow
def test_recursion_identity_full(medium_states):
    assert len(medium_states) >= 200
    for state in medium_states:
        for n in range(state.last_descent + 1, 8):
            assert recursion_identity_holds(state, n)


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (1, 1), (2, 1), (1, 2), (2, 2)])
def test_interpolation_matches_recursion(a, b):
    assert interpolate_dimension_poly(a, b) == dimension_polynomial(a, b)


def test_interpolation_examples():
    assert interpolate_dimension_poly(1, 1) == DimensionPolynomial([0, -2, 1])
    assert interpolate_dimension_poly(0, 0) == DimensionPolynomial([1])
    with pytest.raises(ValueError):
        interpolate_dimension_poly(3, 3, max_n=10)


@pytest.mark.slow
@pytest.mark.parametrize(
    "a,b", [(a, b) for a, b in itertools.product(range(6), repeat=2) if 3 <= a + b <= 5]
)
def test_interpolation_matches_recursion_large(a, b):
    assert interpolate_dimension_poly(a, b) == dimension_polynomial(a, b)


def test_report():
    report = Report("demo")
    assert report.passed
    assert report.check("one", 1, 1)
    assert not report.check("two", 2, 3)
    assert (report.num_passed, report.num_failed) == (1, 1)
    document = report.as_dict()
    assert document["status"] == "fail"
    assert document["checks"][1] == {
        "check": "two", "expected": "2", "actual": "3", "passed": False
    }


def test_verification_suites_pass():
    assert verify_table1(2).passed
    assert verify_oracle(5).passed
    assert verify_stability(max_ab=2, max_n=6, knuth_max_m=10).passed
    assert verify_sharpness(max_ab=2, max_n=6).passed
    assert verify_sharpness(pairs=[(1, 1)]).num_passed == 1


@pytest.mark.slow
def test_verification_suites_pass_full():
    assert verify_table1(3).passed
    assert verify_stability(max_ab=3, max_n=8).passed
    assert verify_sharpness(max_ab=3, max_n=8).passed
