import itertools
import math

import pytest

from diagharm.combinat import (
    ParkingFunction,
    descents,
    inversions,
    is_parking_function,
    iter_dyck_area_sequences,
    iter_parking_functions,
    iter_permutation_block,
    iter_permutation_blocks,
    iter_permutations,
    maj,
    pf_stats,
    runs,
    wseq,
)
from diagharm.polyalg import QPolynomial, q_factorial, q_integer


SIGMA = (4, 2, 5, 1, 3, 8, 6, 7, 9)


def test_statistics_of_worked_permutation():
    assert descents(SIGMA) == (1, 3, 6)
    assert maj(SIGMA) == 10
    assert runs(SIGMA) == [(1, 1), (2, 3), (4, 6), (7, 9)]
    assert wseq(SIGMA) == (1, 2, 2, 2, 1, 2, 3, 2, 1)


def test_wseq_small():
    assert wseq((1,)) == (1,)
    assert wseq((1, 2)) == (2, 1)
    assert wseq((2, 1)) == (1, 1)
    assert wseq((1, 2, 3)) == (3, 2, 1)
    assert wseq((7, 9, 6, 8, 1, 5, 10, 2, 3, 4)) == (2, 2, 3, 2, 2, 4, 3, 3, 2, 1)


def test_wseq_tail_is_forced():
    # Positions after the last descent always read n - i + 1.
    for sigma in iter_permutations(6):
        S = descents(sigma)
        s_d = S[-1] if S else 0
        assert wseq(sigma)[s_d:] == tuple(6 - i + 1 for i in range(s_d + 1, 7))


def test_inversions():
    assert inversions((3, 1, 2)) == 2
    assert inversions((1, 2, 3)) == 0
    # maj and inv are equidistributed
    assert sorted(maj(s) for s in iter_permutations(5)) == sorted(
        inversions(s) for s in iter_permutations(5)
    )


def test_permutation_streams():
    assert list(iter_permutations(0)) == [()]
    assert len(list(iter_permutations(4))) == 24

    blocks = iter_permutation_blocks(4)
    assert len(blocks) == 4
    assert list(itertools.chain.from_iterable(blocks)) == list(iter_permutations(4))
    assert all(sigma[0] == 2 for sigma in iter_permutation_block(4, 2))

    with pytest.raises(ValueError):
        list(iter_permutation_block(3, 4))
    with pytest.raises(ValueError):
        iter_permutations(-1)


def test_is_parking_function():
    assert is_parking_function((1, 1, 2))
    assert is_parking_function((2, 2, 1))
    assert not is_parking_function((2, 2, 2))
    with pytest.raises(ValueError):
        ParkingFunction((2, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_parking_function_count(n):
    parking_functions = list(iter_parking_functions(n))
    assert len(parking_functions) == (n + 1) ** (n - 1)
    assert len(set(parking_functions)) == len(parking_functions)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(6, 9))
def test_parking_function_count_large(n):
    assert sum(1 for _ in iter_parking_functions(n)) == (n + 1) ** (n - 1)


def test_parking_function_statistics():
    assert pf_stats(ParkingFunction((1, 1))) == (1, 0)
    assert pf_stats(ParkingFunction((1, 2))) == (0, 1)
    assert pf_stats(ParkingFunction((2, 1))) == (0, 0)

    parking_function = ParkingFunction((2, 1, 1))
    assert parking_function.labels() == (2, 3, 1)
    assert parking_function.area_sequence() == (0, 1, 1)
    assert parking_function.area == 2


def test_dyck_area_sequences():
    assert [len(list(iter_dyck_area_sequences(n))) for n in range(1, 6)] == [1, 2, 5, 14, 42]
    assert list(iter_dyck_area_sequences(2)) == [(0, 0), (0, 1)]


@pytest.mark.parametrize("n", range(1, 8))
def test_run_condition(n):
    for sigma in iter_permutations(n):
        w = wseq(sigma)
        for start, end in runs(sigma):
            for j in range(start, end):
                assert w[j - 1] <= w[j] + 1


def _w_product(sigma):
    product = q_factorial(0)
    for value in wseq(sigma):
        product = product * q_integer(value)
    return product


@pytest.mark.parametrize("n", range(1, 8))
def test_w_products(n):
    zero_maj = QPolynomial()
    for sigma in iter_permutations(n):
        product = _w_product(sigma)
        assert product.evaluate(1) == math.prod(wseq(sigma))
        if maj(sigma) == 0:
            zero_maj = zero_maj + product
    assert zero_maj == q_factorial(n)
