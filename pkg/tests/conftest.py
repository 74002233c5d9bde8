import itertools
from typing import List

import pytest

from diagharm.stability import CountingState


def _states(max_last_descent: int, max_value: int) -> List[CountingState]:
    states = []
    for s_d in range(1, max_last_descent + 1):
        for inner in itertools.chain.from_iterable(
            itertools.combinations(range(1, s_d), size) for size in range(s_d)
        ):
            S = tuple(inner) + (s_d,)
            for tau in itertools.product(range(1, max_value + 1), repeat=s_d):
                for size in range(s_d + 1):
                    for U in itertools.combinations(range(1, s_d + 1), size):
                        states.append(CountingState(S, tau, U))
    return states


@pytest.fixture(scope="session")
def small_states() -> List[CountingState]:
    r"""Every state with ``max(S) <= 3`` and prefix entries ``<= 3``, over all ``U``."""
    return _states(3, 3)


@pytest.fixture(scope="session")
def medium_states() -> List[CountingState]:
    r"""Every state with ``max(S) <= 4`` and prefix entries ``<= 4``, over all ``U``."""
    return _states(4, 4)
