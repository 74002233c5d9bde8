r"""
Permutation and parking-function combinatorics: descents, runs, major index, w-sequences, and
the enumeration streams consumed by the Schedules Formula and the brute-force oracles.

Permutations are tuples in one-line notation over ``1..n``. Positions are 1-based throughout,
matching the usual convention for descent sets.
"""
import itertools
from typing import Iterator, List, Sequence, Tuple

# One-line notation over 1..n.
Permutation = Tuple[int, ...]

# Strictly increasing descent positions s_1 < ... < s_d.
DescentSet = Tuple[int, ...]

# Positive integers w_1, ..., w_n.
WSequence = Tuple[int, ...]


def descents(sigma: Sequence[int]) -> DescentSet:
    return tuple(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


def maj(sigma: Sequence[int]) -> int:
    return sum(descents(sigma))


def inversions(sigma: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(sigma)), 2) if sigma[i] > sigma[j])


def runs(sigma: Sequence[int]) -> List[Tuple[int, int]]:
    r"""
    Maximal increasing contiguous blocks of ``sigma`` as inclusive 1-based ``(start, end)``
    position intervals. The empty permutation has no runs.
    """
    blocks: List[Tuple[int, int]] = []
    start = 1
    for i in range(1, len(sigma) + 1):
        if i == len(sigma) or sigma[i - 1] > sigma[i]:
            blocks.append((start, i))
            start = i + 1
    return blocks


def wseq(sigma: Sequence[int]) -> WSequence:
    r"""
    The w-sequence of a permutation: ``w_i`` counts the entries after ``sigma_i`` in its own run
    (all of them exceed ``sigma_i``) plus the entries of the next run smaller than ``sigma_i``.
    A sentinel ``0`` appended after the last entry acts as a one-element final run, so every
    entry of the last run picks up one extra unit.

    Examples
    --------
    >>> wseq((4, 2, 5, 1, 3, 8, 6, 7, 9))
    (1, 2, 2, 2, 1, 2, 3, 2, 1)
    """
    blocks = runs(sigma)
    values = [0] * len(sigma)
    for index, (start, end) in enumerate(blocks):
        if index + 1 < len(blocks):
            next_start, next_end = blocks[index + 1]
            following = sigma[next_start - 1 : next_end]
        else:
            following = (0,)

        # Both blocks are increasing: a single forward pointer counts smaller entries.
        pointer = 0
        for i in range(start, end + 1):
            while pointer < len(following) and following[pointer] < sigma[i - 1]:
                pointer += 1
            values[i - 1] = (end - i) + pointer
    return tuple(values)


def iter_permutations(n: int) -> Iterator[Permutation]:
    r"""All permutations of ``1..n`` in lexicographic order; one empty tuple for ``n = 0``."""
    if n < 0:
        raise ValueError(f"Permutation length must be non-negative, got {n}.")
    return itertools.permutations(range(1, n + 1))


def iter_permutation_block(n: int, first: int) -> Iterator[Permutation]:
    r"""
    Permutations of ``1..n`` starting with ``first``, in lexicographic order. The blocks for
    ``first = 1, ..., n`` partition the stream of :func:`iter_permutations`, in that order.
    """
    if not 1 <= first <= n:
        raise ValueError(f"Block head must lie in 1..{n}, got {first}.")
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in itertools.permutations(rest):
        yield (first,) + tail


def iter_permutation_blocks(n: int) -> List[Iterator[Permutation]]:
    r"""The ``n`` disjoint blocks of :func:`iter_permutation_block`, by increasing first entry."""
    return [iter_permutation_block(n, first) for first in range(1, n + 1)]


# ------------------------------------------------------------------------------------------------
#   Parking functions
# ------------------------------------------------------------------------------------------------


def is_parking_function(preferences: Sequence[int]) -> bool:
    ordered = sorted(preferences)
    return all(1 <= p <= i for i, p in enumerate(ordered, start=1))


class ParkingFunction(object):
    r"""
    A parking function given by its preference sequence: car ``c`` (for ``c = 1..n``) prefers
    spot ``preferences[c - 1]``.

    Extended Summary
    ----------------
    Viewed as a labeled Dyck path, column ``j`` holds the cars preferring spot ``j``, stacked
    with increasing labels. Rows are numbered bottom to top; row ``r`` sitting in column ``j``
    has ``r - j`` full cells between the path and the diagonal. ``area`` sums those, ``dinv``
    counts pairs of rows ``r < s`` with equal areas and ``label_r < label_s``, or with
    ``area_r = area_s + 1`` and ``label_r > label_s``.

    Parameters
    ----------
    preferences: Sequence[int]
        A sequence whose sorted version ``p`` satisfies ``p_i <= i``.
    """

    def __init__(self, preferences: Sequence[int]):
        self.preferences: Tuple[int, ...] = tuple(preferences)
        if not is_parking_function(self.preferences):
            raise ValueError(f"{self.preferences} is not a parking function.")

    def __len__(self) -> int:
        return len(self.preferences)

    def _rows(self) -> List[Tuple[int, int]]:
        # (column, label) for every row, bottom to top.
        return sorted((spot, car) for car, spot in enumerate(self.preferences, start=1))

    def labels(self) -> Tuple[int, ...]:
        return tuple(label for _, label in self._rows())

    def area_sequence(self) -> Tuple[int, ...]:
        return tuple(row - column for row, (column, _) in enumerate(self._rows(), start=1))

    @property
    def area(self) -> int:
        return sum(self.area_sequence())

    @property
    def dinv(self) -> int:
        areas = self.area_sequence()
        labels = self.labels()
        total = 0
        for r, s in itertools.combinations(range(len(areas)), 2):
            if areas[r] == areas[s] and labels[r] < labels[s]:
                total += 1
            elif areas[r] == areas[s] + 1 and labels[r] > labels[s]:
                total += 1
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParkingFunction):
            return NotImplemented
        return self.preferences == other.preferences

    def __hash__(self) -> int:
        return hash(self.preferences)

    def __repr__(self) -> str:
        return f"ParkingFunction({self.preferences})"


def pf_stats(parking_function: ParkingFunction) -> Tuple[int, int]:
    r"""Return ``(area, dinv)`` of a parking function."""
    return parking_function.area, parking_function.dinv


def iter_parking_functions(n: int) -> Iterator[ParkingFunction]:
    r"""
    All parking functions of length ``n`` as preference sequences, in lexicographic order.
    A prefix is only extended while some completion is still a parking function: with ``r``
    entries left to fill (best case all ones), the sorted prefix must satisfy
    ``p_i <= r + i``.
    """
    if n < 1:
        raise ValueError(f"Parking functions need length n >= 1, got {n}.")

    prefix: List[int] = []

    def _completable() -> bool:
        remaining = n - len(prefix)
        return all(p <= remaining + i for i, p in enumerate(sorted(prefix), start=1))

    def _extend() -> Iterator[ParkingFunction]:
        if len(prefix) == n:
            yield ParkingFunction(prefix)
            return
        for spot in range(1, n + 1):
            prefix.append(spot)
            if _completable():
                yield from _extend()
            prefix.pop()

    return _extend()


def iter_dyck_area_sequences(n: int) -> Iterator[Tuple[int, ...]]:
    r"""
    Area sequences of Dyck paths of size ``n``: ``a_1 = 0`` and ``0 <= a_{i+1} <= a_i + 1``.
    There are Catalan-many of them.
    """
    if n < 1:
        raise ValueError(f"Dyck paths need size n >= 1, got {n}.")

    def _extend(prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield prefix
            return
        for value in range(prefix[-1] + 2):
            yield from _extend(prefix + (value,))

    return _extend((0,))
