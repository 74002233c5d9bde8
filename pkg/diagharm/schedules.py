r"""
The Schedules Formula: the bigraded Hilbert series of the diagonal coinvariants ``DR_n`` as

.. math::

    \mathrm{Hilb}(DR_n; q, t) = \sum_{\sigma \in S_n} t^{\mathrm{maj}(\sigma)}
                                \prod_{i=1}^{n} [w_i(\sigma)]_q,

evaluated exactly over the permutation stream, and the individual bigraded dimensions read off
from it.
"""
from collections import Counter
import functools
from typing import Dict, Iterable, List, Optional, Tuple

from diagharm.combinat import Permutation, WSequence, iter_permutation_block, maj, wseq
from diagharm.polyalg import QPolynomial, q_integer
from diagharm.utils.common import reduce_blocks


class BivariateSeries(object):
    r"""
    A finite series in ``q`` and ``t`` with non-negative integer coefficients, stored sparsely
    as ``{(a, b): c}`` for the monomial ``c q^a t^b``. Zero coefficients are never stored.

    Parameters
    ----------
    coefficients: Dict[Tuple[int, int], int], optional (default = None)
        Initial table, keyed by ``(q-degree, t-degree)``.
    """

    def __init__(self, coefficients: Optional[Dict[Tuple[int, int], int]] = None):
        self._table: Dict[Tuple[int, int], int] = {}
        for (a, b), c in (coefficients or {}).items():
            self._accumulate(a, b, c)

    @classmethod
    def one(cls) -> "BivariateSeries":
        return cls({(0, 0): 1})

    def _accumulate(self, a: int, b: int, c: int) -> None:
        if a < 0 or b < 0:
            raise ValueError(f"Series degrees must be non-negative, got ({a}, {b}).")
        value = self._table.get((a, b), 0) + int(c)
        if value < 0:
            raise ValueError(f"Coefficient of q^{a} t^{b} would become negative.")
        if value == 0:
            self._table.pop((a, b), None)
        else:
            self._table[(a, b)] = value

    def add_monomial(self, a: int, b: int, c: int) -> None:
        r"""Add ``c q^a t^b`` in place."""
        self._accumulate(a, b, c)

    def add_term(self, b: int, qpoly: QPolynomial, multiplicity: int = 1) -> None:
        r"""Add ``multiplicity * t^b * qpoly`` in place."""
        for a, c in enumerate(qpoly.coeffs):
            if c != 0:
                self._accumulate(a, b, c * multiplicity)

    def coefficient(self, a: int, b: int) -> int:
        return self._table.get((a, b), 0)

    def total(self) -> int:
        r"""The series evaluated at ``q = t = 1``."""
        return sum(self._table.values())

    def transpose(self) -> "BivariateSeries":
        return BivariateSeries({(b, a): c for (a, b), c in self._table.items()})

    def entries(self) -> List[Tuple[int, int, int]]:
        r"""All ``(a, b, c)`` triples, sorted by t-degree and then q-degree."""
        return [(a, b, c) for (a, b), c in sorted(self._table.items(), key=lambda x: x[0][::-1])]

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        result = BivariateSeries(self._table)
        for (a, b), c in other._table.items():
            result._accumulate(a, b, c)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self._table == other._table

    def __len__(self) -> int:
        return len(self._table)

    def __str__(self) -> str:
        if not self._table:
            return "0"
        terms = []
        for a, b, c in self.entries():
            monomial = "".join(
                [
                    "" if a == 0 else ("q" if a == 1 else f"q^{a}"),
                    "" if b == 0 else ("t" if b == 1 else f"t^{b}"),
                ]
            )
            terms.append(monomial if (monomial and c == 1) else f"{c}{monomial}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"BivariateSeries({dict(sorted(self._table.items()))})"


@functools.lru_cache(maxsize=None)
def _q_integer_product(values: Tuple[int, ...]) -> QPolynomial:
    if not values:
        return QPolynomial([1])
    return _q_integer_product(values[:-1]) * q_integer(values[-1])


def schedules_term(sigma: Permutation) -> Tuple[int, QPolynomial]:
    r"""
    The contribution ``t^maj(sigma) * prod [w_i(sigma)]_q`` of a single permutation, returned
    as its t-exponent and its q-polynomial.
    """
    return maj(sigma), _q_integer_product(tuple(sorted(wseq(sigma))))


def _bucket_block(task: Tuple[int, int]) -> Counter:
    # Permutations with equal terms are counted once per distinct term.
    n, first = task
    return Counter(schedules_term(sigma) for sigma in iter_permutation_block(n, first))


def hilbert_schedules(n: int, threads: int = 1, show_progress: bool = False) -> BivariateSeries:
    r"""
    Evaluate the Schedules Formula for ``DR_n`` exactly.

    Parameters
    ----------
    n: int
        Number of variables in each set. ``n = 0`` gives the series ``1``.
    threads: int, optional (default = 1)
        Worker processes; the permutation stream is split into ``n`` blocks by first entry.
    show_progress: bool, optional (default = False)
        Show a ``tqdm`` bar over finished blocks.

    Returns
    -------
    BivariateSeries
        ``sum_sigma t^maj(sigma) prod_i [w_i(sigma)]_q``.
    """
    if n < 0:
        raise ValueError(f"Number of variables must be non-negative, got {n}.")
    if n == 0:
        return BivariateSeries.one()

    partials = reduce_blocks(
        _bucket_block,
        [(n, first) for first in range(1, n + 1)],
        threads=threads,
        show_progress=show_progress,
        desc=f"schedules n={n}",
    )
    buckets: Counter = Counter()
    for partial in partials:
        buckets.update(partial)

    series = BivariateSeries()
    for (major, qpoly), multiplicity in buckets.items():
        series.add_term(major, qpoly, multiplicity)
    return series


@functools.lru_cache(maxsize=None)
def _cached_series(n: int) -> BivariateSeries:
    return hilbert_schedules(n)


def dim_exact(n: int, a: int, b: int) -> int:
    r"""
    ``dim DR_n^{a,b}``, the coefficient of ``q^a t^b`` in :func:`hilbert_schedules`. Series are
    cached per ``n``, so sweeping over many bidegrees enumerates ``S_n`` once.
    """
    if a < 0 or b < 0:
        return 0
    return _cached_series(n).coefficient(a, b)


def truncate_w(w: WSequence, k: int) -> WSequence:
    r"""
    Replace every value ``y`` by ``min(y, k + 1)``. Coefficients of ``q^j`` for ``j <= k`` in
    ``prod [w_i]_q`` are unchanged by this truncation.
    """
    return tuple(min(y, k + 1) for y in w)


def prefix_coefficient(w: Iterable[int], k: int) -> int:
    r"""Coefficient of ``q^k`` in ``prod_i [w_i]_q`` over the given values."""
    values = tuple(sorted(w))
    product = _q_integer_product(values)
    return product.coeffs[k] if 0 <= k <= product.degree else 0
