r"""
Independent ground truth for everything :mod:`diagharm.stability` derives: the Hilbert series
from parking functions, direct counts of constrained permutation sets, stable polynomials
recovered by interpolation, and the verification suites comparing all of them.
"""
from collections import Counter, defaultdict
from fractions import Fraction
import functools
import itertools
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from diagharm.config import Config
from diagharm.combinat import DescentSet, Permutation, descents, iter_dyck_area_sequences
from diagharm.combinat import iter_permutations, wseq
from diagharm.polyalg import DimensionPolynomial, interpolate, knuth_boundary_defect, knuth_poly
from diagharm.polyalg import q_coeff, q_factorial
from diagharm.schedules import BivariateSeries, dim_exact, hilbert_schedules
from diagharm.stability import CountingState, dimension_polynomial, maximal_spots, psi_step
from diagharm.stability import sharpness_report
from diagharm.types import CheckRecord, ReportDocument


# fmt: off
# Stable polynomials P_{a,b}(n) for a >= b, ascending coefficients; P_{b,a} = P_{a,b}.
TABLE1: Dict[Tuple[int, int], List[Fraction]] = {
    (0, 0): [Fraction(1)],
    (1, 0): [Fraction(-1), Fraction(1)],
    (2, 0): [Fraction(-1), Fraction(-1, 2), Fraction(1, 2)],
    (3, 0): [Fraction(0), Fraction(-7, 6), Fraction(0), Fraction(1, 6)],
    (1, 1): [Fraction(0), Fraction(-2), Fraction(1)],
    (2, 1): [Fraction(1), Fraction(-3, 2), Fraction(-1), Fraction(1, 2)],
    (3, 1): [Fraction(1), Fraction(2, 3), Fraction(-5, 3), Fraction(-1, 6), Fraction(1, 6)],
    (2, 2): [Fraction(1), Fraction(1), Fraction(-7, 4), Fraction(-1, 2), Fraction(1, 4)],
    (3, 2): [Fraction(1), Fraction(13, 6), Fraction(1, 12), Fraction(-5, 4), Fraction(-1, 12),
             Fraction(1, 12)],
    (3, 3): [Fraction(-1), Fraction(3), Fraction(19, 9), Fraction(-1, 2), Fraction(-23, 36),
             Fraction(0), Fraction(1, 36)],
}
# fmt: on


def table1_polynomial(a: int, b: int) -> DimensionPolynomial:
    r"""Reference value of ``P_{a,b}`` for ``0 <= a, b <= 3``."""
    key = (a, b) if a >= b else (b, a)
    if key not in TABLE1:
        raise ValueError(f"No reference polynomial for bidegree ({a}, {b}).")
    return DimensionPolynomial(TABLE1[key])


# ------------------------------------------------------------------------------------------------
#   Parking functions
# ------------------------------------------------------------------------------------------------


def _column_sizes(area: Sequence[int]) -> Tuple[int, ...]:
    # A row starts a new column unless its area grows by one over the row below.
    sizes: List[int] = []
    for r, value in enumerate(area):
        if r > 0 and value == area[r - 1] + 1:
            sizes[-1] += 1
        else:
            sizes.append(1)
    return tuple(sizes)


@functools.lru_cache(maxsize=None)
def _labelings(sizes: Tuple[int, ...]) -> np.ndarray:
    r"""
    Every way to place labels ``1..n`` on the rows of consecutive columns of the given sizes,
    increasing within each column, as an array of shape ``(count, n)``.
    """
    rows: List[Tuple[int, ...]] = []

    def _fill(remaining: Tuple[int, ...], column: int, prefix: Tuple[int, ...]):
        if column == len(sizes):
            rows.append(prefix)
            return
        for chosen in itertools.combinations(remaining, sizes[column]):
            rest = tuple(label for label in remaining if label not in chosen)
            _fill(rest, column + 1, prefix + chosen)

    _fill(tuple(range(1, sum(sizes) + 1)), 0, ())
    return np.array(rows, dtype=np.int64)


def hilbert_parking(n: int, show_progress: bool = False) -> BivariateSeries:
    r"""
    ``sum_P q^dinv(P) t^area(P)`` over parking functions of length ``n``.

    Extended Summary
    ----------------
    Parking functions are grouped by their Dyck path: the area sequence fixes ``area`` and
    the column structure, and the labelings increasing up every column enumerate the group.
    ``dinv`` is evaluated for all labelings of a path at once with ``numpy``. The result is
    identical to summing :func:`~diagharm.combinat.pf_stats` over
    :func:`~diagharm.combinat.iter_parking_functions`.
    """
    if n < 1:
        raise ValueError(f"Parking functions need length n >= 1, got {n}.")

    series = BivariateSeries()
    for area in tqdm(list(iter_dyck_area_sequences(n)), desc=f"parking n={n}",
                     disable=not show_progress):
        labels = _labelings(_column_sizes(area))
        dinv = np.zeros(labels.shape[0], dtype=np.int64)
        for r, s in itertools.combinations(range(n), 2):
            if area[r] == area[s]:
                dinv += labels[:, r] < labels[:, s]
            elif area[r] == area[s] + 1:
                dinv += labels[:, r] > labels[:, s]

        total_area = sum(area)
        for value, count in enumerate(np.bincount(dinv)):
            if count:
                series.add_monomial(value, total_area, int(count))
    return series


# ------------------------------------------------------------------------------------------------
#   Brute-force counting
# ------------------------------------------------------------------------------------------------


class BruteForceIndex(object):
    r"""
    ``S_n`` enumerated once and bucketed by descent set, each bucket counting the w-prefixes
    up to the last descent. Any number of ``(S, tau, U)`` queries are then answered from the
    buckets alone.

    Parameters
    ----------
    n: int
        Permutation length.
    show_progress: bool, optional (default = False)
        Show a ``tqdm`` bar while enumerating.
    """

    def __init__(self, n: int, show_progress: bool = False):
        if n < 0:
            raise ValueError(f"Permutation length must be non-negative, got {n}.")
        self.n = n
        self._buckets: Dict[DescentSet, Counter] = defaultdict(Counter)
        self._witnesses: Dict[Tuple[DescentSet, Tuple[int, ...]], Permutation] = {}

        for sigma in tqdm(iter_permutations(n), desc=f"index n={n}", disable=not show_progress):
            S = descents(sigma)
            prefix = wseq(sigma)[: S[-1] if S else 0]
            self._buckets[S][prefix] += 1
            self._witnesses.setdefault((S, prefix), sigma)

    @classmethod
    def from_config(cls, config: Config, **kwargs):
        r"""Instantiate this class directly from a :class:`~diagharm.config.Config`."""
        _C = config
        n = kwargs.pop("n")
        if n > _C.ENUMERATION.MAX_SCHEDULES_N:
            raise ValueError(
                f"n = {n} exceeds ENUMERATION.MAX_SCHEDULES_N = {_C.ENUMERATION.MAX_SCHEDULES_N}."
            )
        return cls(n=n, show_progress=_C.ENUMERATION.SHOW_PROGRESS)

    def count(self, S: Sequence[int], tau: Sequence[int], U: Iterable[int] = ()) -> int:
        r"""
        Number of permutations with descent set exactly ``S`` and ``w_i = tau_i`` off ``U``,
        ``w_i >= tau_i`` on ``U``.
        """
        S, tau, lower = tuple(S), tuple(tau), set(U)
        s_d = S[-1] if S else 0
        if len(tau) != s_d:
            raise ValueError(f"tau must have length max(S) = {s_d}, got {len(tau)}.")

        total = 0
        for prefix, multiplicity in self._buckets.get(S, Counter()).items():
            if all(
                w >= t if i in lower else w == t
                for i, (w, t) in enumerate(zip(prefix, tau), start=1)
            ):
                total += multiplicity
        return total

    def witness(self, S: Sequence[int], tau: Sequence[int]) -> Optional[Permutation]:
        r"""Lexicographically first permutation with descent set ``S`` and w-prefix ``tau``."""
        return self._witnesses.get((tuple(S), tuple(tau)))


@functools.lru_cache(maxsize=None)
def brute_force_index(n: int) -> BruteForceIndex:
    return BruteForceIndex(n)


def count_bruteforce(S: Sequence[int], tau: Sequence[int], U: Iterable[int], n: int) -> int:
    r"""``|D_S ∩ W(tau, U)|`` at length ``n`` by exhaustive enumeration of ``S_n``."""
    return brute_force_index(n).count(S, tau, U)


def recursion_identity_holds(state: CountingState, n: int) -> bool:
    r"""
    Whether the brute-force count at length ``n`` equals the sum of brute-force counts at
    ``n - 1`` of the ψ-children over every maximal spot at length ``n``.
    """
    expected = count_bruteforce(state.S, state.tau, state.U, n)
    total = 0
    for spot in maximal_spots(state, n):
        for child in psi_step(state, spot, n):
            total += count_bruteforce(child.S, child.tau, child.U, n - 1)
    return expected == total


def interpolate_dimension_poly(a: int, b: int, max_n: int = 10) -> DimensionPolynomial:
    r"""
    Recover ``P_{a,b}`` from exact dimensions alone: the polynomial has degree at most
    ``a + b`` and is exact from ``n = a + b``, so it is the interpolant through
    ``n = a + b, ..., 2 (a + b)``.

    Parameters
    ----------
    max_n: int, optional (default = 10)
        Largest ``n`` the Schedules Formula may be evaluated at.
    """
    if a < 0 or b < 0:
        raise ValueError(f"Bidegree must be non-negative, got ({a}, {b}).")
    if 2 * (a + b) > max_n:
        raise ValueError(
            f"Interpolating P_({a},{b}) needs n up to {2 * (a + b)}, beyond the enumeration "
            f"bound {max_n}; use the recursion method instead."
        )
    samples = [(n, dim_exact(n, a, b)) for n in range(a + b, 2 * (a + b) + 1)]
    return interpolate(samples)


# ------------------------------------------------------------------------------------------------
#   Verification reports
# ------------------------------------------------------------------------------------------------


class Report(object):
    r"""
    Collects named comparisons of a verification suite. The report passes when every check
    does; an empty report passes.

    Parameters
    ----------
    subject: str
        What is being verified, for example ``"table1"``.
    """

    def __init__(self, subject: str):
        self.subject = subject
        self.checks: List[CheckRecord] = []

    def check(self, name: str, expected: Any, actual: Any) -> bool:
        passed = bool(expected == actual)
        self.checks.append(
            CheckRecord(check=name, expected=str(expected), actual=str(actual), passed=passed)
        )
        return passed

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def num_passed(self) -> int:
        return sum(1 for record in self.checks if record["passed"])

    @property
    def num_failed(self) -> int:
        return len(self.checks) - self.num_passed

    @property
    def passed(self) -> bool:
        return self.num_failed == 0

    def as_dict(self) -> ReportDocument:
        return ReportDocument(
            schema="diagharm/1",
            kind="report",
            subject=self.subject,
            checks=list(self.checks),
            passed=self.num_passed,
            failed=self.num_failed,
            status="pass" if self.passed else "fail",
        )


def verify_table1(max_ab: int = 3, assembly: str = "lower-bound-k1") -> Report:
    report = Report("table1")
    for a, b in itertools.product(range(max_ab + 1), repeat=2):
        report.check(
            f"P({a},{b})", table1_polynomial(a, b), dimension_polynomial(a, b, assembly)
        )
    return report


def verify_oracle(max_n: int = 8, threads: int = 1, show_progress: bool = False) -> Report:
    report = Report("oracle")
    for n in range(1, max_n + 1):
        schedules = hilbert_schedules(n, threads=threads, show_progress=show_progress)
        parking = hilbert_parking(n, show_progress=show_progress)
        report.check(f"schedules=parking n={n}", schedules, parking)
        report.check(f"total n={n}", (n + 1) ** (n - 1), schedules.total())
        report.check(f"q<->t symmetry n={n}", schedules, schedules.transpose())
    return report


def verify_stability(
    max_ab: int = 3, max_n: int = 8, assembly: str = "lower-bound-k1", knuth_max_m: int = 20
) -> Report:
    report = Report("stability")
    for a, b in itertools.product(range(max_ab + 1), repeat=2):
        P = dimension_polynomial(a, b, assembly)
        for n in range(a + b, max_n + 1):
            report.check(f"P({a},{b})({n}) = dim", dim_exact(n, a, b), P(n))
        report.check(f"deg P({a},{b})", a + b, P.degree)
        report.check(
            f"assemblies agree ({a},{b})",
            dimension_polynomial(a, b, "lower-bound-k1"),
            dimension_polynomial(a, b, "lower-bound-k2"),
        )

    for m in range(knuth_max_m + 1):
        for k in range(m + 1):
            expected = q_coeff(q_factorial(m), k)
            report.check(f"knuth [q^{k}][{m}]!", expected, knuth_poly(k, 0)(m))
    for m in range(1, min(knuth_max_m, 15) + 1):
        report.check(f"knuth defect m={m}", -1, knuth_boundary_defect(m))
    return report


def verify_sharpness(
    max_ab: int = 3, max_n: int = 8, pairs: Optional[Sequence[Tuple[int, int]]] = None
) -> Report:
    report = Report("sharpness")
    if pairs is None:
        pairs = [
            (a, b)
            for a, b in itertools.product(range(1, max_ab + 1), repeat=2)
            if a + b - 1 <= max_n - 1
        ]
    for a, b in pairs:
        record = sharpness_report(a, b)
        name = "P({},{})({}) = {} < {}".format(
            a, b, record["n"], record["poly_value_at_boundary"], record["true_dim"]
        )
        report.check(name, True, record["strict"])
    return report


def verify_all(
    max_ab: int = 3,
    oracle_max_n: int = 8,
    stable_max_n: int = 8,
    assembly: str = "lower-bound-k1",
    threads: int = 1,
    show_progress: bool = False,
) -> Report:
    report = Report("all")
    report.extend(verify_table1(max_ab, assembly))
    report.extend(verify_oracle(oracle_max_n, threads, show_progress))
    report.extend(verify_stability(max_ab, stable_max_n, assembly))
    report.extend(verify_sharpness(max_ab, stable_max_n))
    return report
