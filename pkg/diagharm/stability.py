r"""
Stable dimension polynomials of the diagonal coinvariants.

For a descent set ``S`` with last descent ``s_d``, a w-prefix ``tau`` of length ``s_d`` and a
set ``U`` of lower-bound positions, the number of permutations in ``S_n`` with descent set
exactly ``S`` whose w-sequence satisfies ``w_i = tau_i`` (``i`` not in ``U``) and
``w_i >= tau_i`` (``i`` in ``U``) is eventually a polynomial in ``n``. The positions ``s_d + 1``
onwards form the last run, whose w-values are forced to ``n - i + 1``.

The count is computed by deleting the largest entry ``n``. It can only sit at the last
position or at the end of a run (a *maximal spot*); deleting it maps the constrained set
bijectively onto a union of smaller constrained sets. Deleting it from the last position
gives the same constraint at length ``n - 1``, so the count satisfies ``F(n) = F(n - 1) + G(n)``
with ``G`` collecting every other spot, and the recurrence is closed with power sums.

Summing these counts against q-coefficients of the prefix and Knuth's formula for the
q-factorial of the last run gives ``P_{a,b}(n) = dim DR_n^{a,b}`` for ``n >= a + b``.
"""
from fractions import Fraction
import functools
import itertools
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

import anytree

from diagharm.combinat import DescentSet, Permutation, descents, wseq
from diagharm.polyalg import DimensionPolynomial, knuth_poly, poly_sum_range
from diagharm.schedules import dim_exact, prefix_coefficient
from diagharm.types import SharpnessRecord


# Maximal spot standing for the last position, when ``n`` is left symbolic.
LAST = "n"

Spot = Union[int, str]

ASSEMBLIES = ("lower-bound-k1", "lower-bound-k2")


class CountingState(NamedTuple):
    r"""
    A constrained set of permutations ``D_S ∩ W(tau, U)``, hashable and usable as a memo key.

    Attributes
    ----------
    S: Tuple[int, ...]
        Descent positions ``s_1 < ... < s_d``.
    tau: Tuple[int, ...]
        Prescribed w-values for positions ``1..s_d``.
    U: Tuple[int, ...]
        Sorted positions where ``tau`` is only a lower bound.
    """

    S: Tuple[int, ...]
    tau: Tuple[int, ...]
    U: Tuple[int, ...] = ()

    @classmethod
    def from_lists(
        cls, S: Iterable[int], tau: Iterable[int], U: Iterable[int] = ()
    ) -> "CountingState":
        r"""Build a state from user input, raising ``ValueError`` on malformed data."""
        S, tau, U = tuple(S), tuple(tau), tuple(sorted(set(U)))
        for name, values in (("S", S), ("tau", tau), ("U", U)):
            if not all(isinstance(v, int) for v in values):
                raise TypeError(f"{name} must contain integers only, got {values}.")

        if any(s < 1 for s in S) or any(a >= b for a, b in zip(S, S[1:])):
            raise ValueError(f"Descent set must be strictly increasing positive, got {S}.")
        s_d = S[-1] if S else 0
        if len(tau) != s_d:
            raise ValueError(f"tau must have length max(S) = {s_d}, got {len(tau)}.")
        if any(v < 1 for v in tau):
            raise ValueError(f"tau entries must be positive, got {tau}.")
        if any(not 1 <= u <= s_d for u in U):
            raise ValueError(f"Lower-bound positions must lie in 1..{s_d}, got {U}.")
        return cls(S, tau, U)

    @property
    def last_descent(self) -> int:
        return self.S[-1] if self.S else 0

    def canonical(self) -> "CountingState":
        r"""Raise lower bounds lying below the smallest attainable w-value up to it."""
        if not self.U:
            return self
        tau = list(self.tau)
        for i in self.U:
            tau[i - 1] = max(tau[i - 1], w_bounds(self.S, i)[0])
        return CountingState(self.S, tuple(tau), self.U)

    def label(self) -> str:
        r"""
        Runs of ``tau`` separated by dots, lower-bound entries prefixed with ``≥``; for
        example ``1.22.1≥3`` for ``S = {1, 3, 5}``, ``tau = (1, 2, 2, 1, 3)``, ``U = {5}``.
        """
        if not self.S:
            return "∅"
        glue = "" if all(v < 10 for v in self.tau) else " "
        pieces, start = [], 1
        for s in self.S:
            pieces.append(
                glue.join(
                    ("≥" if i in self.U else "") + str(self.tau[i - 1])
                    for i in range(start, s + 1)
                )
            )
            start = s + 1
        return ".".join(pieces)


class RecursionNode(object):
    r"""
    A resolved node of the maximal-spot recursion.

    Parameters
    ----------
    state: CountingState
        The (canonical) constrained set.
    children: List[Tuple[int, CountingState]]
        Non-recurrence children as ``(spot position, child state)`` pairs, one pair per ψ
        branch. The child counts permutations of length ``n - 1``.
    resolved: DimensionPolynomial
        The counting polynomial.
    first_nonzero: Optional[int]
        Smallest length with a nonzero count, ``None`` for an empty set.
    exact_from: int
        Smallest length from which ``resolved`` agrees with the count at every length.
    """

    def __init__(
        self,
        state: CountingState,
        children: List[Tuple[int, CountingState]],
        resolved: DimensionPolynomial,
        first_nonzero: Optional[int],
        exact_from: int,
    ):
        self.state = state
        self.children = children
        self.resolved = resolved
        self.first_nonzero = first_nonzero
        self.exact_from = exact_from

    def __repr__(self) -> str:
        return (
            f"RecursionNode({self.state.label()}: {self.resolved}, "
            f"first_nonzero={self.first_nonzero}, exact_from={self.exact_from})"
        )


# ------------------------------------------------------------------------------------------------
#   Descent sets, bounds and permissibility
# ------------------------------------------------------------------------------------------------


def descent_sets_with_maj(b: int) -> List[DescentSet]:
    r"""
    All descent sets with major index ``b``, i.e. partitions of ``b`` into distinct parts,
    ordered by size and then lexicographically. ``b = 0`` gives the empty set only.
    """
    if b < 0:
        raise ValueError(f"Major index must be non-negative, got {b}.")
    if b == 0:
        return [()]
    result: List[DescentSet] = []
    for size in range(1, b + 1):
        if size * (size + 1) // 2 > b:
            break
        result.extend(c for c in itertools.combinations(range(1, b + 1), size) if sum(c) == b)
    return result


def _run_of(S: Sequence[int], i: int) -> int:
    # 1-based index j of the descent s_j ending the run that contains position i.
    for j, s in enumerate(S, start=1):
        if i <= s:
            return j
    raise ValueError(f"Position {i} lies beyond the last descent of {tuple(S)}.")


def _next_run_size(S: Sequence[int], j: int, n: Optional[int]) -> Optional[int]:
    if j < len(S):
        return S[j] - S[j - 1]
    return None if n is None else n - S[-1]


def w_bounds(S: Sequence[int], i: int, n: Optional[int] = None) -> Tuple[int, Optional[int]]:
    r"""
    Smallest and largest w-value a permutation with descent set ``S`` can have at position
    ``i <= s_d``.

    Extended Summary
    ----------------
    With ``e`` the end of the run containing ``i``, ``w_i = (e - i) + c_i`` where ``c_i``
    counts entries of the next run below ``sigma_i``. So the minimum is ``e - i`` away from a
    descent and ``1`` at a descent, and the maximum adds the size of the next run. When the
    next run is the last one its size ``n - s_d`` grows with ``n``; the maximum is then
    ``None`` (unbounded) unless ``n`` is given.
    """
    S = tuple(S)
    if not S or not 1 <= i <= S[-1]:
        raise ValueError(f"Position must lie in 1..max(S), got {i} for S = {S}.")
    j = _run_of(S, i)
    end = S[j - 1]
    minimum = 1 if i == end else end - i
    size = _next_run_size(S, j, n)
    return minimum, (None if size is None else (end - i) + size)


def is_permissible(S: Sequence[int], tau: Sequence[int], n: Optional[int] = None) -> bool:
    r"""
    Whether ``tau`` is a w-prefix of some permutation with descent set ``S``: every entry
    within its bounds and ``tau_j <= tau_{j+1} + 1`` whenever ``j`` is not a descent. Without
    ``n``, bounds growing with ``n`` are not binding.
    """
    S, tau = tuple(S), tuple(tau)
    s_d = S[-1] if S else 0
    if len(tau) != s_d:
        raise ValueError(f"tau must have length max(S) = {s_d}, got {len(tau)}.")
    if n is not None and S and n <= s_d:
        return False

    for i in range(1, s_d + 1):
        minimum, maximum = w_bounds(S, i, n)
        if tau[i - 1] < minimum or (maximum is not None and tau[i - 1] > maximum):
            return False
    descent_set = set(S)
    return all(
        tau[j - 1] <= tau[j] + 1 for j in range(1, s_d) if j not in descent_set
    )


def _runs(S: Sequence[int]) -> List[Tuple[int, int, int]]:
    # (start, end, j) for every run before the last one.
    result, start = [], 1
    for j, s in enumerate(S, start=1):
        result.append((start, s, j))
        start = s + 1
    return result


def is_feasible(state: CountingState, n: Optional[int] = None) -> bool:
    r"""
    Whether ``D_S ∩ W(tau, U)`` is nonempty (at length ``n``, or for all large ``n``).

    Extended Summary
    ----------------
    Runs are independent: within a run the excess ``c_i = w_i - (e - i)`` must be
    nondecreasing, lie between ``0`` and the next run's size, and be at least ``1`` at the
    descent. Scanning each run left to right with the smallest admissible excess decides
    feasibility; lower-bound positions take the least value compatible with the run so far.
    For ``U`` empty this coincides with :func:`is_permissible`.
    """
    S, tau, U = state
    if not S:
        return n is None or n >= 0
    if n is not None and n <= S[-1]:
        return False

    lower = set(U)
    for start, end, j in _runs(S):
        limit = _next_run_size(S, j, n)
        previous = 0
        for i in range(start, end + 1):
            floor = max(previous, 1 if i == end else 0)
            excess = tau[i - 1] - (end - i)
            if i in lower:
                excess = max(excess, floor)
            elif excess < floor:
                return False
            if limit is not None and excess > limit:
                return False
            previous = excess
    return True


def enumerate_permissible(
    S: Sequence[int], k: int, U: Sequence[int], offset: int = 1
) -> List[Tuple[int, ...]]:
    r"""
    All feasible prefixes with ``tau_l = k + offset`` on ``U`` and ``1 <= tau_l < k + offset``
    elsewhere, in lexicographic order. ``offset = 1`` truncates w-values at ``k + 1``;
    ``offset = 2`` at ``k + 2``.
    """
    S, lower = tuple(S), set(U)
    s_d = S[-1] if S else 0
    if k < 0:
        raise ValueError(f"Truncation level must be non-negative, got {k}.")
    if any(not 1 <= u <= s_d for u in lower):
        raise ValueError(f"Lower-bound positions must lie in 1..{s_d}, got {tuple(U)}.")

    choices = [
        (k + offset,) if i in lower else tuple(range(1, k + offset))
        for i in range(1, s_d + 1)
    ]
    U_sorted = tuple(sorted(lower))
    return [
        tau for tau in itertools.product(*choices) if is_feasible(CountingState(S, tau, U_sorted))
    ]


# ------------------------------------------------------------------------------------------------
#   Maximal spots and the φ / ψ maps
# ------------------------------------------------------------------------------------------------


def maximal_spots(state: CountingState, n: Optional[int] = None) -> List[Spot]:
    r"""
    Positions where the entry ``n`` can sit in a permutation of ``D_S ∩ W(tau, U)``.

    Extended Summary
    ----------------
    The descent ``s_j`` is a spot when

    - ``j = 1`` or the run ending at ``s_j`` has at least two entries,
    - ``tau_{s_j}`` equals the size of the next run (at most that size on ``U``), as ``n``
      exceeds all of it,
    - for ``j >= 2``, ``tau_{s_{j-1}}`` is below the size of the run ending at ``s_j``, which
      contains ``n`` and hence cannot lie entirely below the previous descent.

    The last position is a spot when ``w_{s_d}`` may stay below ``n - s_d``. Without ``n``
    the spots are read for ``n`` large, the last position is reported as :data:`LAST`, and
    ``s_d`` outside ``U`` is dropped: it qualifies only at the single length
    ``n = s_d + tau_{s_d}``.
    """
    S, tau, U = state
    lower = set(U)
    spots: List[Spot] = []
    for j in range(1, len(S) + 1):
        s = S[j - 1]
        length = s - (S[j - 2] if j >= 2 else 0)
        if j >= 2 and length < 2:
            continue
        size = _next_run_size(S, j, n)
        if size is None:
            if s not in lower:
                continue
        elif not (tau[s - 1] <= size if s in lower else tau[s - 1] == size):
            continue
        if j >= 2 and tau[S[j - 2] - 1] >= length:
            continue
        spots.append(s)

    if n is None:
        spots.append(LAST)
    elif not S or S[-1] in lower or tau[S[-1] - 1] < n - S[-1]:
        spots.append(n)
    return spots


def _is_last(state: CountingState, m: Spot) -> bool:
    return m == LAST or (isinstance(m, int) and m > state.last_descent)


def _check_spot(state: CountingState, m: Spot, n: Optional[int]) -> None:
    if m == LAST and n is None:
        return
    if isinstance(m, int) and m > state.last_descent and n is None:
        # The last position names the length.
        n = m
    if m not in maximal_spots(state, n):
        where = "" if n is None else f" at n = {n}"
        raise ValueError(f"{m} is not a maximal spot of {state.label()}{where}.")


def phi_step(state: CountingState, m: Spot, n: Optional[int] = None) -> DescentSet:
    r"""
    Descent set after deleting the entry ``n`` from the maximal spot ``m``.

    Deleting from the last position keeps ``S``. Deleting from ``s_1 = 1`` drops ``s_1`` and
    shifts the rest down. Otherwise, with ``p = m - 1``, the descent moves to ``p`` when
    ``tau_p >= 2`` and disappears when ``tau_p = 1``; later descents shift down.
    """
    _check_spot(state, m, n)
    S, tau, _ = state
    if _is_last(state, m):
        return S
    j = S.index(m)
    if m == 1:
        return tuple(s - 1 for s in S[1:])
    later = tuple(s - 1 for s in S[j + 1 :])
    if tau[m - 2] >= 2:
        return S[:j] + (m - 1,) + later
    return S[:j] + later


def _psi_children(state: CountingState, m: int) -> List[CountingState]:
    S, tau, U = state
    lower = set(U)
    j = S.index(m)
    previous = S[j - 1] if j >= 1 else 0
    length = m - previous

    if length == 1:
        # m = s_1 = 1: the remaining entries keep their w-values.
        return [
            CountingState(
                tuple(s - 1 for s in S[1:]), tau[1:], tuple(u - 1 for u in U if u >= 2)
            )
        ]

    p = m - 1
    later_S = tuple(s - 1 for s in S[j + 1 :])
    later_tau = tau[m:]
    later_U = tuple(u - 1 for u in U if u > m)
    children: List[CountingState] = []

    # The descent persists at p: entries of the shortened run lose one larger neighbour.
    if p in lower or tau[p - 1] >= 2:
        run_tau, run_U = [], []
        for i in range(previous + 1, p + 1):
            value = tau[i - 1] - 1
            if i in lower:
                value = max(value, 1 if i == p else p - i)
                run_U.append(i)
            run_tau.append(value)
        children.append(
            CountingState(
                S[:j] + (p,) + later_S,
                tau[:previous] + tuple(run_tau) + later_tau,
                tuple(u for u in U if u <= previous) + tuple(run_U) + later_U,
            )
        )

    # The run merges into the next one: its entries must all lie below the next run.
    if tau[p - 1] <= 1:
        merged = range(previous + 1, p + 1)
        for i in merged:
            excess = tau[i - 1] - (m - i)
            if excess > 0 or (excess < 0 and i not in lower):
                return children

        head_tau = list(tau[:previous])
        head_U = [u for u in U if u <= previous]
        if j >= 1:
            before = S[j - 2] if j >= 2 else 0
            for i in range(before + 1, previous + 1):
                excess = tau[i - 1] - (previous - i)
                if excess > len(merged):
                    return children
                if excess == len(merged) and i not in lower:
                    head_U.append(i)

        if j == len(S) - 1:
            children.append(CountingState(S[:j], tuple(head_tau), tuple(sorted(head_U))))
        else:
            new_end = S[j + 1] - 1
            children.append(
                CountingState(
                    S[:j] + later_S,
                    tuple(head_tau) + tuple(new_end - i for i in merged) + later_tau,
                    tuple(sorted(head_U)) + tuple(merged) + later_U,
                )
            )
    return children


def psi_step(state: CountingState, m: Spot, n: Optional[int] = None) -> List[CountingState]:
    r"""
    Constrained sets of length ``n - 1`` receiving the permutations of ``state`` with ``n`` at
    the maximal spot ``m``, once ``n`` is deleted.

    Extended Summary
    ----------------
    From the last position the constraint is unchanged. From ``s_1 = 1`` the prefix drops its
    first entry. From any other descent ``m`` with ``p = m - 1``:

    - the descent persists at ``p`` (``tau_p >= 2``): entries of the run ending at ``m`` lose
      one, lower bounds are clamped to the new minimum;
    - the run merges into the next one (``tau_p = 1``): its entries must have had no smaller
      entry in the next run and become unconstrained lower bounds of the merged run; entries
      of the previous run that already saw the whole shortened run below them become lower
      bounds, as the merged run may add more;
    - both, when ``p`` is a lower-bound position with ``tau_p = 1``.

    Branches whose constraint cannot be met are dropped, so a spot may have no child.
    """
    _check_spot(state, m, n)
    if _is_last(state, m):
        return [state]
    return [child for child in _psi_children(state, m) if is_feasible(child)]


# ------------------------------------------------------------------------------------------------
#   Counting
# ------------------------------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _count_exact(state: CountingState, n: int) -> int:
    if not state.S:
        return 1 if n >= 0 else 0
    if not is_feasible(state, n):
        return 0
    total = 0
    for spot in maximal_spots(state, n):
        children = [state] if _is_last(state, spot) else _psi_children(state, spot)  # type: ignore
        total += sum(_count_exact(child.canonical(), n - 1) for child in children)
    return total


def count_exact(state: CountingState, n: int) -> int:
    r"""``|D_S ∩ W(tau, U)|`` at length ``n``, evaluated through the maximal-spot recursion."""
    return _count_exact(state.canonical(), n)


@functools.lru_cache(maxsize=None)
def _count_node(state: CountingState) -> RecursionNode:
    if not state.S:
        return RecursionNode(state, [], DimensionPolynomial.constant(1), 0, 0)
    if not is_feasible(state):
        return RecursionNode(state, [], DimensionPolynomial(), None, 0)

    S, tau, _ = state
    s_d = S[-1]
    children: List[Tuple[int, CountingState]] = []
    increment = DimensionPolynomial()
    start = max(s_d + 2, s_d + max(tau[(S[-2] if len(S) > 1 else 0) :]) + 1)
    for spot in maximal_spots(state):
        if spot == LAST:
            continue
        for child in psi_step(state, spot):
            child = child.canonical()
            node = _count_node(child)
            children.append((spot, child))  # type: ignore
            increment = increment + node.resolved.shift(-1)
            start = max(start, node.exact_from + 1)

    # F(n) = F(n - 1) + G(n) holds once every length-dependent spot condition has settled.
    resolved = count_exact(state, start - 1) + poly_sum_range(increment, start)
    exact_from = start - 1
    while exact_from > 0 and resolved(exact_from - 1) == count_exact(state, exact_from - 1):
        exact_from -= 1

    first_nonzero = None
    for length in range(s_d + 1, exact_from + max(resolved.degree, 0) + 2):
        if count_exact(state, length) > 0:
            first_nonzero = length
            break
    return RecursionNode(state, children, resolved, first_nonzero, exact_from)


def count_node(state: CountingState) -> RecursionNode:
    r"""Resolve the recursion for ``state``; nodes are memoised on the canonical state."""
    return _count_node(state.canonical())


def count_poly(state: CountingState) -> DimensionPolynomial:
    r"""
    ``|D_S ∩ W(tau, U)|`` as a polynomial in ``n``, valid from ``count_node(state).exact_from``.
    Infeasible constraints give the zero polynomial.

    Examples
    --------
    >>> str(count_poly(CountingState((1,), (1,), (1,))))
    'n - 1'
    """
    return count_node(state).resolved


def recursion_tree(state: CountingState, depth: Optional[int] = None) -> anytree.AnyNode:
    r"""
    The recursion below ``state`` as an ``anytree`` tree. Every node carries ``label``,
    ``polynomial``, ``first_nonzero`` and ``exact_from``; children carry the ``spot`` they were
    reached from. Recurrence steps (deleting from the last position) are folded into their
    parent.
    """

    def _build(
        current: CountingState, spot: Optional[int], parent: Optional[anytree.AnyNode], level: int
    ) -> anytree.AnyNode:
        node = count_node(current)
        tree_node = anytree.AnyNode(
            parent=parent,
            label=current.label(),
            spot=spot,
            polynomial=str(node.resolved),
            first_nonzero=node.first_nonzero,
            exact_from=node.exact_from,
        )
        if depth is None or level < depth:
            for child_spot, child in node.children:
                _build(child, child_spot, tree_node, level + 1)
        return tree_node

    return _build(state.canonical(), None, None, 0)


def render_tree(root: anytree.AnyNode) -> str:
    lines = []
    for prefix, _, node in anytree.RenderTree(root):
        spot = "" if node.spot is None else f"[{node.spot}] "
        lines.append(f"{prefix}{spot}{node.label}: {node.polynomial}")
    return "\n".join(lines)


# ------------------------------------------------------------------------------------------------
#   Construction
# ------------------------------------------------------------------------------------------------


def construct_permutation(S: Sequence[int], tau: Sequence[int], n: int) -> Permutation:
    r"""
    Build a permutation of length ``n`` with descent set ``S`` and w-prefix ``tau`` by placing
    ``n, n - 1, ..., 1`` one at a time.

    Extended Summary
    ----------------
    Every run is filled from right to left. Since values arrive in decreasing order, the next
    free slot ``i`` of a run may receive the current value exactly when the number of still
    empty slots of the following run equals the excess ``c_i = tau_i - (e - i)``; the last run
    always may. Among the runs that may, the value goes to the rightmost one whose preceding
    run may not.

    Parameters
    ----------
    S: Sequence[int]
        Descent set.
    tau: Sequence[int]
        Either the prefix of length ``max(S)`` or the full w-sequence of length ``n``, whose
        tail must then be ``n - i + 1``.
    n: int
        Length of the permutation.

    Raises
    ------
    ValueError
        If no run can take the next value, or the result misses the requested statistics;
        both mean ``tau`` is not permissible for ``S`` at length ``n``.
    """
    S, tau = tuple(S), tuple(tau)
    s_d = S[-1] if S else 0
    if n <= s_d and S:
        raise ValueError(f"Length {n} leaves no room after the last descent {s_d}.")
    if len(tau) == n and n != s_d:
        tail = tuple(n - i + 1 for i in range(s_d + 1, n + 1))
        if tau[s_d:] != tail:
            raise ValueError(f"The w-sequence must end with {tail}, got {tau[s_d:]}.")
        tau = tau[:s_d]
    elif len(tau) != s_d:
        raise ValueError(f"tau must have length {s_d} or {n}, got {len(tau)}.")

    ends = (0,) + S + (n,)
    count = len(ends) - 1
    sizes = [ends[t + 1] - ends[t] for t in range(count)]
    filled = [0] * count
    sigma = [0] * n

    def _may_take(t: int) -> bool:
        if filled[t] == sizes[t]:
            return False
        if t == count - 1:
            return True
        slot = ends[t + 1] - filled[t]
        excess = tau[slot - 1] - (ends[t + 1] - slot)
        return filled[t + 1] == sizes[t + 1] - excess

    for value in range(n, 0, -1):
        flags = [_may_take(t) for t in range(count)]
        chosen = next(
            (t for t in reversed(range(count)) if flags[t] and (t == 0 or not flags[t - 1])), None
        )
        if chosen is None:
            raise ValueError(f"No run can take {value}: {tau} is not permissible for {S}.")
        sigma[ends[chosen + 1] - filled[chosen] - 1] = value
        filled[chosen] += 1

    result = tuple(sigma)
    if descents(result) != S or wseq(result)[:s_d] != tau:
        raise ValueError(f"{tau} is not permissible for {S} at length {n}.")
    return result


# ------------------------------------------------------------------------------------------------
#   Stable dimension polynomials
# ------------------------------------------------------------------------------------------------


def _lower_bound_sets(s_d: int) -> Iterable[Tuple[int, ...]]:
    positions = range(1, s_d + 1)
    return itertools.chain.from_iterable(
        itertools.combinations(positions, size) for size in range(s_d + 1)
    )


@functools.lru_cache(maxsize=None)
def descent_set_contribution(
    a: int, S: Tuple[int, ...], assembly: str = "lower-bound-k1"
) -> DimensionPolynomial:
    r"""
    The part of ``P_{a,b}`` coming from permutations with descent set ``S``:

    .. math::

        \sum_{U} \sum_{k=0}^{a} \sum_{\tau} |D_S \cap W(\tau, U)| \cdot
        [q^k] \prod_{i \leq s_d} [\tau_i]_q \cdot [q^{a-k}] [n - s_d]_q!

    over prefixes truncated at ``k + 1`` (``lower-bound-k1``) or ``k + 2``
    (``lower-bound-k2``). Its degree is ``max(S) + a``.
    """
    if assembly not in ASSEMBLIES:
        raise ValueError(f"Unknown assembly '{assembly}', expected one of {ASSEMBLIES}.")
    S = tuple(S)
    if not S:
        return knuth_poly(a, 0)

    offset = 1 if assembly == "lower-bound-k1" else 2
    s_d = S[-1]
    total = DimensionPolynomial()
    for k in range(a + 1):
        tail = knuth_poly(a - k, s_d)
        for U in _lower_bound_sets(s_d):
            for tau in enumerate_permissible(S, k, U, offset=offset):
                weight = prefix_coefficient(tau, k)
                if weight == 0:
                    continue
                total = total + count_poly(CountingState(S, tau, U)) * tail * weight
    return total


@functools.lru_cache(maxsize=None)
def dimension_polynomial(a: int, b: int, assembly: str = "lower-bound-k1") -> DimensionPolynomial:
    r"""
    The polynomial ``P_{a,b}(n)`` equal to ``dim DR_n^{a,b}`` for every ``n >= a + b``.

    Parameters
    ----------
    a: int
        Degree in the first set of variables (exponent of ``q``).
    b: int
        Degree in the second set of variables (exponent of ``t``), the major index.
    assembly: str, optional (default = "lower-bound-k1")
        Truncation used to split prefixes into exact and lower-bound entries. Both give the
        same polynomial.

    Examples
    --------
    >>> str(dimension_polynomial(1, 1))
    'n^2 - 2n'
    """
    if a < 0 or b < 0:
        raise ValueError(f"Bidegree must be non-negative, got ({a}, {b}).")
    total = DimensionPolynomial()
    for S in descent_sets_with_maj(b):
        total = total + descent_set_contribution(a, S, assembly)
    return total


def sharpness_report(a: int, b: int) -> SharpnessRecord:
    r"""
    Compare ``P_{a,b}`` with the true dimension one step below the stable range, at
    ``n = a + b - 1``; ``strict`` records an undercount.
    """
    if a + b < 2:
        raise ValueError(f"Sharpness needs a + b >= 2, got ({a}, {b}).")
    n = a + b - 1
    value = dimension_polynomial(a, b)(n)
    true_dim = dim_exact(n, a, b)
    return SharpnessRecord(
        a=a, b=b, n=n, poly_value_at_boundary=value, true_dim=true_dim, strict=value < true_dim
    )


def boundary_case_value(state: CountingState) -> Fraction:
    r"""
    For a single descent ``S = {b}`` with ``b`` in ``U``, return the counting polynomial of
    ``state`` evaluated one step below the stable range of the bidegree it serves, at
    ``n = b + tau_b - 2`` (``a = tau_b - 1``). The count there is zero while the polynomial is
    not, which is where the stable formula breaks down.
    """
    S, tau, U = state
    if len(S) != 1 or S[0] not in U:
        raise ValueError(f"Boundary cases have S = {{b}} with b in U, got {state.label()}.")
    b = S[0]
    return count_poly(state)(b + tau[b - 1] - 2)
