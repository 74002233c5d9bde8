r"""
Exact univariate polynomial arithmetic used throughout the package: polynomials in ``q`` with
integer coefficients (q-integers, q-factorials and products of them) and polynomials in ``n``
with rational coefficients (counting and dimension polynomials), together with the closed forms
for coefficient extraction and power sums that the stable dimension polynomials are built from.
"""
from fractions import Fraction
import functools
import math
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
import sympy
from sympy.functions.combinatorial.numbers import stirling


Rational = Union[int, Fraction]


def _convolve(left: Sequence, right: Sequence) -> List:
    # Object dtype keeps Python ints / Fractions, so products never overflow or round.
    if len(left) == 0 or len(right) == 0:
        return []
    product = np.convolve(np.array(left, dtype=object), np.array(right, dtype=object))
    return list(product)


class QPolynomial(object):
    r"""
    A polynomial in ``q`` with arbitrary-precision integer coefficients, stored densely in
    ascending order. Trailing zeros are stripped, so the zero polynomial has no coefficients.

    Parameters
    ----------
    coeffs: Iterable[int], optional (default = ())
        Coefficients, index ``i`` holding the coefficient of ``q^i``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[int, ...] = tuple(values)

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        r"""Degree of the polynomial, ``-1`` for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return len(self._coeffs) == 0

    def is_symmetric(self) -> bool:
        return self._coeffs == self._coeffs[::-1]

    def evaluate(self, q: Rational) -> Rational:
        result: Rational = 0
        for c in reversed(self._coeffs):
            result = result * q + c
        return result

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        size = max(len(self._coeffs), len(other._coeffs))
        padded_self = self._coeffs + (0,) * (size - len(self._coeffs))
        padded_other = other._coeffs + (0,) * (size - len(other._coeffs))
        return QPolynomial(a + b for a, b in zip(padded_self, padded_other))

    def __mul__(self, other: Union["QPolynomial", int]) -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial(c * other for c in self._coeffs)
        return QPolynomial(_convolve(self._coeffs, other._coeffs))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == QPolynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        # Constants hash like the integers they compare equal to.
        if self.degree <= 0:
            return hash(self._coeffs[0] if self._coeffs else 0)
        return hash(("QPolynomial", self._coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for power, c in enumerate(self._coeffs):
            if c == 0:
                continue
            monomial = "" if power == 0 else ("q" if power == 1 else f"q^{power}")
            if monomial and c == 1:
                terms.append(monomial)
            else:
                terms.append(f"{c}{monomial}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self._coeffs)})"


class DimensionPolynomial(object):
    r"""
    A polynomial in ``n`` with exact rational coefficients, stored densely in ascending order.
    Coefficients are kept as :class:`fractions.Fraction`, hence always in lowest terms with a
    positive denominator.

    Parameters
    ----------
    coeffs: Iterable[Union[int, Fraction]], optional (default = ())
        Coefficients, index ``i`` holding the coefficient of ``n^i``.

    Examples
    --------
    >>> p = DimensionPolynomial([0, -2, 1])
    >>> p(4)
    Fraction(8, 1)
    >>> str(p.shift(-1))
    'n^2 - 4n + 3'
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Rational) -> "DimensionPolynomial":
        return cls([value])

    @classmethod
    def variable(cls) -> "DimensionPolynomial":
        return cls([0, 1])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        r"""Degree of the polynomial, ``-1`` for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return len(self._coeffs) == 0

    def __call__(self, n: Rational) -> Fraction:
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * n + c
        return result

    def shift(self, h: int) -> "DimensionPolynomial":
        r"""
        Return the polynomial ``P(n + h)``. A child count written in the length ``n - 1`` is
        rewritten in ``n`` through ``shift(-1)``.
        """
        linear = DimensionPolynomial([h, 1])
        result = DimensionPolynomial()
        for c in reversed(self._coeffs):
            result = result * linear + c
        return result

    def __add__(self, other: Union["DimensionPolynomial", Rational]) -> "DimensionPolynomial":
        if not isinstance(other, DimensionPolynomial):
            other = DimensionPolynomial.constant(other)
        size = max(len(self._coeffs), len(other._coeffs))
        padded_self = self._coeffs + (Fraction(0),) * (size - len(self._coeffs))
        padded_other = other._coeffs + (Fraction(0),) * (size - len(other._coeffs))
        return DimensionPolynomial(a + b for a, b in zip(padded_self, padded_other))

    __radd__ = __add__

    def __neg__(self) -> "DimensionPolynomial":
        return DimensionPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: Union["DimensionPolynomial", Rational]) -> "DimensionPolynomial":
        if not isinstance(other, DimensionPolynomial):
            other = DimensionPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: Rational) -> "DimensionPolynomial":
        return DimensionPolynomial.constant(other) - self

    def __mul__(self, other: Union["DimensionPolynomial", Rational]) -> "DimensionPolynomial":
        if isinstance(other, DimensionPolynomial):
            return DimensionPolynomial(_convolve(self._coeffs, other._coeffs))
        return DimensionPolynomial(c * other for c in self._coeffs)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DimensionPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == DimensionPolynomial.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self.degree <= 0:
            return hash(self._coeffs[0] if self._coeffs else 0)
        return hash(("DimensionPolynomial", self._coeffs))

    def to_sympy(self, symbol: str = "n") -> sympy.Expr:
        n = sympy.Symbol(symbol)
        return sympy.Add(
            *[
                sympy.Rational(c.numerator, c.denominator) * n ** power
                for power, c in enumerate(self._coeffs)
            ]
        )

    def to_latex(self, symbol: str = "n") -> str:
        return sympy.latex(self.to_sympy(symbol))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        pieces: List[str] = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            monomial = "" if power == 0 else ("n" if power == 1 else f"n^{power}")
            if monomial and magnitude == 1:
                body = monomial
            elif magnitude.denominator == 1:
                body = f"{magnitude.numerator}{monomial}"
            else:
                body = f"{magnitude.numerator}/{magnitude.denominator}"
                body += f" {monomial}" if monomial else ""
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"DimensionPolynomial([{', '.join(str(c) for c in self._coeffs)}])"


# ------------------------------------------------------------------------------------------------
#   q-analogs
# ------------------------------------------------------------------------------------------------


def q_integer(k: int) -> QPolynomial:
    r"""
    The q-integer ``[k]_q = 1 + q + ... + q^(k-1)``; the zero polynomial for ``k = 0``.
    """
    if k < 0:
        raise ValueError(f"q-integers are defined for k >= 0, got {k}.")
    return QPolynomial([1] * k)


@functools.lru_cache(maxsize=None)
def q_factorial(k: int) -> QPolynomial:
    r"""
    The q-factorial ``[k]_q! = [1]_q [2]_q ... [k]_q``, the inversion generating function of
    the symmetric group on ``k`` letters.
    """
    if k < 0:
        raise ValueError(f"q-factorials are defined for k >= 0, got {k}.")
    if k == 0:
        return QPolynomial([1])
    return q_factorial(k - 1) * q_integer(k)


def q_coeff(p: QPolynomial, k: int) -> int:
    r"""Coefficient of ``q^k`` in ``p``, zero beyond the degree."""
    if k < 0 or k > p.degree:
        return 0
    return p.coeffs[k]


# ------------------------------------------------------------------------------------------------
#   Closed forms in n
# ------------------------------------------------------------------------------------------------


def binomial_poly(c: int, k: int) -> DimensionPolynomial:
    r"""
    The binomial coefficient ``C(n + c, k)`` as a polynomial of degree ``k`` in ``n``: the
    falling factorial ``(n + c)(n + c - 1)...(n + c - k + 1) / k!``. This agrees with the
    combinatorial binomial whenever ``n + c >= 0`` and is its analytic continuation otherwise.
    Zero for ``k < 0``.
    """
    if k < 0:
        return DimensionPolynomial()
    result = DimensionPolynomial.constant(1)
    for r in range(k):
        result = result * DimensionPolynomial([c - r, 1])
    return result * Fraction(1, math.factorial(k))


def _pentagonal(j: int) -> int:
    return j * (3 * j - 1) // 2


@functools.lru_cache(maxsize=None)
def knuth_poly(k: int, shift: int = 0) -> DimensionPolynomial:
    r"""
    Knuth's closed form for the coefficient of ``q^k`` in ``[m]_q!``, written as a polynomial
    in ``n`` with ``m = n - shift``.

    Extended Summary
    ----------------
    Euler's pentagonal theorem turns ``[m]_q! = prod (1 - q^i) / (1 - q)^m`` into

    .. math::

        [q^k][m]_q! = C(m+k-1, k) + \sum_{j \geq 1} (-1)^j \left( C(m+k-u_j-1, k-u_j)
                      + C(m+k-u_j-j-1, k-u_j-j) \right),

    with pentagonal numbers ``u_j = j(3j-1)/2``. Terms with a negative lower index vanish, so
    only finitely many ``j`` contribute. The identity holds for ``k <= m``; outside that range
    the polynomial is still well defined and is what the sharpness argument evaluates.

    Parameters
    ----------
    k: int
        Exponent of ``q`` to extract, ``k >= 0``.
    shift: int, optional (default = 0)
        Offset between ``n`` and the length ``m`` of the q-factorial.

    Returns
    -------
    DimensionPolynomial
        A polynomial of degree exactly ``k``.
    """
    if k < 0:
        raise ValueError(f"Coefficient index must be non-negative, got {k}.")

    # C(m + x, y) with m = n - shift is C(n + (x - shift), y).
    result = binomial_poly(k - 1 - shift, k)
    j = 1
    while _pentagonal(j) <= k:
        sign = -1 if j % 2 else 1
        u = _pentagonal(j)
        result = result + sign * binomial_poly(k - u - 1 - shift, k - u)
        result = result + sign * binomial_poly(k - u - j - 1 - shift, k - u - j)
        j += 1
    return result


def pentagonal_term_counts(k: int) -> Tuple[int, int]:
    r"""
    Number of non-vanishing correction terms in each of the two pentagonal summands of
    :func:`knuth_poly` for exponent ``k``: the ``j >= 1`` with ``j(3j-1)/2 <= k`` and with
    ``j(3j+1)/2 <= k`` respectively.
    """
    first, second = 0, 0
    j = 1
    while _pentagonal(j) <= k:
        first += 1
        if _pentagonal(j) + j <= k:
            second += 1
        j += 1
    return first, second


def knuth_boundary_defect(m: int) -> int:
    r"""
    Evaluate Knuth's formula one step past its range, at exponent ``m + 1`` for ``[m]_q!``, and
    return its difference with the true coefficient. The extra factor ``(1 - q^(m+1))`` that the
    formula implicitly multiplies in contributes exactly ``-1``.
    """
    if m < 1:
        raise ValueError(f"Boundary defect is defined for m >= 1, got {m}.")
    formula_value = knuth_poly(m + 1, 0)(m)
    true_value = q_coeff(q_factorial(m), m + 1)
    return int(formula_value - true_value)


def _falling_factorial_poly(i: int) -> DimensionPolynomial:
    result = DimensionPolynomial.constant(1)
    for r in range(i):
        result = result * DimensionPolynomial([-r, 1])
    return result


@functools.lru_cache(maxsize=None)
def power_sum_poly(p: int) -> DimensionPolynomial:
    r"""
    The polynomial ``1^p + 2^p + ... + n^p`` in ``n``, assembled from Stirling numbers of the
    second kind as ``sum_{i=1}^{p+1} S(p+1, i) (n)_i / i`` with falling factorials ``(n)_i``.
    """
    if p < 0:
        raise ValueError(f"Power must be non-negative, got {p}.")
    result = DimensionPolynomial()
    for i in range(1, p + 2):
        weight = Fraction(int(stirling(p + 1, i)), i)
        result = result + _falling_factorial_poly(i) * weight
    return result


def poly_sum_range(P: DimensionPolynomial, m: int) -> DimensionPolynomial:
    r"""
    The polynomial ``F(n) = P(m) + P(m + 1) + ... + P(n)``, obtained as
    ``sum_{i=1}^{n} P(i) - sum_{i=1}^{m-1} P(i)``. It vanishes at ``n = m - 1`` and, below
    that, continues the sum analytically (possibly to negative values).
    """
    prefix = DimensionPolynomial()
    for power, c in enumerate(P.coeffs):
        prefix = prefix + power_sum_poly(power) * c
    return prefix - prefix(m - 1)


def interpolate(points: Sequence[Tuple[int, Rational]]) -> DimensionPolynomial:
    r"""
    Lagrange interpolation in exact rational arithmetic.

    Parameters
    ----------
    points: Sequence[Tuple[int, Union[int, Fraction]]]
        Sample points ``(x, y)`` with pairwise distinct abscissae.

    Returns
    -------
    DimensionPolynomial
        The unique polynomial of degree less than ``len(points)`` through all points.
    """
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError(f"Interpolation abscissae must be pairwise distinct, got {xs}.")

    result = DimensionPolynomial()
    for j, (xj, yj) in enumerate(points):
        basis = DimensionPolynomial.constant(1)
        denominator = Fraction(1)
        for m, xm in enumerate(xs):
            if m == j:
                continue
            basis = basis * DimensionPolynomial([-xm, 1])
            denominator *= xj - xm
        result = result + basis * (Fraction(yj) / denominator)
    return result
