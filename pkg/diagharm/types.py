from fractions import Fraction
from typing import List

from mypy_extensions import TypedDict


# One monomial ``c q^q t^t`` of a serialized series; ``c`` is a decimal string.
SeriesEntry = TypedDict("SeriesEntry", {"q": int, "t": int, "c": str})

# Serialized ``BivariateSeries``, as emitted by ``hilbert``.
SeriesDocument = TypedDict(
    "SeriesDocument",
    {"schema": str, "kind": str, "n": int, "total": str, "entries": List[SeriesEntry]},
)

# Serialized ``DimensionPolynomial``; ``coeffs`` are ascending ``[numerator, denominator]``
# string pairs.
PolynomialDocument = TypedDict(
    "PolynomialDocument",
    {"schema": str, "kind": str, "variable": str, "stable_from": int, "coeffs": List[List[str]]},
)

# One comparison of a verification suite. ``expected`` and ``actual`` are rendered as strings.
CheckRecord = TypedDict(
    "CheckRecord", {"check": str, "expected": str, "actual": str, "passed": bool}
)

# Serialized verification report.
ReportDocument = TypedDict(
    "ReportDocument",
    {
        "schema": str,
        "kind": str,
        "subject": str,
        "checks": List[CheckRecord],
        "passed": int,
        "failed": int,
        "status": str,
    },
)

# Returned by ``stability.sharpness_report``.
SharpnessRecord = TypedDict(
    "SharpnessRecord",
    {
        "a": int,
        "b": int,
        "n": int,
        "poly_value_at_boundary": Fraction,
        "true_dim": int,
        "strict": bool,
    },
)
