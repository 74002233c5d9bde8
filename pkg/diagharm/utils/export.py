r"""
Serialization of results into output documents. JSON is the exact, machine-readable contract:
keys are sorted, integers beyond machine range and rational coefficients are written as
decimal strings, and nothing time-dependent is included, so identical invocations produce
byte-identical output.
"""
import csv
from fractions import Fraction
import io
import json
from typing import Any, Dict, List, Optional, Tuple

from diagharm.polyalg import DimensionPolynomial
from diagharm.schedules import BivariateSeries
from diagharm.types import PolynomialDocument, SeriesDocument


SCHEMA = "diagharm/1"


def series_document(n: int, series: BivariateSeries) -> SeriesDocument:
    return SeriesDocument(
        schema=SCHEMA,
        kind="series",
        n=n,
        total=str(series.total()),
        entries=[{"q": a, "t": b, "c": str(c)} for a, b, c in series.entries()],
    )


def polynomial_document(
    polynomial: DimensionPolynomial, stable_from: int, **extra: Any
) -> PolynomialDocument:
    r"""
    Serialize ``polynomial`` with ascending ``[numerator, denominator]`` string pairs. Extra
    keyword arguments (``a``, ``b``, ``first_nonzero``, ...) are added as top-level keys.
    """
    document: Dict[str, Any] = {
        "schema": SCHEMA,
        "kind": "polynomial",
        "variable": "n",
        "stable_from": stable_from,
        "coeffs": [[str(c.numerator), str(c.denominator)] for c in polynomial.coeffs],
    }
    document.update(extra)
    return document  # type: ignore


def polynomial_from_document(document: Dict[str, Any]) -> DimensionPolynomial:
    return DimensionPolynomial(Fraction(int(num), int(den)) for num, den in document["coeffs"])


def count_document(n: int, value: int, label: str) -> Dict[str, Any]:
    return {"schema": SCHEMA, "kind": "count", "n": n, "state": label, "value": str(value)}


def to_json(document: Dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ------------------------------------------------------------------------------------------------
#   CSV
# ------------------------------------------------------------------------------------------------


def _csv(header: List[str], rows: List[List[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def to_csv(document: Dict[str, Any]) -> str:
    r"""
    Flatten a document into CSV rows: ``q,t,c`` for series, ``power,num,den`` for polynomials,
    ``check,expected,actual,passed`` for reports and ``n,value`` for counts.
    """
    kind = document["kind"]
    if kind == "series":
        return _csv(["q", "t", "c"], [[e["q"], e["t"], e["c"]] for e in document["entries"]])
    if kind == "polynomial":
        return _csv(
            ["power", "num", "den"],
            [[power, num, den] for power, (num, den) in enumerate(document["coeffs"])],
        )
    if kind == "report":
        return _csv(
            ["check", "expected", "actual", "passed"],
            [[c["check"], c["expected"], c["actual"], c["passed"]] for c in document["checks"]],
        )
    if kind == "count":
        return _csv(["n", "value"], [[document["n"], document["value"]]])
    if kind == "table":
        rows = []
        for entry in document["polynomials"]:
            for power, (num, den) in enumerate(entry["coeffs"]):
                rows.append([entry["a"], entry["b"], power, num, den])
        return _csv(["a", "b", "power", "num", "den"], rows)
    raise ValueError(f"Cannot write a '{kind}' document as CSV.")


# ------------------------------------------------------------------------------------------------
#   LaTeX
# ------------------------------------------------------------------------------------------------


def series_latex(series: BivariateSeries) -> str:
    terms = []
    for a, b, c in series.entries():
        monomial = "".join(
            [
                "" if a == 0 else ("q" if a == 1 else f"q^{{{a}}}"),
                "" if b == 0 else ("t" if b == 1 else f"t^{{{b}}}"),
            ]
        )
        terms.append(monomial if (monomial and c == 1) else f"{c}{monomial}")
    return " + ".join(terms) if terms else "0"


def table_latex(polynomials: Dict[Tuple[int, int], DimensionPolynomial], max_ab: int) -> str:
    r"""
    A ``tabular`` with one row per power of ``t`` and one column per power of ``q``, each cell
    holding ``P_{a,b}(n)`` in math mode.
    """
    columns = "c|" + "c" * (max_ab + 1)
    lines = [f"\\begin{{tabular}}{{{columns}}}"]
    lines.append(" & ".join([""] + [f"$q^{{{a}}}$" for a in range(max_ab + 1)]) + r" \\")
    lines.append(r"\hline")
    for b in range(max_ab + 1):
        cells = [f"$t^{{{b}}}$"]
        cells += [f"${polynomials[(a, b)].to_latex()}$" for a in range(max_ab + 1)]
        lines.append(" & ".join(cells) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def write_output(text: str, path: Optional[str] = None) -> None:
    r"""Write ``text`` to ``path``, or to stdout when no path is given."""
    if path is None:
        print(text, end="")
    else:
        with open(path, "w") as output_file:
            output_file.write(text)
