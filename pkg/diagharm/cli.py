r"""
Command-line surface: compute Hilbert series and stable polynomials, count constrained
permutation sets, and run the verification suites. Output documents go to stdout (or
``--out``); the resolved config, arguments, progress bars and diagnostics go to stderr.

Exit status is ``0`` on success, ``1`` when a verification suite has failing checks and ``2``
on invalid input.
"""
import argparse
import sys
from typing import Any, Dict, List, Optional

from tqdm import tqdm

from diagharm.config import Config
from diagharm.oracle import BruteForceIndex, interpolate_dimension_poly, hilbert_parking
from diagharm.oracle import verify_all, verify_oracle, verify_sharpness, verify_stability
from diagharm.oracle import verify_table1, Report
from diagharm.schedules import hilbert_schedules
from diagharm.stability import CountingState, count_node, dimension_polynomial
from diagharm.stability import recursion_tree, render_tree
from diagharm.utils.common import parse_int_list
from diagharm.utils.export import count_document, polynomial_document, series_document
from diagharm.utils.export import series_latex, table_latex, to_csv, to_json, write_output


common = argparse.ArgumentParser(add_help=False)
common.add_argument(
    "--config", default=None, help="Path to a config file with all configuration parameters."
)
common.add_argument(
    "--config-override",
    default=[],
    nargs="*",
    help="A sequence of key-value pairs specifying certain config arguments (with dict-like "
    "nesting) using a dot operator.",
)
common.add_argument(
    "--format", choices=["json", "csv", "latex"], default=None, help="Output document format."
)
common.add_argument("--out", default=None, help="Path to write the output document to.")
common.add_argument("--threads", type=int, default=None, help="Worker processes to use.")
common.add_argument("--progress", action="store_true", help="Show progress bars on stderr.")

parser = argparse.ArgumentParser(
    "diagharm",
    description="Bigraded dimensions of the diagonal coinvariants DR_n in exact arithmetic.",
)
subparsers = parser.add_subparsers(dest="command")
subparsers.required = True

hilbert_parser = subparsers.add_parser(
    "hilbert", parents=[common], help="Full bigraded Hilbert series of DR_n."
)
hilbert_parser.add_argument("--n", type=int, required=True, help="Number of variables.")
hilbert_parser.add_argument(
    "--method", choices=["schedules", "parking"], default="schedules",
    help="Sum over permutations (Schedules Formula) or over parking functions.",
)

dimpoly_parser = subparsers.add_parser(
    "dimpoly", parents=[common], help="Stable dimension polynomial P_{a,b}(n)."
)
dimpoly_parser.add_argument("--a", type=int, required=True, help="Degree in q.")
dimpoly_parser.add_argument("--b", type=int, required=True, help="Degree in t.")
dimpoly_parser.add_argument(
    "--method", choices=["recursion", "interpolate"], default="recursion",
    help="Maximal-spot recursion, or interpolation of exact dimensions.",
)
dimpoly_parser.add_argument(
    "--assembly", choices=["lower-bound-k1", "lower-bound-k2"], default=None,
    help="Prefix truncation used by the recursion method (default from config).",
)

table_parser = subparsers.add_parser(
    "table1", parents=[common], help="Grid of P_{a,b}(n) for 0 <= a, b <= max."
)
table_parser.add_argument("--max-ab", type=int, default=3, help="Largest a and b.")

verify_parser = subparsers.add_parser(
    "verify", parents=[common], help="Run an acceptance suite and report every check."
)
verify_parser.add_argument(
    "suite", choices=["table1", "oracle", "stability", "sharpness", "all"], help="Suite to run."
)
verify_parser.add_argument("--max-n", type=int, default=None, help="Largest n to enumerate.")
verify_parser.add_argument("--max-ab", type=int, default=None, help="Largest a and b.")
verify_parser.add_argument("--a", type=int, default=None, help="Single bidegree (sharpness).")
verify_parser.add_argument("--b", type=int, default=None, help="Single bidegree (sharpness).")

count_parser = subparsers.add_parser(
    "count", parents=[common], help="Size of D_S ∩ W(tau, U) as a polynomial or at one n."
)
count_parser.add_argument("--S", required=True, help="Descent set, e.g. 1,3,5.")
count_parser.add_argument("--tau", required=True, help="w-prefix of length max(S).")
count_parser.add_argument("--U", default="none", help="Lower-bound positions, or 'none'.")
count_parser.add_argument("--mode", choices=["poly", "exact"], default="poly")
count_parser.add_argument("--n", type=int, default=None, help="Length for --mode exact.")
count_parser.add_argument(
    "--tree", action="store_true", help="Render the recursion tree on stderr."
)


def _config_from_args(_A: argparse.Namespace) -> Config:
    overrides: List[Any] = list(_A.config_override)
    if _A.threads is not None:
        overrides += ["ENUMERATION.THREADS", _A.threads]
    if _A.format is not None:
        overrides += ["OUTPUT.FORMAT", _A.format]
    if _A.progress:
        overrides += ["ENUMERATION.SHOW_PROGRESS", True]
    return Config(_A.config, overrides)


def _render(document: Dict[str, Any], fmt: str, latex: Optional[str] = None) -> str:
    if fmt == "json":
        return to_json(document)
    if fmt == "csv":
        return to_csv(document)
    if latex is None:
        raise ValueError(f"LaTeX output is not available for '{document['kind']}' documents.")
    return latex + "\n"


def cmd_hilbert(_A: argparse.Namespace, _C: Config) -> int:
    bound_key = "MAX_SCHEDULES_N" if _A.method == "schedules" else "MAX_PARKING_N"
    bound = _C.ENUMERATION[bound_key]
    if not 1 <= _A.n <= bound:
        raise ValueError(f"n = {_A.n} is outside 1..ENUMERATION.{bound_key} = {bound}.")

    if _A.method == "schedules":
        series = hilbert_schedules(
            _A.n, threads=_C.ENUMERATION.THREADS, show_progress=_C.ENUMERATION.SHOW_PROGRESS
        )
    else:
        series = hilbert_parking(_A.n, show_progress=_C.ENUMERATION.SHOW_PROGRESS)

    document = series_document(_A.n, series)
    write_output(_render(document, _C.OUTPUT.FORMAT, series_latex(series)), _A.out)
    return 0


def cmd_dimpoly(_A: argparse.Namespace, _C: Config) -> int:
    if _A.method == "interpolate":
        limit = _C.ORACLE.MAX_INTERPOLATE_DEGREE
        if _A.a + _A.b > limit:
            raise ValueError(
                f"a + b = {_A.a + _A.b} exceeds ORACLE.MAX_INTERPOLATE_DEGREE = {limit}; "
                "use --method recursion."
            )
        polynomial = interpolate_dimension_poly(
            _A.a, _A.b, max_n=_C.ENUMERATION.MAX_SCHEDULES_N
        )
    else:
        polynomial = dimension_polynomial(_A.a, _A.b, _A.assembly or _C.STABILITY.ASSEMBLY)

    document = polynomial_document(polynomial, _A.a + _A.b, a=_A.a, b=_A.b)
    latex = f"P_{{{_A.a},{_A.b}}}(n) = {polynomial.to_latex()}"
    write_output(_render(document, _C.OUTPUT.FORMAT, latex), _A.out)
    return 0


def cmd_table1(_A: argparse.Namespace, _C: Config) -> int:
    polynomials = {
        (a, b): dimension_polynomial(a, b, _C.STABILITY.ASSEMBLY)
        for b in range(_A.max_ab + 1)
        for a in range(_A.max_ab + 1)
    }
    document = {
        "schema": "diagharm/1",
        "kind": "table",
        "polynomials": [
            polynomial_document(p, a + b, a=a, b=b) for (a, b), p in sorted(polynomials.items())
        ],
    }
    write_output(_render(document, _C.OUTPUT.FORMAT, table_latex(polynomials, _A.max_ab)), _A.out)
    return 0


def _check_bound(max_n: int, key: str, _C: Config) -> None:
    if max_n > _C.ENUMERATION[key]:
        raise ValueError(f"--max-n {max_n} exceeds ENUMERATION.{key} = {_C.ENUMERATION[key]}.")


def cmd_verify(_A: argparse.Namespace, _C: Config) -> int:
    max_ab = _A.max_ab if _A.max_ab is not None else _C.VERIFY.TABLE_MAX
    assembly = _C.STABILITY.ASSEMBLY
    threads, show_progress = _C.ENUMERATION.THREADS, _C.ENUMERATION.SHOW_PROGRESS

    report: Report
    if _A.suite == "table1":
        report = verify_table1(max_ab, assembly)
    elif _A.suite == "oracle":
        max_n = _A.max_n if _A.max_n is not None else _C.VERIFY.ORACLE_MAX_N
        _check_bound(max_n, "MAX_PARKING_N", _C)
        report = verify_oracle(max_n, threads, show_progress)
    elif _A.suite == "stability":
        max_n = _A.max_n if _A.max_n is not None else _C.VERIFY.STABLE_MAX_N
        _check_bound(max_n, "MAX_SCHEDULES_N", _C)
        report = verify_stability(max_ab, max_n, assembly)
    elif _A.suite == "sharpness":
        max_n = _A.max_n if _A.max_n is not None else _C.VERIFY.STABLE_MAX_N
        _check_bound(max_n, "MAX_SCHEDULES_N", _C)
        pairs = None
        if _A.a is not None or _A.b is not None:
            if _A.a is None or _A.b is None:
                raise ValueError("Pass both --a and --b to check a single bidegree.")
            pairs = [(_A.a, _A.b)]
        report = verify_sharpness(max_ab, max_n, pairs)
    else:
        oracle_n = _C.VERIFY.ORACLE_MAX_N if _A.max_n is None else _A.max_n
        stable_n = _C.VERIFY.STABLE_MAX_N if _A.max_n is None else _A.max_n
        _check_bound(oracle_n, "MAX_PARKING_N", _C)
        _check_bound(stable_n, "MAX_SCHEDULES_N", _C)
        report = verify_all(max_ab, oracle_n, stable_n, assembly, threads, show_progress)

    write_output(_render(report.as_dict(), _C.OUTPUT.FORMAT), _A.out)
    tqdm.write(
        f"{_A.suite}: {report.num_passed}/{len(report.checks)} checks passed", file=sys.stderr
    )
    return 0 if report.passed else 1


def cmd_count(_A: argparse.Namespace, _C: Config) -> int:
    state = CountingState.from_lists(
        parse_int_list(_A.S), parse_int_list(_A.tau), parse_int_list(_A.U)
    )

    if _A.mode == "exact":
        if _A.n is None:
            raise ValueError("--mode exact requires --n.")
        index = BruteForceIndex.from_config(_C, n=_A.n)
        value = index.count(state.S, state.tau, state.U)
        document = count_document(_A.n, value, state.label())
        write_output(_render(document, _C.OUTPUT.FORMAT, str(value)), _A.out)
        return 0

    node = count_node(state)
    if _A.tree:
        tqdm.write(render_tree(recursion_tree(state)), file=sys.stderr)
    document = polynomial_document(
        node.resolved, node.exact_from, first_nonzero=node.first_nonzero, state=state.label()
    )
    write_output(_render(document, _C.OUTPUT.FORMAT, node.resolved.to_latex()), _A.out)
    return 0


COMMANDS = {
    "hilbert": cmd_hilbert,
    "dimpoly": cmd_dimpoly,
    "table1": cmd_table1,
    "verify": cmd_verify,
    "count": cmd_count,
}


def main(argv: Optional[List[str]] = None) -> int:
    # --------------------------------------------------------------------------------------------
    #   INPUT ARGUMENTS AND CONFIG
    # --------------------------------------------------------------------------------------------
    _A = parser.parse_args(argv)

    # Create a config with default values, then override from config file, and _A.
    # This config object is immutable, nothing can be changed in this anymore.
    try:
        _C = _config_from_args(_A)
    except (AssertionError, KeyError, ValueError) as error:
        tqdm.write(f"diagharm: invalid configuration: {error}", file=sys.stderr)
        return 2

    # Print configs and args on stderr, stdout is reserved for the output document.
    tqdm.write(str(_C), file=sys.stderr)
    for arg in vars(_A):
        tqdm.write("{:<20}: {}".format(arg, getattr(_A, arg)), file=sys.stderr)

    # --------------------------------------------------------------------------------------------
    #   RUN COMMAND
    # --------------------------------------------------------------------------------------------
    try:
        return COMMANDS[_A.command](_A, _C)
    except ValueError as error:
        tqdm.write(f"diagharm {_A.command}: {error}", file=sys.stderr)
        return 2
