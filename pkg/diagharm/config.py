from typing import Any, List, Optional

from yacs.config import CfgNode as CN


class Config(object):
    r"""
    Run-time settings of every diagharm computation: enumeration bounds, the assembly used for
    stable polynomials, verification ranges and the output format. Sections and keys read as
    attributes. Defaults below are replaced by a YAML file, and then by a flat override list.

    Extended Summary
    ----------------
    The defaults are desk-scale bounds: every exhaustive enumeration they allow finishes in
    minutes on a laptop. Modification of any parameter after instantiating this class is not
    possible, so you must override required parameter values either through ``config_file`` or
    ``config_override``. Command-line flags (``--threads``, ``--format``) are applied as
    overrides on top of both.

    Parameters
    ----------
    config_file: str, optional (default = None)
        YAML file with a subset of the keys below.
    config_override: List[Any], optional (default = [])
        Alternating dotted keys and values, e.g. ``["VERIFY.TABLE_MAX", 2]``. Applied after
        ``config_file``.

    Examples
    --------
    With a "config.yaml" containing::

        ENUMERATION:
          THREADS: 4

    >>> _C = Config("config.yaml", ["ENUMERATION.MAX_PARKING_N", 7])
    >>> _C.ENUMERATION.THREADS  # default: 1
    4
    >>> _C.ENUMERATION.MAX_PARKING_N  # default: 8
    7

    Attributes
    ----------
    ENUMERATION:
        Bounds and parallelism of the exhaustive enumerations over permutations and parking
        functions.

    ENUMERATION.MAX_SCHEDULES_N: 10
        Largest ``n`` for which the Schedules Formula is evaluated (``n!`` permutations).
    ENUMERATION.MAX_PARKING_N: 8
        Largest ``n`` for which parking functions are enumerated (``(n+1)^(n-1)`` of them).
    ENUMERATION.THREADS: 1
        Number of worker processes for enumerations. Partial results are always combined in
        block order, so the output does not depend on this value.
    ENUMERATION.SHOW_PROGRESS: False
        Whether to show ``tqdm`` progress bars on stderr.
    __________

    STABILITY:
        Assembly of the stable dimension polynomials.

    STABILITY.ASSEMBLY: "lower-bound-k1"
        How w-prefixes are truncated before counting: "lower-bound-k1" marks values ``>= k + 1``
        as lower bounds, "lower-bound-k2" marks values ``>= k + 2``. Both give the same
        polynomial.
    __________

    ORACLE:
        Brute-force ground truth.

    ORACLE.MAX_INTERPOLATE_DEGREE: 5
        Largest ``a + b`` accepted by interpolation; it samples ``n`` up to ``2 (a + b)``, which
        must stay within ``ENUMERATION.MAX_SCHEDULES_N``.
    __________

    VERIFY:
        Ranges swept by the verification suites.

    VERIFY.TABLE_MAX: 3
        Bidegrees ``0 <= a, b <= TABLE_MAX`` are checked by the stability and sharpness suites.
    VERIFY.ORACLE_MAX_N: 8
        Schedules and parking-function series are compared for ``n = 1 .. ORACLE_MAX_N``.
    VERIFY.STABLE_MAX_N: 8
        Stable polynomials are compared with exact dimensions up to this ``n``.
    __________

    OUTPUT:
        Output document settings.

    OUTPUT.FORMAT: "json"
        One of "json", "csv" or "latex".
    """

    def __init__(self, config_file: Optional[str] = None, config_override: List[Any] = []):

        _C = CN()

        _C.ENUMERATION = CN()
        _C.ENUMERATION.MAX_SCHEDULES_N = 10
        _C.ENUMERATION.MAX_PARKING_N = 8
        _C.ENUMERATION.THREADS = 1
        _C.ENUMERATION.SHOW_PROGRESS = False

        _C.STABILITY = CN()
        _C.STABILITY.ASSEMBLY = "lower-bound-k1"

        _C.ORACLE = CN()
        _C.ORACLE.MAX_INTERPOLATE_DEGREE = 5

        _C.VERIFY = CN()
        _C.VERIFY.TABLE_MAX = 3
        _C.VERIFY.ORACLE_MAX_N = 8
        _C.VERIFY.STABLE_MAX_N = 8

        _C.OUTPUT = CN()
        _C.OUTPUT.FORMAT = "json"

        # YAML file first, override list second.
        self._C = _C
        if config_file is not None:
            self._C.merge_from_file(config_file)
        self._C.merge_from_list(config_override)

        self._validate()
        self._C.freeze()

    def dump(self, file_path: str):
        r"""
        Write the resolved config as YAML, loadable again through ``config_file``.
        """
        with open(file_path, "w") as config_file:
            self._C.dump(stream=config_file)

    def _validate(self):
        r"""
        Check value ranges and cross-key bounds; each failing assert names the offending key.
        """
        assert self._C.ENUMERATION.THREADS >= 1, (
            f"ENUMERATION.THREADS must be at least 1, found {self._C.ENUMERATION.THREADS}."
        )
        assert self._C.STABILITY.ASSEMBLY in ("lower-bound-k1", "lower-bound-k2"), (
            f"STABILITY.ASSEMBLY must be lower-bound-k1 or lower-bound-k2, "
            f"found {self._C.STABILITY.ASSEMBLY}."
        )
        assert self._C.OUTPUT.FORMAT in ("json", "csv", "latex"), (
            f"OUTPUT.FORMAT must be json, csv or latex, found {self._C.OUTPUT.FORMAT}."
        )
        assert 2 * self._C.ORACLE.MAX_INTERPOLATE_DEGREE <= self._C.ENUMERATION.MAX_SCHEDULES_N, (
            "Interpolation samples n up to 2 * ORACLE.MAX_INTERPOLATE_DEGREE, which exceeds "
            f"ENUMERATION.MAX_SCHEDULES_N = {self._C.ENUMERATION.MAX_SCHEDULES_N}."
        )
        assert self._C.VERIFY.ORACLE_MAX_N <= self._C.ENUMERATION.MAX_PARKING_N, (
            "VERIFY.ORACLE_MAX_N cannot exceed ENUMERATION.MAX_PARKING_N."
        )
        assert self._C.VERIFY.STABLE_MAX_N <= self._C.ENUMERATION.MAX_SCHEDULES_N, (
            "VERIFY.STABLE_MAX_N cannot exceed ENUMERATION.MAX_SCHEDULES_N."
        )

    def __getattr__(self, attr: str):
        return self._C.__getattr__(attr)

    def __str__(self):
        common_string: str = str(CN({"ENUMERATION": self._C.ENUMERATION})) + "\n"
        common_string += str(CN({"STABILITY": self._C.STABILITY})) + "\n"
        common_string += str(CN({"ORACLE": self._C.ORACLE})) + "\n"
        common_string += str(CN({"VERIFY": self._C.VERIFY})) + "\n"
        common_string += str(CN({"OUTPUT": self._C.OUTPUT})) + "\n"

        return common_string

    def __repr__(self):
        return self._C.__repr__()
