"""Structure definition files.

A structure file is a UTF-8 JSON object::

    {
      "variables": ["a", "b", "c", "x", "y", "z"],
      "central": ["a", "b", "c"],
      "brackets": {"x,y": "a*z^2", "x,z": "b*y^2", "y,z": "c*x^2"}
    }

or, for a log-canonical structure, with an ``omega`` matrix in place of
``brackets``::

    {"variables": ["x1", "x2"], "omega": [["0", "1/2"], ["-1/2", "0"]]}

Rules:

* ``variables`` is required; names must be distinct identifiers.
* ``central`` (optional) lists Poisson-central parameters.
* exactly one of ``omega`` and ``brackets`` must be present.
* ``omega`` entries are integers or strings holding exact rationals; the
  matrix must be skew-symmetric.
* ``brackets`` keys are ``"u,v"`` with declared names; values are
  expressions in the grammar of ``parse_expr``. Unlisted pairs are 0. A
  pair may appear only once in either orientation.
* duplicate JSON keys anywhere in the file are rejected.
"""

import json
import re
from fractions import Fraction

from ..errors import ParseError, StructureError
from ..poisson import PoissonStructure, SkewMatrix, structure_validate
from .expr import format_expr, parse_expr

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")
_KEYS = {"variables", "central", "omega", "brackets"}


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise StructureError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _scalar(value, where):
    if isinstance(value, bool) or isinstance(value, float):
        raise StructureError(f"{where}: use an integer or a string like \"-1/2\", not {value!r}")
    try:
        return Fraction(value) if isinstance(value, int) else Fraction(value.strip())
    except (ValueError, ZeroDivisionError, AttributeError):
        raise StructureError(f"{where}: {value!r} is not an exact rational") from None


def structure_from_dict(data, skip_jacobi=False):
    if not isinstance(data, dict):
        raise StructureError("structure file must hold a JSON object")
    unknown = set(data) - _KEYS
    if unknown:
        raise StructureError(f"unknown keys: {', '.join(sorted(unknown))}")
    variables = data.get("variables")
    if not isinstance(variables, list) or not variables:
        raise StructureError("'variables' must be a nonempty list of names")
    for v in variables:
        if not isinstance(v, str) or not _NAME.match(v):
            raise StructureError(f"invalid variable name {v!r}")
    central = data.get("central", [])
    if not isinstance(central, list) or any(c not in variables for c in central):
        raise StructureError("'central' must list declared variables")
    if ("omega" in data) == ("brackets" in data):
        raise StructureError("give exactly one of 'omega' and 'brackets'")
    if "omega" in data:
        rows = data["omega"]
        n = len(variables)
        if not isinstance(rows, list) or len(rows) != n or any(
            not isinstance(r, list) or len(r) != n for r in rows
        ):
            raise StructureError(f"'omega' must be a {n}x{n} matrix")
        omega = SkewMatrix(
            [[_scalar(v, f"omega[{i}][{j}]") for j, v in enumerate(r)] for i, r in enumerate(rows)]
        )
        S = PoissonStructure.log_canonical(omega, variables, central)
    else:
        table = data["brackets"]
        if not isinstance(table, dict):
            raise StructureError("'brackets' must map \"u,v\" to expressions")
        brackets = {}
        seen = set()
        for key, text in table.items():
            parts = [p.strip() for p in key.split(",")]
            if len(parts) != 2 or any(p not in variables for p in parts):
                raise StructureError(f"bracket key {key!r} must name two declared variables")
            pair = frozenset(parts)
            if pair in seen:
                raise StructureError(f"pair {key!r} appears more than once")
            seen.add(pair)
            if not isinstance(text, str):
                raise StructureError(f"bracket {key!r} must be an expression string")
            try:
                brackets[tuple(parts)] = parse_expr(text, variables)
            except ParseError as exc:
                raise StructureError(f"bracket {key!r}: {exc}") from exc
        S = PoissonStructure(variables, brackets, central)
    if skip_jacobi:
        return S
    report = structure_validate(S)
    if not report.valid:
        raise StructureError("Jacobi identity fails:\n" + str(report))
    return report.structure


def loads_structure(text, skip_jacobi=False):
    try:
        data = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise StructureError(f"malformed structure file: {exc}") from exc
    return structure_from_dict(data, skip_jacobi)


def load_structure(path, skip_jacobi=False):
    with open(path, encoding="utf-8") as fh:
        return loads_structure(fh.read(), skip_jacobi)


def structure_to_dict(S):
    """The ``brackets`` form of ``S`` (or ``omega`` form if it is log-canonical)."""
    data = {"variables": list(S.variables)}
    if S.central:
        data["central"] = [S.variables[k] for k in sorted(S.central)]
    if S.omega is not None:
        data["omega"] = [[str(v) for v in row] for row in S.omega.rows]
    else:
        data["brackets"] = {
            f"{S.variables[i]},{S.variables[j]}": format_expr(v, S.variables)
            for (i, j), v in S.pi.items()
        }
    return data
