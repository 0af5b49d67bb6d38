"""Exact rational LP duality with checked certificates, including extended LPs
over bot and top and the basic LP relaxation of valued CSPs.

Numbers are passed in as ``int``, ``Fraction`` or strings such as ``"3/4"``
and come back as ``Fraction``. Extended values may also be the strings
``"bot"`` and ``"top"``; extended results use those strings for the
infinities.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _core
from ._core import CapExceeded, DimensionError, ParseError, PreconditionViolated

Number = Union[int, Fraction, str]

__all__ = [
    "CapExceeded",
    "DimensionError",
    "ParseError",
    "PreconditionViolated",
    "blp_minimum",
    "brute_force_optimum",
    "elp_dualize",
    "elp_solve",
    "elp_violations",
    "farkas",
    "lp_dualize",
    "lp_solve",
    "opposites",
    "run_cli",
    "vcsp_eval",
]


def _text(x: Number) -> str:
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        return x
    raise TypeError(f"expected int, Fraction or str, got {type(x).__name__}")


def _vec(v: Iterable[Number]) -> list[str]:
    return [_text(x) for x in v]


def _mat(rows: Iterable[Iterable[Number]]) -> list[list[str]]:
    return [_vec(r) for r in rows]


def _value(s: str) -> Union[Fraction, str, None]:
    if s in ("bot", "top"):
        return s
    if s == "none":
        return None
    return Fraction(s)


def _opt_vec(v):
    return None if v is None else [Fraction(s) for s in v]


def lp_solve(A, b, c) -> dict:
    """Minimize c.x subject to A x <= b, x >= 0.

    Returns ``optimum`` (a Fraction, ``"bot"`` when unbounded or ``"top"``
    when infeasible) with the evidence the solver produced: ``point``,
    ``ray`` and ``farkas_y``.
    """
    r = _core.lp_solve(_mat(A), _vec(b), _vec(c))
    return {
        "optimum": _value(r["optimum"]),
        "point": _opt_vec(r["point"]),
        "ray": _opt_vec(r["ray"]),
        "farkas_y": _opt_vec(r["farkas_y"]),
    }


def lp_dualize(A, b, c):
    """The dual <-A^T, c, b> as a triple of Fraction lists."""
    DA, Db, Dc = _core.lp_dualize(_mat(A), _vec(b), _vec(c))
    return [[Fraction(x) for x in row] for row in DA], _opt_vec(Db), _opt_vec(Dc)


def elp_solve(A, b, c) -> dict:
    r = _core.elp_solve(_mat(A), _vec(b), _vec(c))
    return {"optimum": _value(r["optimum"]), "point": _opt_vec(r["point"]), "ray": _opt_vec(r["ray"])}


def elp_violations(A, b, c) -> list[str]:
    """Violated validity conditions as ``"name@index"``; empty when valid."""
    return _core.elp_violations(_mat(A), _vec(b), _vec(c))


def elp_dualize(A, b, c):
    DA, Db, Dc = _core.elp_dualize(_mat(A), _vec(b), _vec(c))
    return [[_value(x) for x in row] for row in DA], [_value(x) for x in Db], [_value(x) for x in Dc]


def opposites(p, q) -> bool:
    """Both optima present and exact negatives; ``None`` means no optimum."""
    return _core.opposites("none" if p is None else _text(p), "none" if q is None else _text(q))


def farkas(kind: str, A, b, cols: int = 0):
    """Decide one of the alternatives ``"eq"``, ``"ineq"`` or ``"lin"``.

    Returns ``("primal", x)`` or ``("dual", y)`` with a verified certificate.
    ``cols`` gives the width when ``A`` has no rows.
    """
    side, vec = _core.farkas(kind, _mat(A), _vec(b), cols)
    return side, [Fraction(s) for s in vec]


def _vcsp_text(instance) -> str:
    if isinstance(instance, str):
        return instance
    doc = dict(instance)
    doc.setdefault("kind", "vcsp")
    for f in doc.get("functions", []):
        f["table"] = _vec(f["table"])
    return json.dumps(doc)


def vcsp_eval(instance, assignment: Sequence[int]) -> Fraction:
    """Sum of the term costs at ``assignment``. ``instance`` is a problem-file
    dict or its JSON text."""
    return Fraction(_core.vcsp_eval(_vcsp_text(instance), list(assignment)))


def brute_force_optimum(instance):
    value, argmin = _core.vcsp_brute_force(_vcsp_text(instance))
    return Fraction(value), argmin


def blp_minimum(instance) -> Fraction:
    return Fraction(_core.vcsp_blp_minimum(_vcsp_text(instance)))


def run_cli(*args: str):
    """Run the command-line tool in process; returns (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))
