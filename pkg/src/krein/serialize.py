"""JSON and CSV wire formats.

Complex scalars are written as plain numbers when their imaginary part is
zero and as ``{"re": r, "im": i}`` otherwise; both forms are read back.
Matrices are lists of rows, bases are lists of columns.  Floats use
Python's shortest round-trip repr, so every double survives a round trip.
"""

from __future__ import annotations

import dataclasses
import enum
import io
import math
import numbers
from typing import Iterable

import numpy as np

from .decomposition import FundamentalDecomposition, FundamentalSymmetry
from .errors import MalformedInput
from .prescribe import TargetTrace
from .sequences import SequenceRow
from .space import KreinSpace, make_space

CSV_HEADER = "n,param,norm_x,norm_y,ratio"


def _real(x: float):
    x = float(x)
    if not math.isfinite(x):
        return None if math.isnan(x) else ("inf" if x > 0 else "-inf")
    return x


def scalar_to_json(z):
    z = complex(z)
    if z.imag == 0:
        return _real(z.real)
    return {"re": _real(z.real), "im": _real(z.imag)}


def scalar_from_json(obj) -> complex:
    if isinstance(obj, bool):
        raise MalformedInput(f"expected a number, got {obj!r}")
    if isinstance(obj, numbers.Real):
        return complex(obj)
    if isinstance(obj, dict) and set(obj) <= {"re", "im"} and "re" in obj:
        re, im = obj["re"], obj.get("im", 0.0)
        if all(isinstance(v, numbers.Real) and not isinstance(v, bool) for v in (re, im)):
            return complex(re, im)
    raise MalformedInput(f"expected a number or {{'re', 'im'}}, got {obj!r}")


def vector_to_json(v) -> list:
    return [scalar_to_json(z) for z in np.asarray(v).reshape(-1)]


def vector_from_json(obj) -> np.ndarray:
    if not isinstance(obj, list) or not obj:
        raise MalformedInput("a vector must be a non-empty list")
    return np.array([scalar_from_json(z) for z in obj], dtype=complex)


def matrix_to_json(M) -> list:
    return [vector_to_json(row) for row in np.asarray(M)]


def matrix_from_json(obj, dim=None) -> np.ndarray:
    if not isinstance(obj, list) or not obj:
        raise MalformedInput("a matrix must be a non-empty list of rows")
    rows = [vector_from_json(r) for r in obj]
    if len({len(r) for r in rows}) != 1:
        raise MalformedInput("matrix rows have different lengths")
    M = np.array(rows)
    if M.shape[0] != M.shape[1]:
        raise MalformedInput(f"matrix of shape {M.shape} is not square")
    if dim is not None and M.shape[0] != dim:
        raise MalformedInput(f"declared dim {dim} but matrix is {M.shape[0]}x{M.shape[1]}")
    return M


def columns_to_json(B) -> list:
    return [vector_to_json(c) for c in np.asarray(B).T]


def _dim_of(obj):
    dim = obj.get("dim")
    if dim is not None and (isinstance(dim, bool) or not isinstance(dim, int) or dim < 1):
        raise MalformedInput(f"bad dim {dim!r}")
    return dim


def space_to_json(sp: KreinSpace) -> dict:
    return {"dim": sp.dim, "gram": matrix_to_json(sp.gram)}


def space_from_json(obj) -> KreinSpace:
    """Parse ``{"dim": n, "gram": [...]}``; a bare list of rows is accepted too."""
    if isinstance(obj, list):
        return make_space(matrix_from_json(obj))
    if not isinstance(obj, dict) or "gram" not in obj:
        raise MalformedInput("space JSON needs a 'gram' key")
    return make_space(matrix_from_json(obj["gram"], _dim_of(obj)))


def symmetry_to_json(J) -> dict:
    M = J.matrix if isinstance(J, FundamentalSymmetry) else np.asarray(J)
    return {"dim": M.shape[0], "matrix": matrix_to_json(M)}


def symmetry_matrix_from_json(obj) -> np.ndarray:
    """Read a dense matrix stored under 'matrix', 'J' or 'gram' (first found), or a bare list."""
    if isinstance(obj, list):
        return matrix_from_json(obj)
    if isinstance(obj, dict):
        for key in ("matrix", "J", "gram"):
            if key in obj:
                return matrix_from_json(obj[key], _dim_of(obj))
    raise MalformedInput("symmetry JSON needs a 'matrix' key")


def decomposition_to_json(d: FundamentalDecomposition) -> dict:
    return {"basis_plus": columns_to_json(d.basis_plus), "basis_minus": columns_to_json(d.basis_minus)}


def to_json(value):
    """Generic encoder for arrays, enums, dataclasses and nested containers."""
    if isinstance(value, np.ndarray):
        return vector_to_json(value) if value.ndim == 1 else matrix_to_json(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Number):
        return scalar_to_json(value)
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    if isinstance(value, dict):
        return {k: to_json(v) for k, v in value.items()}
    if dataclasses.is_dataclass(value):
        return {f.name: to_json(getattr(value, f.name)) for f in dataclasses.fields(value)}
    raise TypeError(f"cannot encode {type(value).__name__}")


def trace_to_json(trace: TargetTrace) -> dict:
    out = to_json(trace)
    out["discriminant"] = to_json(trace.discriminant)
    return out


def _fmt(x) -> str:
    return "" if x is None else "%.17g" % x


def rows_to_csv(rows: Iterable[SequenceRow]) -> str:
    """One line per row under :data:`CSV_HEADER`; missing columns stay empty."""
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in rows:
        buf.write(",".join([str(r.n), _fmt(r.param), _fmt(r.norm_x), _fmt(r.norm_y), _fmt(r.ratio)]) + "\n")
    return buf.getvalue()
