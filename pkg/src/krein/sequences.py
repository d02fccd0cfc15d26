"""Sequences of fundamental symmetries with prescribed asymptotics.

* :func:`diverging` - J-norms of a sequence of vectors pushed to infinity.
* :func:`vanishing` - J-norms of neutral vectors pushed to zero.
* :func:`ratio_orthogonal`, :func:`ratio_neutral` - ``|y|_Jn / |x|_Jn -> 0``
  for an orthogonal non-neutral pair, and for a non-orthogonal pair with y
  neutral.

Each emits one :class:`SequenceRow` per step.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .decomposition import (
    ORTH_TOL,
    FundamentalSymmetry,
    canonical_decomposition,
    complete_basis,
    decomposition_from_positive_subspace,
    j_norm,
    symmetry_of,
)
from .errors import (
    DimensionCondition,
    HypothesisViolated,
    LinearlyDependent,
    NotNeutral,
    NotOrthogonal,
    Orthogonal,
)
from .numerics import numerical_rank
from .prescribe import neutral_on_segment, norm_range, target_norm
from .space import KreinSpace, VectorClass, classify


@dataclass(frozen=True, eq=False)
class SequenceRow:
    n: int
    param: float
    symmetry: FundamentalSymmetry
    norm_x: float
    norm_y: Optional[float] = None
    ratio: Optional[float] = None


class RatioCase(str, enum.Enum):
    ORTHOGONAL_POS = "OrthogonalPos"
    ORTHOGONAL_NEG = "OrthogonalNeg"
    NONORTH_NEUTRAL_X = "NonOrthNeutralX"
    NONORTH_NON_NEUTRAL_X = "NonOrthNonNeutralX"


@dataclass(frozen=True, eq=False)
class RatioTrace:
    """Auxiliary vectors of a ratio construction (None where a case has none)."""

    case: RatioCase
    x1: Optional[np.ndarray] = None
    x2: Optional[np.ndarray] = None
    y1: Optional[np.ndarray] = None
    e1: Optional[np.ndarray] = None
    s0: Optional[float] = None


def _schedule(sp: KreinSpace, xs: Sequence, steps: int) -> list[np.ndarray]:
    if steps < 1:
        raise ValueError("steps must be at least 1")
    vecs = [sp.vector(x) for x in xs]
    if not vecs:
        raise ValueError("need at least one vector")
    return [vecs[min(k, len(vecs) - 1)] for k in range(steps)]


def diverging(sp: KreinSpace, xs: Sequence, J0: FundamentalSymmetry, steps: int) -> list[SequenceRow]:
    """Symmetries J_1, J_2, ... with ``|x_k|_Jk`` strictly increasing without bound.

    Step k targets ``max(sqrt|[x_k, x_k]|, prev) + max(1, prev)`` where prev is
    the norm reached at step k-1 (``|x_1|_J0`` for k = 1).  So each norm at
    least doubles, and beats the previous one by more than 1 from step 2 on.
    When `xs` is shorter than `steps` its last vector repeats.
    """
    vecs = _schedule(sp, xs, steps)
    prev = j_norm(J0, vecs[0])
    rows = []
    for k, x in enumerate(vecs, start=1):
        a = max(norm_range(sp, x).lower, prev) + max(1.0, prev)
        J, _ = target_norm(sp, x, a)
        prev = j_norm(J, x)
        rows.append(SequenceRow(k, a, J, prev))
    return rows


def vanishing(
    sp: KreinSpace, xs: Sequence, steps: int, J1: Optional[FundamentalSymmetry] = None
) -> list[SequenceRow]:
    """Symmetries with ``|x_k|_Jk`` halving at every step.

    Row 1 uses `J1` (the canonical symmetry by default); row k targets half
    the norm reached at row k-1.  Every vector must be neutral.
    """
    vecs = _schedule(sp, xs, steps)
    for x in vecs:
        if classify(sp, x) is not VectorClass.NEUTRAL:
            raise NotNeutral(f"vanishing needs neutral vectors; [x, x] = {sp.norm2(x):.3e}")
    sp.require_indefinite()
    J = J1 if J1 is not None else symmetry_of(canonical_decomposition(sp))
    prev = j_norm(J, vecs[0])
    rows = [SequenceRow(1, prev, J, prev)]
    for k, x in enumerate(vecs[1:], start=2):
        a = prev / 2
        J, _ = target_norm(sp, x, a)
        prev = j_norm(J, x)
        rows.append(SequenceRow(k, a, J, prev))
    return rows


def _check_independent(x: np.ndarray, y: np.ndarray) -> None:
    if numerical_rank(np.column_stack([x, y])) < 2:
        raise LinearlyDependent("x and y are linearly dependent")


def _pair_scale(sp: KreinSpace, x: np.ndarray, y: np.ndarray) -> float:
    return ORTH_TOL * sp.scale * float(np.linalg.norm(x) * np.linalg.norm(y))


def ratio_orthogonal(sp: KreinSpace, x, y, N: int) -> tuple[list[SequenceRow], RatioTrace]:
    """Symmetries J_n, n = 2..N+1, with ``|y|_Jn`` fixed and ``|x|_Jn`` unbounded.

    Requires x, y non-neutral, independent and orthogonal, with either
    ``p > 1, q > 0, [y, y] > 0`` or ``q > 1, p > 0, [y, y] < 0``; the second
    case runs on the anti-space.  y spans a fixed positive axis, and the
    positive axis v(t_n) = t_n*x2 + (1 - t_n)*e1, t_n = 1/n, tilts towards the
    neutral vector e1 between x2 and y1 (one of which is x, normalised).
    """
    x = sp.vector(x)
    y = sp.vector(y)
    for name, w in (("x", x), ("y", y)):
        if not np.any(w) or classify(sp, w) is VectorClass.NEUTRAL:
            raise HypothesisViolated(f"{name} must be non-neutral")
    _check_independent(x, y)
    if abs(sp.inner(x, y)) > _pair_scale(sp, x, y):
        raise NotOrthogonal(f"[x, y] = {sp.inner(x, y):.3e}")
    p, q = sp.signature
    yy = sp.norm2(y)
    if p > 1 and q > 0 and yy > 0:
        S, case = sp, RatioCase.ORTHOGONAL_POS
    elif q > 1 and p > 0 and yy < 0:
        S, case = sp.anti(), RatioCase.ORTHOGONAL_NEG
    else:
        raise DimensionCondition(f"signature {(p, q)} with [y, y] = {yy:.3e} admits neither case")

    x1 = y / math.sqrt(abs(yy))
    xx = S.norm2(x)
    if xx > 0:
        x2 = x / math.sqrt(xx)
        L1, minus = complete_basis(S, np.column_stack([x1, x2]))
        y1 = minus[:, 0]
    else:
        y1 = x / math.sqrt(-xx)
        plus, _ = complete_basis(S, np.column_stack([x1, y1]))
        x2, L1 = plus[:, 0], plus[:, 1:]
    s0, e1 = neutral_on_segment(S, y1, x2)

    rows = []
    for n in range(2, N + 2):
        t = 1.0 / n
        v = t * x2 + (1 - t) * e1
        d = decomposition_from_positive_subspace(S, np.column_stack([L1, x1, v]))
        if S is not sp:
            d = d.swapped(sp)
        J = symmetry_of(d)
        nx, ny = j_norm(J, x), j_norm(J, y)
        rows.append(SequenceRow(n, t, J, nx, ny, ny / nx))
    return rows, RatioTrace(case, x1=x1, x2=x2, y1=y1, e1=e1, s0=s0)


def ratio_neutral(sp: KreinSpace, x, y, N: int) -> tuple[list[SequenceRow], RatioTrace]:
    """Symmetries J_n, n = 1..N, with ``|y|_Jn / |x|_Jn -> 0`` for neutral y.

    If x is non-neutral, its norms stay above ``sqrt|[x, x]|`` and it is enough
    to drive ``|y|_Jn`` to zero with :func:`vanishing`.  If x is neutral too,
    y is rescaled to ``[x, y] = 1``, split into x1 = (x + y)/sqrt2 and
    y1 = (x - y)/sqrt2, and the positive axis x1 + t_n*y1 with
    t_n = -1 + 1/n gives ``|x|^2 = (1 - t)/(1 + t)`` and
    ``|y|^2 = (1 + t)/(1 - t)`` for the rescaled y.  Rows report the norm of
    y as given.
    """
    x = sp.vector(x)
    y = sp.vector(y)
    if not np.any(y) or classify(sp, y) is not VectorClass.NEUTRAL:
        raise NotNeutral("y must be neutral")
    if not np.any(x):
        raise LinearlyDependent("x is zero")
    _check_independent(x, y)
    k = sp.inner(x, y)
    if abs(k) <= _pair_scale(sp, x, y):
        raise Orthogonal("x and y are orthogonal")

    if classify(sp, x) is not VectorClass.NEUTRAL:
        rows = []
        for row in vanishing(sp, [y], N):
            nx = j_norm(row.symmetry, x)
            rows.append(SequenceRow(row.n, row.param, row.symmetry, nx, row.norm_x, row.norm_x / nx))
        return rows, RatioTrace(RatioCase.NONORTH_NON_NEUTRAL_X)

    yk = y / k.conjugate()
    x1 = (x + yk) / math.sqrt(2)
    y1 = (x - yk) / math.sqrt(2)
    Lplus, _ = complete_basis(sp, np.column_stack([x1, y1]))
    rows = []
    for n in range(1, N + 1):
        t = -1.0 + 1.0 / n
        d = decomposition_from_positive_subspace(sp, np.column_stack([Lplus, x1 + t * y1]))
        J = symmetry_of(d)
        nx, ny = j_norm(J, x), j_norm(J, y)
        rows.append(SequenceRow(n, t, J, nx, ny, ny / nx))
    return rows, RatioTrace(RatioCase.NONORTH_NEUTRAL_X, x1=x1, y1=y1)
