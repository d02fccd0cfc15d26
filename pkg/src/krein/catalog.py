"""Built-in example spaces and symmetry families.

Names understood by :func:`lookup` (and the CLI):

``minkowski:<n>``  diag(I_n, -1), dimension n + 1
``alt-l2:<n>``     diag(-1, 1, -1, ...), dimension n
``eg1:<n>``        diag(1, -1) with the symmetry J_n of :func:`eg1_symmetry`
``final:<n>``      diag(1, -1) with the decomposition of :func:`example_final_decomposition`

The integer-looking ``<n>`` of the last two may be any real n > 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .decomposition import (
    FundamentalDecomposition,
    FundamentalSymmetry,
    decomposition_from_bases,
    decomposition_from_positive_subspace,
    symmetry_of,
)
from .errors import ParamOutOfRange
from .numerics import quadratic_real_roots
from .space import KreinSpace, make_space


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    name: str
    param: float
    space: KreinSpace
    family: Optional[Callable[[float], FundamentalSymmetry]] = None

    def symmetry(self) -> Optional[FundamentalSymmetry]:
        """The family member at this entry's parameter, if there is a family."""
        return None if self.family is None else self.family(self.param)


def minkowski(n: int) -> KreinSpace:
    """Minkowski space of dimension n + 1 with Gram diag(I_n, -1)."""
    if n < 1:
        raise ParamOutOfRange(f"minkowski needs n >= 1, got {n}")
    return make_space(np.diag([1.0] * n + [-1.0]))


def alternating_l2(n: int) -> KreinSpace:
    """Truncation of l2 with ``[x, y] = sum (-1)^i x_i conj(y_i)``, i = 1..n."""
    if n < 2:
        raise ParamOutOfRange(f"alt-l2 needs n >= 2, got {n}")
    return make_space(np.diag([(-1.0) ** i for i in range(1, n + 1)]))


def _plane() -> KreinSpace:
    return minkowski(1)


def _require_above_one(n: float) -> None:
    if not n > 1:
        raise ParamOutOfRange(f"family parameter must exceed 1, got {n}")


def eg1_closed_form(n: float) -> np.ndarray:
    """Closed form of the symmetry for ``K+ = span{(n, 1)}, K- = span{(1, n)}``."""
    _require_above_one(n)
    d = n * n - 1
    return np.array([[n * n + 1, -2 * n], [2 * n, -(n * n + 1)]], dtype=complex) / d


def eg1_symmetry(n: float) -> FundamentalSymmetry:
    """Fundamental symmetry of diag(1, -1) with positive axis span{(n, 1)}, n > 1."""
    _require_above_one(n)
    return symmetry_of(decomposition_from_positive_subspace(_plane(), [n, 1.0]))


def eg1_norm_coefficients(x, c: float) -> tuple[float, float, float]:
    """Coefficients (in n^2, n, 1) of ``|x|^2_{J_n} = c`` over the eg1 family.

    With S = |x1|^2 + |x2|^2 and m = Re(conj(x1) x2), the J_n-norm is
    ``((n^2 + 1) S - 4 n m) / (n^2 - 1)``, so the equation clears to
    ``(S - c) n^2 - 4 m n + (S + c) = 0``.
    """
    x = np.asarray(x, dtype=complex)
    S = float(np.vdot(x, x).real)
    m = float((np.conj(x[0]) * x[1]).real)
    return S - c, -4.0 * m, S + c


def eg1_solve_norm(x, c: float) -> list[float]:
    """All n > 1 (ascending) at which ``|x|^2_{J_n} = c``."""
    return [n for n in quadratic_real_roots(*eg1_norm_coefficients(x, c)) if n > 1]


def example_final_decomposition(n: float) -> FundamentalDecomposition:
    """Decomposition of diag(1, -1) with K+ spanned by ((n+1)/n, (n-1)/n).

    K- is spanned by ((n-1)/n, (n+1)/n).  Norms: ``|(1, 1)|^2 = 2/n`` and
    ``|(1, 0)|^2 = (n + 1/n)/2``.
    """
    _require_above_one(n)
    a, b = (n + 1) / n, (n - 1) / n
    return decomposition_from_bases(_plane(), [a, b], [b, a])


def final_symmetry(n: float) -> FundamentalSymmetry:
    return symmetry_of(example_final_decomposition(n))


def final_closed_form(n: float) -> np.ndarray:
    """Closed form of the symmetry of :func:`example_final_decomposition`."""
    _require_above_one(n)
    return np.array([[n * n + 1, -(n * n - 1)], [n * n - 1, -(n * n + 1)]], dtype=complex) / (2 * n)


_FAMILIES = {"eg1": eg1_symmetry, "final": final_symmetry}


def lookup(name: str) -> CatalogEntry:
    """Resolve a ``<family>:<n>`` catalog address.

    Raises
    ------
    KeyError
        For an unknown family or a malformed parameter.
    ParamOutOfRange
        For a parameter outside the family's domain.
    """
    family, sep, arg = name.partition(":")
    if not sep:
        raise KeyError(f"catalog address {name!r} lacks ':<n>'")
    try:
        value = float(arg)
    except ValueError:
        raise KeyError(f"bad parameter in catalog address {name!r}") from None
    if family in ("minkowski", "alt-l2"):
        if not value.is_integer():
            raise KeyError(f"{family} needs an integer parameter, got {arg!r}")
        builder = minkowski if family == "minkowski" else alternating_l2
        return CatalogEntry(name, value, builder(int(value)))
    if family in _FAMILIES:
        if not (math.isfinite(value) and value > 1):
            raise ParamOutOfRange(f"{family} needs a parameter above 1, got {arg!r}")
        return CatalogEntry(name, value, _plane(), _FAMILIES[family])
    raise KeyError(f"unknown catalog family {family!r}")
