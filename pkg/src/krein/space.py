"""Finite-dimensional Krein spaces.

A space is a coordinate space C^n with the indefinite Hermitian form

    [x, y] = y^H G x = sum_ij G_ij x_j conj(y_i),

linear in the first argument and conjugate-linear in the second.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import Degenerate, DimensionMismatch, NotIndefinite, ZeroVector
from .numerics import EigenResult, check_hermitian, hermitian_eig

DEGEN_TOL = 1e-10
NEUTRAL_TOL = 1e-9


class VectorClass(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"


@dataclass(frozen=True, eq=False)
class KreinSpace:
    """A nondegenerate Hermitian form on C^n.

    Build instances with :func:`make_space`, which validates the Gram matrix
    and caches its eigendecomposition.
    """

    gram: np.ndarray
    eig: EigenResult = field(repr=False)

    @property
    def dim(self) -> int:
        return self.gram.shape[0]

    @property
    def signature(self) -> tuple[int, int]:
        w = self.eig.eigenvalues
        return int(np.sum(w > 0)), int(np.sum(w < 0))

    @property
    def indefinite(self) -> bool:
        p, q = self.signature
        return p >= 1 and q >= 1

    @property
    def scale(self) -> float:
        """Frobenius norm of the Gram matrix; sets every tolerance."""
        return float(np.linalg.norm(self.gram))

    def require_indefinite(self, exc=NotIndefinite) -> None:
        if not self.indefinite:
            raise exc(f"space with signature {self.signature} is definite; both signs are needed")

    def vector(self, x) -> np.ndarray:
        """Coerce `x` to a complex coordinate vector of this space."""
        v = np.array(x, dtype=complex).reshape(-1)
        if v.shape[0] != self.dim:
            raise DimensionMismatch(f"vector of length {v.shape[0]} in a space of dimension {self.dim}")
        return v

    def inner(self, x, y) -> complex:
        return inner(self, x, y)

    def norm2(self, x) -> float:
        """The real number [x, x]."""
        x = self.vector(x)
        return float(np.vdot(x, self.gram @ x).real)

    def anti(self) -> "KreinSpace":
        """The same vector space under the form -[., .]."""
        w, V = self.eig
        return KreinSpace(_frozen(-self.gram), EigenResult(_frozen(-w[::-1]), _frozen(V[:, ::-1])))

    def __repr__(self) -> str:
        return f"KreinSpace(dim={self.dim}, signature={self.signature})"


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.flags.writeable = False
    return a


def make_space(gram) -> KreinSpace:
    """Validate a Gram matrix and wrap it as a :class:`KreinSpace`.

    Raises
    ------
    NotHermitian
        If `gram` is not square or not Hermitian.
    Degenerate
        If the smallest eigenvalue magnitude is below ``1e-10`` times the
        largest.
    """
    G = check_hermitian(gram)
    if G.shape[0] < 1:
        raise Degenerate("empty Gram matrix")
    eig = hermitian_eig(G)
    mags = np.abs(eig.eigenvalues)
    if mags.min() < DEGEN_TOL * mags.max():
        raise Degenerate(f"Gram matrix is degenerate: eigenvalues {eig.eigenvalues}")
    return KreinSpace(_frozen(G), EigenResult(_frozen(eig.eigenvalues), _frozen(eig.eigenvectors)))


def inner(sp: KreinSpace, x, y) -> complex:
    x = sp.vector(x)
    y = sp.vector(y)
    return complex(np.vdot(y, sp.gram @ x))


def is_neutral(sp: KreinSpace, x) -> bool:
    x = sp.vector(x)
    return abs(sp.norm2(x)) <= NEUTRAL_TOL * float(np.vdot(x, x).real) * sp.scale


def classify(sp: KreinSpace, x) -> VectorClass:
    """Sign class of ``[x, x]``, with a scale-aware neutral band."""
    x = sp.vector(x)
    if not np.any(x):
        raise ZeroVector("the zero vector has no class")
    if is_neutral(sp, x):
        return VectorClass.NEUTRAL
    return VectorClass.POSITIVE if sp.norm2(x) > 0 else VectorClass.NEGATIVE
