"""Dense complex linear algebra for small matrices.

The eigensolver is a cyclic complex Jacobi iteration; at the dimensions this
package targets (a few dozen at most) it is accurate to working precision and
fully deterministic.  Null spaces go through LAPACK's SVD.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DegenerateEquation, NoConvergence, NotHermitian

HERM_TOL = 1e-10
EIG_TOL = 1e-9
RANK_TOL = 1e-10
MAX_SWEEPS = 100


class EigenResult(NamedTuple):
    """Eigenvalues sorted descending and the matching unitary eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(M) -> np.ndarray:
    """Return `M` as a 2-D complex array (a copy)."""
    A = np.array(M, dtype=complex)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {A.shape}")
    return A


def hermitian_residual(M: np.ndarray) -> float:
    return float(np.max(np.abs(M - M.conj().T))) if M.size else 0.0


def check_hermitian(M, tol: float = HERM_TOL) -> np.ndarray:
    """Validate that `M` is square and Hermitian; return its Hermitian part.

    The tolerance is relative to the Frobenius norm of `M`.
    """
    A = as_matrix(M)
    if A.shape[0] != A.shape[1]:
        raise NotHermitian(f"matrix is not square: shape {A.shape}")
    scale = np.linalg.norm(A)
    res = hermitian_residual(A)
    if res > tol * scale:
        raise NotHermitian(f"symmetry residual {res:.3e} exceeds {tol:.0e}*|M|_F = {tol * scale:.3e}")
    return 0.5 * (A + A.conj().T)


def fix_phase(V: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-magnitude entry is real and positive.

    Ties go to the first index.  Makes eigen- and null-space bases
    reproducible without changing the spans or orthonormality.
    """
    V = np.array(V, dtype=complex)
    for k in range(V.shape[1]):
        col = V[:, k]
        i = int(np.argmax(np.abs(col) > np.max(np.abs(col)) * (1 - 1e-12))) if col.size else 0
        if col.size and col[i] != 0:
            V[:, k] = col * (abs(col[i]) / col[i])
    return V


def _jacobi_pair(A: np.ndarray, V: np.ndarray, p: int, q: int) -> None:
    apq = A[p, q]
    r = abs(apq)
    phase = apq / r
    app, aqq = A[p, p].real, A[q, q].real
    theta = (aqq - app) / (2.0 * r)
    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
    if theta < 0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    # R = diag(1, conj(phase)) @ [[c, s], [-s, c]]; A <- R^H A R
    r00, r01 = c, s
    r10, r11 = -s * phase.conjugate(), c * phase.conjugate()

    colp = A[:, p].copy()
    colq = A[:, q]
    A[:, p] = colp * r00 + colq * r10
    A[:, q] = colp * r01 + colq * r11
    rowp = A[p, :].copy()
    rowq = A[q, :]
    A[p, :] = rowp * r00 + rowq * r10.conjugate()
    A[q, :] = rowp * r01 + rowq * r11.conjugate()
    A[p, q] = 0.0
    A[q, p] = 0.0
    A[p, p] = app - t * r
    A[q, q] = aqq + t * r

    vp = V[:, p].copy()
    vq = V[:, q]
    V[:, p] = vp * r00 + vq * r10
    V[:, q] = vp * r01 + vq * r11


def hermitian_eig(M, max_sweeps: int = MAX_SWEEPS) -> EigenResult:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    M : array_like
        Square Hermitian matrix (real input is promoted to complex).
    max_sweeps : int
        Iteration budget; exceeding it raises :class:`NoConvergence`.

    Returns
    -------
    EigenResult
        Real eigenvalues in descending order and a unitary matrix whose
        columns are the eigenvectors, each phase-normalised by
        :func:`fix_phase`.
    """
    A = check_hermitian(M)
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    scale = np.linalg.norm(A)
    if n == 0:
        return EigenResult(np.zeros(0), V)
    if scale == 0.0:
        return EigenResult(np.zeros(n), V)

    skip = 1e-18 * scale
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off <= 1e-17 * scale:
            break
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(A[p, q]) > skip:
                    _jacobi_pair(A, V, p, q)
                    rotated = True
        if not rotated:
            break
    else:
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off > 1e-17 * scale:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {off:.3e})")

    w = np.diag(A).real
    order = np.argsort(-w, kind="stable")
    return EigenResult(w[order], fix_phase(V[:, order]))


def null_space(M, rank_tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal basis (as columns) of the kernel of `M`.

    Singular values at or below ``rank_tol * sigma_max`` count as zero.  A
    full-rank input yields a matrix with zero columns.
    """
    A = as_matrix(M)
    m, n = A.shape
    if n == 0:
        return np.zeros((0, 0), dtype=complex)
    if m == 0:
        return np.eye(n, dtype=complex)
    _, s, Vh = np.linalg.svd(A)
    smax = s[0] if s.size else 0.0
    rank = int(np.sum(s > rank_tol * smax)) if smax > 0 else 0
    return fix_phase(Vh[rank:].conj().T)


def numerical_rank(M, rank_tol: float = RANK_TOL) -> int:
    A = as_matrix(M)
    return A.shape[1] - null_space(A, rank_tol).shape[1]


def solve(A, B) -> np.ndarray:
    return np.linalg.solve(as_matrix(A), np.asarray(B, dtype=complex))


def quadratic_real_roots(a2: float, a1: float, a0: float) -> list[float]:
    """Real roots of ``a2*t**2 + a1*t + a0``, ascending.

    Uses the cancellation-free pair ``q/a2, a0/q`` with
    ``q = -(a1 + sign(a1)*sqrt(disc))/2``.  A discriminant that is negative
    only by rounding (relative to the size of its two terms) counts as zero,
    so tangential double roots are not lost.
    """
    a2, a1, a0 = float(a2), float(a1), float(a0)
    if a2 == 0.0:
        if a1 == 0.0:
            raise DegenerateEquation(f"no unknown left in {a2}*t^2 + {a1}*t + {a0} = 0")
        return [-a0 / a1]
    # roots are scale-free; normalising keeps disc clear of under/overflow
    m = max(abs(a2), abs(a1), abs(a0))
    a2, a1, a0 = a2 / m, a1 / m, a0 / m
    disc = a1 * a1 - 4.0 * a2 * a0
    if disc < 0.0:
        if -disc > 8.0 * np.finfo(float).eps * (a1 * a1 + abs(4.0 * a2 * a0)):
            return []
        disc = 0.0
    sq = math.sqrt(disc)
    q = -0.5 * (a1 + math.copysign(sq, a1))
    if q == 0.0:
        return [0.0, 0.0]
    return sorted([q / a2, a0 / q])
