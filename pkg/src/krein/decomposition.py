"""Fundamental decompositions, fundamental symmetries and J-norms.

A fundamental decomposition splits the space into a positive definite part
K+ and a negative definite part K-, mutually orthogonal for the indefinite
form.  Its projections P+ and P- are oblique in the Euclidean sense but
self-adjoint for the form, and J = P+ - P- is the fundamental symmetry.
Every J turns the indefinite form into a genuine inner product
(x, y)_J = [Jx, y], whose norm is the J-norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import (
    AxiomViolation,
    CompanionNotNegative,
    Degenerate,
    NegativeRadicand,
    NeutralAxis,
    NotOrthogonal,
    NotUniformlyPositive,
    WrongRank,
)
from .numerics import as_matrix, fix_phase, hermitian_eig, null_space, numerical_rank, solve
from .space import DEGEN_TOL, NEUTRAL_TOL, KreinSpace

AXIOM_TOL = 1e-8
ORTH_TOL = 1e-8
POS_TOL = 1e-10


def _columns(sp: KreinSpace, B) -> np.ndarray:
    A = np.array(B, dtype=complex)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    if A.ndim != 2 or A.shape[0] != sp.dim:
        raise WrongRank(f"basis of shape {A.shape} does not live in dimension {sp.dim}")
    return A


def _unit_columns(B: np.ndarray) -> np.ndarray:
    if B.shape[1] == 0:
        return B
    return B / np.linalg.norm(B, axis=0)


def restricted_gram(sp: KreinSpace, B) -> np.ndarray:
    """The Gram matrix ``B^H G B`` of the form restricted to span(B)."""
    B = _columns(sp, B)
    H = B.conj().T @ sp.gram @ B
    return 0.5 * (H + H.conj().T)


def _definiteness(sp: KreinSpace, B: np.ndarray) -> tuple[float, float]:
    """Extreme eigenvalues of the restricted Gram of the unit-normalised basis."""
    if B.shape[1] == 0:
        return math.inf, -math.inf
    w = hermitian_eig(restricted_gram(sp, _unit_columns(B))).eigenvalues
    return float(w[-1]), float(w[0])


def oblique_projection(sp: KreinSpace, B) -> np.ndarray:
    """Form-orthogonal projection onto span(B): ``B (B^H G B)^-1 B^H G``."""
    B = _columns(sp, B)
    if B.shape[1] == 0:
        return np.zeros((sp.dim, sp.dim), dtype=complex)
    H = B.conj().T @ sp.gram @ B
    return B @ solve(H, B.conj().T @ sp.gram)


def projection_onto_line(sp: KreinSpace, v, u) -> np.ndarray:
    """Project `u` onto span{v}: ``([u, v] / [v, v]) v``.

    Raises :class:`NeutralAxis` when `v` is neutral, where the projection
    does not exist.
    """
    v = sp.vector(v)
    u = sp.vector(u)
    vv = sp.norm2(v)
    if abs(vv) <= NEUTRAL_TOL * float(np.vdot(v, v).real) * sp.scale:
        raise NeutralAxis("cannot project onto the span of a neutral vector")
    return (np.vdot(v, sp.gram @ u) / vv) * v


@dataclass(frozen=True, eq=False)
class FundamentalDecomposition:
    space: KreinSpace
    basis_plus: np.ndarray
    basis_minus: np.ndarray
    proj_plus: np.ndarray = field(repr=False)
    proj_minus: np.ndarray = field(repr=False)
    definite: bool = False

    @property
    def dims(self) -> tuple[int, int]:
        return self.basis_plus.shape[1], self.basis_minus.shape[1]

    def swapped(self, sp: KreinSpace) -> "FundamentalDecomposition":
        """Reinterpret a decomposition of the anti-space as one of `sp`.

        The projections are unchanged; only the roles of K+ and K- swap.
        """
        return FundamentalDecomposition(
            sp, self.basis_minus, self.basis_plus, self.proj_minus, self.proj_plus, self.definite
        )

    def norm_via_projection(self, x) -> float:
        """J-norm of `x` from ``2[P+x, P+x] - [x, x]``."""
        sp = self.space
        x = sp.vector(x)
        px = self.proj_plus @ x
        val = 2.0 * sp.norm2(px) - sp.norm2(x)
        return math.sqrt(max(val, 0.0))

    def symmetry(self) -> "FundamentalSymmetry":
        return symmetry_of(self)


def _assemble(sp: KreinSpace, Bp: np.ndarray, Bm: np.ndarray) -> FundamentalDecomposition:
    Pp = oblique_projection(sp, Bp)
    Pm = np.eye(sp.dim, dtype=complex) - Pp
    definite = Bp.shape[1] == 0 or Bm.shape[1] == 0
    return FundamentalDecomposition(sp, Bp, Bm, Pp, Pm, definite)


def canonical_decomposition(sp: KreinSpace) -> FundamentalDecomposition:
    """Decomposition into the positive and negative eigenspaces of G.

    Definite spaces get a trivial decomposition with ``definite=True``.
    """
    p, _ = sp.signature
    V = np.array(sp.eig.eigenvectors)
    return _assemble(sp, V[:, :p], V[:, p:])


def decomposition_from_positive_subspace(sp: KreinSpace, Bplus) -> FundamentalDecomposition:
    """Complete a maximal positive subspace to a fundamental decomposition.

    Parameters
    ----------
    sp : KreinSpace
    Bplus : array_like
        ``n x p`` matrix whose columns span the candidate K+, where p is the
        number of positive eigenvalues of the Gram matrix.  A 1-D input is a
        single column.

    Returns
    -------
    FundamentalDecomposition
        K- is the form-orthogonal companion of K+, i.e. the kernel of
        ``Bplus^H G``.  The candidate basis is stored untouched.
    """
    B = _columns(sp, Bplus)
    p, _ = sp.signature
    if B.shape[1] != p:
        raise WrongRank(f"K+ needs {p} columns, got {B.shape[1]}")
    if numerical_rank(B) != p:
        raise WrongRank("columns of the K+ basis are linearly dependent")
    lo, _ = _definiteness(sp, B)
    if B.shape[1] and lo <= POS_TOL * sp.scale:
        raise NotUniformlyPositive(f"restricted Gram has eigenvalue {lo:.3e} <= 0")
    companion = null_space(B.conj().T @ sp.gram)
    if companion.shape[1] != sp.dim - p:
        raise CompanionNotNegative(f"companion has dimension {companion.shape[1]}, expected {sp.dim - p}")
    _, hi = _definiteness(sp, companion)
    if companion.shape[1] and hi >= -POS_TOL * sp.scale:
        raise CompanionNotNegative(f"companion restricted Gram has eigenvalue {hi:.3e} >= 0")
    return _assemble(sp, B, companion)


def decomposition_from_bases(sp: KreinSpace, Bplus, Bminus) -> FundamentalDecomposition:
    """Validate an explicit pair of bases as a fundamental decomposition."""
    Bp = _columns(sp, Bplus)
    Bm = _columns(sp, Bminus)
    if Bp.shape[1] + Bm.shape[1] != sp.dim or numerical_rank(np.hstack([Bp, Bm])) != sp.dim:
        raise WrongRank("the two bases do not span the space")
    if (Bp.shape[1], Bm.shape[1]) != sp.signature:
        raise WrongRank(f"dimensions {(Bp.shape[1], Bm.shape[1])} differ from signature {sp.signature}")
    cross = _unit_columns(Bm).conj().T @ sp.gram @ _unit_columns(Bp)
    if cross.size and np.max(np.abs(cross)) > ORTH_TOL * sp.scale:
        raise NotOrthogonal(f"K+ and K- are not orthogonal (max |[b+, b-]| = {np.max(np.abs(cross)):.3e})")
    lo, _ = _definiteness(sp, Bp)
    if Bp.shape[1] and lo <= POS_TOL * sp.scale:
        raise NotUniformlyPositive(f"restricted Gram of K+ has eigenvalue {lo:.3e} <= 0")
    _, hi = _definiteness(sp, Bm)
    if Bm.shape[1] and hi >= -POS_TOL * sp.scale:
        raise CompanionNotNegative(f"restricted Gram of K- has eigenvalue {hi:.3e} >= 0")
    return _assemble(sp, Bp, Bm)


def complete_basis(sp: KreinSpace, vectors) -> tuple[np.ndarray, np.ndarray]:
    """Form-orthonormal bases of the positive and negative parts of a complement.

    `vectors` must span a nondegenerate subspace.  Its form-orthogonal
    complement is diagonalised, and the result is returned as two column
    matrices whose columns c satisfy ``[c, c] = +1`` and ``[c, c] = -1``
    respectively, mutually orthogonal and orthogonal to `vectors`.  Positive
    columns come in order of decreasing restricted eigenvalue.  A degenerate
    span (one containing a vector orthogonal to all of it) raises
    :class:`Degenerate`.
    """
    S = _columns(sp, vectors)
    W = null_space(S.conj().T @ sp.gram)
    if W.shape[1] == 0:
        empty = np.zeros((sp.dim, 0), dtype=complex)
        return empty, empty
    w, U = hermitian_eig(restricted_gram(sp, W))
    if np.min(np.abs(w)) <= DEGEN_TOL * sp.scale:
        raise Degenerate("the given vectors span a degenerate subspace")
    C = fix_phase((W @ U) / np.sqrt(np.abs(w)))
    return C[:, w > 0], C[:, w < 0]


@dataclass(frozen=True)
class SymmetryReport:
    """Axiom residuals of a candidate fundamental symmetry."""

    r_invol: float
    r_selfadj: float
    r_isom: float
    min_eig: float
    tol: float

    @property
    def passed(self) -> bool:
        return max(self.r_invol, self.r_selfadj, self.r_isom) <= self.tol and self.min_eig > 0

    def as_dict(self) -> dict:
        return {
            "r_invol": self.r_invol,
            "r_selfadj": self.r_selfadj,
            "r_isom": self.r_isom,
            "min_eig": self.min_eig,
            "tol": self.tol,
            "pass": self.passed,
        }


def verify_symmetry(sp: KreinSpace, J) -> SymmetryReport:
    """Residuals of J^2 = I, form-self-adjointness and form-isometry.

    ``min_eig`` is the smallest eigenvalue of the Hermitian part of ``G J``,
    the matrix of (x, y)_J; the report passes iff every residual is within
    ``1e-8 * |G|_F`` and ``min_eig > 0``.
    """
    J = as_matrix(J)
    if J.shape != sp.gram.shape:
        raise WrongRank(f"symmetry of shape {J.shape} for a space of dimension {sp.dim}")
    G = sp.gram
    Jh = J.conj().T
    I = np.eye(sp.dim)
    GJ = G @ J
    form = 0.5 * (GJ + GJ.conj().T)
    return SymmetryReport(
        r_invol=float(np.linalg.norm(J @ J - I)),
        r_selfadj=float(np.linalg.norm(GJ - Jh @ G)),
        r_isom=float(np.linalg.norm(Jh @ G @ J - G)),
        min_eig=float(hermitian_eig(form).eigenvalues[-1]),
        tol=AXIOM_TOL * sp.scale,
    )


@dataclass(frozen=True, eq=False)
class FundamentalSymmetry:
    space: KreinSpace
    matrix: np.ndarray
    report: SymmetryReport
    decomposition: Optional[FundamentalDecomposition] = field(default=None, repr=False)

    @property
    def residuals(self) -> tuple[float, float, float]:
        r = self.report
        return r.r_invol, r.r_selfadj, r.r_isom

    def inner(self, x, y) -> complex:
        return j_inner(self, x, y)

    def norm(self, x) -> float:
        return j_norm(self, x)


def symmetry_of(d: FundamentalDecomposition) -> FundamentalSymmetry:
    """``J = P+ - P-`` for a decomposition, with its axioms checked.

    Raises :class:`AxiomViolation` when the residuals or the positivity of
    (., .)_J fail, which means the decomposition was inconsistent.  The
    attached report keeps the absolute tolerance, so a valid but badly
    conditioned J is returned with ``report.passed`` False.
    """
    J = d.proj_plus - d.proj_minus
    report = verify_symmetry(d.space, J)
    # rounding alone leaves residuals of order eps*|J|^2, so the guard (not
    # the report) is relative to the conditioning of J
    guard = report.tol * max(1.0, float(np.linalg.norm(J, 2)) ** 2)
    if max(report.r_invol, report.r_selfadj, report.r_isom) > guard or not report.min_eig > 0:
        raise AxiomViolation(f"fundamental symmetry fails its axioms: {report.as_dict()}")
    J.flags.writeable = False
    return FundamentalSymmetry(d.space, J, report, d)


def symmetry_from_matrix(sp: KreinSpace, J) -> FundamentalSymmetry:
    """Wrap an explicit matrix, raising :class:`AxiomViolation` if invalid."""
    J = as_matrix(J)
    report = verify_symmetry(sp, J)
    if not report.passed:
        raise AxiomViolation(f"matrix is not a fundamental symmetry: {report.as_dict()}")
    J.flags.writeable = False
    return FundamentalSymmetry(sp, J, report)


def j_inner(sym: FundamentalSymmetry, x, y) -> complex:
    sp = sym.space
    return sp.inner(sym.matrix @ sp.vector(x), y)


def j_norm(sym: FundamentalSymmetry, x) -> float:
    """``sqrt([Jx, x])``; tiny negative radicands from rounding clamp to 0."""
    sp = sym.space
    x = sp.vector(x)
    rad = float(np.vdot(x, sp.gram @ (sym.matrix @ x)).real)
    if rad < 0:
        if rad < -AXIOM_TOL * sp.scale * float(np.vdot(x, x).real):
            raise NegativeRadicand(f"[Jx, x] = {rad:.3e} < 0; J is not a fundamental symmetry")
        rad = 0.0
    return math.sqrt(rad)
