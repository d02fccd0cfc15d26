"""Fundamental symmetries that give a vector a prescribed J-norm.

For a non-neutral x the J-norms over all fundamental symmetries fill
[sqrt|[x, x]|, inf); for a neutral x they fill (0, inf).  :func:`target_norm`
realises any value in that range constructively:

* x negative: complete a decomposition with x in K-, take a positive
  partner y of x, find the neutral point z on the segment from x to y and
  tilt the positive axis to v(t) = t*y + (1 - t)*z.  The J-norm of x is then
  a rational function of t, and the target value is a root of a quadratic.
* x positive: the same construction on the anti-space (form negated), with
  K+ and K- swapped afterwards.
* x neutral: pair x with a neutral y, [x, y] = 1, split into u = (x + y)/sqrt2
  and v = (x - y)/sqrt2, and tilt the positive axis to w(t) = u + t*v with
  t = (1 - b)/(1 + b), b the squared target.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .decomposition import (
    FundamentalSymmetry,
    canonical_decomposition,
    complete_basis,
    decomposition_from_positive_subspace,
    j_norm,
    symmetry_of,
)
from .errors import (
    DegeneratePairing,
    EmptyGap,
    HypothesisViolated,
    InsufficientDimension,
    NeedsBothSigns,
    NoRootInUnitInterval,
    NotNeutral,
    TargetBelowRange,
    ZeroVector,
)
from .numerics import quadratic_real_roots
from .space import NEUTRAL_TOL, KreinSpace, VectorClass, classify

TARGET_TOL = 1e-8
# slack for targets that sit on the lower bound up to rounding
_BOUNDARY_SLACK = 1e-12
_ROOT_SLACK = 1e-9
# canonical positive part below this fraction of |x| counts as absent
_PLANE_SLACK = 1e-12


@dataclass(frozen=True)
class NormRange:
    """Attainable J-norms of one vector: ``[lower, inf)`` or ``(lower, inf)``."""

    lower: float
    lower_attained: bool
    upper: float = math.inf

    def __contains__(self, a: float) -> bool:
        return a >= self.lower if self.lower_attained else a > self.lower


def norm_range(sp: KreinSpace, x) -> NormRange:
    x = sp.vector(x)
    if not np.any(x):
        raise ZeroVector("norm range of the zero vector")
    sp.require_indefinite()
    if classify(sp, x) is VectorClass.NEUTRAL:
        return NormRange(0.0, False)
    return NormRange(math.sqrt(abs(sp.norm2(x))), True)


class Branch(str, enum.Enum):
    NON_NEUTRAL_NEG = "NonNeutralNeg"
    NON_NEUTRAL_POS = "NonNeutralPos"
    NEUTRAL = "Neutral"


@dataclass(frozen=True, eq=False)
class TargetTrace:
    """Every intermediate quantity of one :func:`target_norm` run.

    On the positive branch the scalars (A, C, D, quadratic) are those of the
    anti-space, where x is negative; the vectors are the same coordinates
    either way.  ``y`` is stored after normalisation to ``[y, y] = +-1``.
    ``orientation`` is the sign s such that z lies on the segment from s*x
    to y; the J-norm of x does not depend on it.
    """

    branch: Branch
    a: float
    b: float
    D: float
    t_b: float
    y: np.ndarray
    v: np.ndarray
    achieved: float
    z: Optional[np.ndarray] = None
    s0: Optional[float] = None
    A: Optional[float] = None
    C: Optional[float] = None
    quadratic_coeffs: Optional[tuple[float, float, float]] = None
    roots: list = field(default_factory=list)
    u_pm: Optional[tuple[np.ndarray, np.ndarray]] = None
    orientation: float = 1.0

    @property
    def discriminant(self) -> Optional[float]:
        if self.quadratic_coeffs is None:
            return None
        a2, a1, a0 = self.quadratic_coeffs
        return a1 * a1 - 4 * a2 * a0


def neutral_on_segment(sp: KreinSpace, xneg, ypos) -> tuple[float, np.ndarray]:
    """The neutral point ``z = s0*ypos + (1 - s0)*xneg`` with s0 in (0, 1).

    ``[z, z]`` is a real quadratic in s that is negative at 0 and positive at
    1, so exactly one root lies in between.
    """
    x = sp.vector(xneg)
    y = sp.vector(ypos)
    xx, yy = sp.norm2(x), sp.norm2(y)
    if not (xx < 0 < yy):
        raise NoRootInUnitInterval(f"need [x,x] < 0 < [y,y], got {xx:.3e} and {yy:.3e}")
    xy = sp.inner(y, x).real
    roots = quadratic_real_roots(yy - 2 * xy + xx, 2 * xy - 2 * xx, xx)
    inside = [s for s in roots if 0.0 < s < 1.0]
    if not inside:
        raise NoRootInUnitInterval(f"roots {roots} miss (0, 1)")
    s0 = inside[0]
    return s0, s0 * y + (1 - s0) * x


def _canonical_parts(S: KreinSpace, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p, _ = S.signature
    Vp = S.eig.eigenvectors[:, :p]
    xp = Vp @ (Vp.conj().T @ x)
    return xp, x - xp


def find_neutral_partner(sp: KreinSpace, x) -> np.ndarray:
    """A neutral y with ``[x, y] = 1`` for a neutral, nonzero x.

    Pairs x with a vector w of nonzero ``[x, w]``, rescales to ``[x, w] = 1``
    and returns ``w - ([w, w]/2) x``.  w is the canonical positive part of x,
    which gives ``y = (x+ - x-) / (2 [x+, x+])``; the standard basis vector
    of largest pairing is the fallback.
    """
    x = sp.vector(x)
    if not np.any(x):
        raise ZeroVector("the zero vector has no neutral partner")
    if classify(sp, x) is not VectorClass.NEUTRAL:
        raise NotNeutral(f"[x, x] = {sp.norm2(x):.3e} is not zero")
    floor = NEUTRAL_TOL * sp.scale * float(np.vdot(x, x).real)
    w, _ = _canonical_parts(sp, x)
    if abs(sp.inner(x, w)) <= floor:
        g = np.abs(sp.gram @ x)  # g[i] = |[x, e_i]|
        w = np.zeros(sp.dim, dtype=complex)
        w[int(np.argmax(g >= g.max() * (1 - 1e-12)))] = 1.0
    pairing = sp.inner(x, w)
    if abs(pairing) <= floor:
        raise DegeneratePairing("no vector pairs nontrivially with x")
    w = w / pairing.conjugate()
    return w - (sp.norm2(w) / 2) * x


def _completion(S: KreinSpace, x: np.ndarray):
    """Positive partner y, the rest L+ of a positive basis, and the segment orientation.

    For x negative, M- is taken as L- + span{x} and M+ as L+ + span{y}, where
    y is the boost partner of x inside the plane of its canonical parts and
    L+/L- are the canonical eigenspaces orthogonal to that plane.  When x has
    no canonical positive part, y is the leading positive eigendirection.
    The orientation is -1 when tilting from -x keeps the result on the side
    of the canonical decomposition, which is always the case once x has a
    positive part.
    """
    xp, xm = _canonical_parts(S, x)
    if np.linalg.norm(xp) <= _PLANE_SLACK * np.linalg.norm(x):
        plus, _ = complete_basis(S, x)
        if plus.shape[1] == 0:
            raise InsufficientDimension("no positive direction orthogonal to x")
        return plus[:, 0], plus[:, 1:], 1.0
    pp, pm = S.norm2(xp), -S.norm2(xm)
    y = pm * xp + pp * xm
    y = y / math.sqrt(S.norm2(y))
    Lplus, _ = complete_basis(S, np.column_stack([xp, xm]))
    return y, Lplus, -1.0


def _negative_branch(S: KreinSpace, x: np.ndarray, a: float):
    """Tilt construction for x negative in S; returns the decomposition and trace fields."""
    D = S.norm2(x)
    y, Lplus, sigma = _completion(S, x)
    s0, z = neutral_on_segment(S, sigma * x, y)
    A = abs(S.inner(x, z)) ** 2
    C = S.inner(y, z).real
    b = a * a
    bD = max(b + D, 0.0)
    if bD <= _BOUNDARY_SLACK * abs(D):
        bD = 0.0
    coeffs = (bD * (1 - 2 * C) - 2 * A, 2 * C * bD + 4 * A, -2 * A)
    if bD == 0.0:
        roots = [1.0, 1.0]
    else:
        roots = quadratic_real_roots(*coeffs)
    admissible = [t for t in roots if 0.0 < t <= 1.0 + _ROOT_SLACK]
    if not admissible:
        raise NoRootInUnitInterval(f"quadratic {coeffs} has roots {roots}, none in (0, 1]")
    t = min(max(admissible), 1.0)
    v = t * y + (1 - t) * z
    d = decomposition_from_positive_subspace(S, np.column_stack([Lplus, v]))
    fields = dict(
        D=D, t_b=t, y=y, v=v, z=z, s0=s0, A=A, C=C, quadratic_coeffs=coeffs, roots=roots, orientation=sigma
    )
    return d, fields


def _neutral_branch(sp: KreinSpace, x: np.ndarray, a: float):
    y = find_neutral_partner(sp, x)
    u = (x + y) / math.sqrt(2)
    v = (x - y) / math.sqrt(2)
    Lplus, _ = complete_basis(sp, np.column_stack([u, v]))
    b = a * a
    t = (1 - b) / (1 + b)
    # u + t v = sqrt2 (x + b y) / (1 + b); the unscaled form avoids the
    # cancellation in 1 - t when b is small
    axis = x + b * y
    w = math.sqrt(2) / (1 + b) * axis
    d = decomposition_from_positive_subspace(sp, np.column_stack([Lplus, axis]))
    fields = dict(D=sp.norm2(x), t_b=t, y=y, v=w, u_pm=(u, v))
    return d, fields


def target_norm(sp: KreinSpace, x, a: float) -> tuple[FundamentalSymmetry, TargetTrace]:
    """Build a fundamental symmetry J with ``j_norm(J, x) == a``.

    Parameters
    ----------
    sp : KreinSpace
        Must be indefinite.
    x : array_like
        Nonzero vector.
    a : float
        Target norm.  For non-neutral x any ``a >= sqrt|[x, x]|`` (the
        boundary gives the completed decomposition itself, t_b = 1); for
        neutral x any ``a > 0``.

    Returns
    -------
    (FundamentalSymmetry, TargetTrace)

    Raises
    ------
    TargetBelowRange
        `a` is outside the attainable range of norms of `x`.
    NeedsBothSigns
        The space is definite.
    """
    x = sp.vector(x)
    if not np.any(x):
        raise ZeroVector("cannot prescribe the norm of the zero vector")
    sp.require_indefinite(NeedsBothSigns)
    a = float(a)
    rng = norm_range(sp, x)
    if rng.lower_attained:
        if a < rng.lower * (1 - _BOUNDARY_SLACK):
            raise TargetBelowRange(f"target {a!r} below the minimum norm {rng.lower!r}")
        a = max(a, rng.lower)
    elif not a > 0:
        raise TargetBelowRange(f"target {a!r} must be positive for a neutral vector")

    kind = classify(sp, x)
    if kind is VectorClass.NEUTRAL:
        branch = Branch.NEUTRAL
        d, fields = _neutral_branch(sp, x, a)
    elif kind is VectorClass.NEGATIVE:
        branch = Branch.NON_NEUTRAL_NEG
        d, fields = _negative_branch(sp, x, a)
    else:
        branch = Branch.NON_NEUTRAL_POS
        d, fields = _negative_branch(sp.anti(), x, a)
        d = d.swapped(sp)

    sym = symmetry_of(d)
    trace = TargetTrace(branch=branch, a=a, b=a * a, achieved=j_norm(sym, x), **fields)
    return sym, trace


def strictly_larger(sp: KreinSpace, x, J: FundamentalSymmetry) -> FundamentalSymmetry:
    """A symmetry K with ``|x|_K = 2*max(|x|_J, lower) + 1 > |x|_J``."""
    x = sp.vector(x)
    if classify(sp, x) is VectorClass.NEUTRAL:
        raise HypothesisViolated("strictly_larger needs a non-neutral vector")
    current = j_norm(J, x)
    k = 2 * max(current, norm_range(sp, x).lower) + 1
    return target_norm(sp, x, k)[0]


def sandwich(sp: KreinSpace, x, J1: FundamentalSymmetry, J2: FundamentalSymmetry) -> FundamentalSymmetry:
    """A symmetry whose norm of x is the midpoint between those of J1 and J2.

    The lower end is raised to the bottom of the norm range when needed.
    """
    x = sp.vector(x)
    n1, n2 = j_norm(J1, x), j_norm(J2, x)
    if not n2 - n1 > TARGET_TOL * (1 + n2):
        raise EmptyGap(f"no room between |x|_J1 = {n1!r} and |x|_J2 = {n2!r}")
    lo = max(n1, norm_range(sp, x).lower)
    return target_norm(sp, x, 0.5 * (lo + n2))[0]


def scaling_symmetry(sp: KreinSpace, x, alpha: complex, eps: float) -> FundamentalSymmetry:
    """A symmetry with ``| |x|_J - |alpha x|_J | < eps``.

    Since ``|alpha x|_J = |alpha| |x|_J`` the gap is ``|1 - |alpha|| * |x|_J``,
    so it suffices to target a norm c strictly between the bottom of the norm
    range and ``eps / |1 - |alpha||``; the midpoint is used.
    """
    x = sp.vector(x)
    gap = abs(1 - abs(alpha))
    if gap == 0.0:
        return symmetry_of(canonical_decomposition(sp))
    rng = norm_range(sp, x)
    if not eps > rng.lower * gap:
        raise HypothesisViolated(f"eps = {eps!r} must exceed {rng.lower * gap!r}")
    c = 0.5 * (rng.lower + eps / gap)
    return target_norm(sp, x, c)[0]
