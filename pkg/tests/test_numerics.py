import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krein.errors import DegenerateEquation, NoConvergence, NotHermitian
from krein.numerics import (
    check_hermitian,
    fix_phase,
    hermitian_eig,
    null_space,
    numerical_rank,
    quadratic_real_roots,
)

from helpers import random_unitary


def _random_hermitian(rng, n):
    X = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return X + X.conj().T


def test_eig_diagonal():
    w, V = hermitian_eig(np.diag([1.0, -1.0]))
    np.testing.assert_allclose(w, [1, -1])
    np.testing.assert_allclose(V, np.eye(2), atol=1e-15)


def test_eig_swap_matrix():
    w, V = hermitian_eig([[0, 1], [1, 0]])
    np.testing.assert_allclose(w, [1, -1], atol=1e-15)
    s = 1 / math.sqrt(2)
    np.testing.assert_allclose(V[:, 0], [s, s], atol=1e-15)
    # up to the phase convention: largest entry real positive
    assert abs(abs(np.vdot(V[:, 1], [s, -s])) - 1) < 1e-14


def test_eig_reconstructs_random_6x6():
    rng = np.random.default_rng(0)
    H = _random_hermitian(rng, 6)
    w, V = hermitian_eig(H)
    assert np.linalg.norm(V @ np.diag(w) @ V.conj().T - H) <= 1e-10 * np.linalg.norm(H)


@pytest.mark.parametrize("seed", range(20))
def test_eig_invariants(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 11))
    M = _random_hermitian(rng, n)
    w, V = hermitian_eig(M)
    scale = np.linalg.norm(M)
    assert np.linalg.norm(V @ np.diag(w) @ V.conj().T - M) <= 1e-9 * scale
    assert np.linalg.norm(V.conj().T @ V - np.eye(n)) <= 1e-9
    assert np.all(np.diff(w) <= 0)
    for i in range(n):
        assert np.linalg.norm(M @ V[:, i] - w[i] * V[:, i]) <= 1e-9 * scale


def test_eig_matches_numpy():
    rng = np.random.default_rng(7)
    M = _random_hermitian(rng, 8)
    np.testing.assert_allclose(hermitian_eig(M).eigenvalues, np.linalg.eigvalsh(M)[::-1], atol=1e-12)


def test_eig_repeated_eigenvalues():
    rng = np.random.default_rng(3)
    U = random_unitary(rng, 5)
    M = U @ np.diag([2.0, 2.0, 2.0, -1.0, -1.0]) @ U.conj().T
    w, V = hermitian_eig(M)
    np.testing.assert_allclose(w, [2, 2, 2, -1, -1], atol=1e-13)
    assert np.linalg.norm(V.conj().T @ V - np.eye(5)) < 1e-12


def test_eig_zero_and_empty():
    w, V = hermitian_eig(np.zeros((3, 3)))
    np.testing.assert_array_equal(w, 0)
    assert hermitian_eig(np.zeros((0, 0))).eigenvalues.size == 0


def test_eig_budget_exhausted():
    rng = np.random.default_rng(1)
    with pytest.raises(NoConvergence):
        hermitian_eig(_random_hermitian(rng, 6), max_sweeps=1)


def test_eig_deterministic():
    rng = np.random.default_rng(11)
    M = _random_hermitian(rng, 5)
    a, b = hermitian_eig(M), hermitian_eig(M.copy())
    np.testing.assert_array_equal(a.eigenvalues, b.eigenvalues)
    np.testing.assert_array_equal(a.eigenvectors, b.eigenvectors)


def test_not_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eig([[1, 2], [0, 1]])
    with pytest.raises(NotHermitian):
        check_hermitian(np.ones((2, 3)))


def test_hermitian_within_tolerance_is_accepted():
    M = np.array([[1.0, 1.0], [1.0 + 1e-13, -1.0]])
    H = check_hermitian(M)
    np.testing.assert_allclose(H, H.conj().T)


def test_fix_phase():
    V = fix_phase(np.array([[1j], [0.5]]))
    np.testing.assert_allclose(V[:, 0], [1, -0.5j])


def test_null_space_identity():
    assert null_space(np.eye(3)).shape == (3, 0)


def test_null_space_zero_map():
    K = null_space(np.zeros((2, 3)))
    assert K.shape == (3, 3)
    np.testing.assert_allclose(K.conj().T @ K, np.eye(3), atol=1e-15)


def test_null_space_single_row():
    K = null_space([[1, -1]])
    assert K.shape == (2, 1)
    np.testing.assert_allclose(K[:, 0], np.array([1, 1]) / math.sqrt(2), atol=1e-15)


@pytest.mark.parametrize("seed", range(10))
def test_null_space_residual(seed):
    rng = np.random.default_rng(seed)
    m, n = int(rng.integers(1, 6)), int(rng.integers(2, 8))
    r = int(rng.integers(0, min(m, n) + 1))
    M = (rng.normal(size=(m, r)) + 1j * rng.normal(size=(m, r))) @ (
        rng.normal(size=(r, n)) + 1j * rng.normal(size=(r, n))
    )
    K = null_space(M)
    assert K.shape[1] == n - r
    assert numerical_rank(M) == r
    for k in K.T:
        assert np.linalg.norm(M @ k) <= 1e-10 * max(np.linalg.norm(M), 1e-300)


def test_roots_worked_quadratic():
    np.testing.assert_allclose(quadratic_real_roots(1, -4, 1), [2 - math.sqrt(3), 2 + math.sqrt(3)], rtol=1e-15)


def test_roots_simple():
    assert quadratic_real_roots(1, 0, -1) == [-1.0, 1.0]
    assert quadratic_real_roots(0, 2, -1) == [0.5]
    assert quadratic_real_roots(1, 0, 1) == []


def test_roots_tiny_coefficients():
    assert quadratic_real_roots(4e-297, 4e-297, 0.0) == [-1.0, 0.0]


def test_roots_degenerate():
    with pytest.raises(DegenerateEquation):
        quadratic_real_roots(0, 0, 1)


def test_roots_no_cancellation():
    # small root of t^2 - 1e8 t + 1 is 1e-8 to full precision
    lo, hi = quadratic_real_roots(1, -1e8, 1)
    assert abs(lo - 1e-8) <= 1e-8 * 1e-14
    assert abs(hi - 1e8) <= 1e8 * 1e-14


def test_roots_tangent_double_root():
    a = 1 / 3
    # (t - a)^2 with rounded coefficients may have a tiny negative discriminant
    r = quadratic_real_roots(1.0, -2 * a, a * a)
    assert len(r) == 2 and abs(r[0] - a) < 1e-7 and abs(r[1] - a) < 1e-7


# zero or moderate magnitude; substituting roots near 1e300 would overflow the check itself
coef = st.one_of(st.just(0.0), st.floats(1e-6, 1e3), st.floats(-1e3, -1e-6))


@settings(max_examples=300, deadline=None)
@given(coef, coef, coef)
def test_roots_substitute(a2, a1, a0):
    if a2 == 0 and a1 == 0:
        return
    roots = quadratic_real_roots(a2, a1, a0)
    assert roots == sorted(roots)
    m = max(abs(a2), abs(a1), abs(a0))
    for t in roots:
        assert abs(a2 * t * t + a1 * t + a0) <= 1e-10 * m * (1 + t * t)
