"""Random spaces and vectors for property tests."""

import numpy as np

from krein.space import make_space


def random_unitary(rng, n):
    X = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    Q, R = np.linalg.qr(X)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def random_gram(rng, n, p=None):
    """Hermitian G = Q diag(d) Q^H with p positive and n - p negative entries."""
    if p is None:
        p = int(rng.integers(1, n))
    mags = rng.uniform(0.5, 3.0, size=n)
    d = np.concatenate([mags[:p], -mags[p:]])
    Q = random_unitary(rng, n)
    G = Q @ np.diag(d) @ Q.conj().T
    return 0.5 * (G + G.conj().T), Q, d


def random_space(rng, n, p=None):
    G, Q, d = random_gram(rng, n, p)
    return make_space(G), Q, d


def random_vector(rng, n):
    return rng.normal(size=n) + 1j * rng.normal(size=n)


def random_neutral(rng, Q, d):
    """A random vector with [x, x] = 0, built in the eigenbasis of G."""
    c = random_vector(rng, len(d))
    pos = np.sum(d[d > 0] * np.abs(c[d > 0]) ** 2)
    neg = -np.sum(d[d < 0] * np.abs(c[d < 0]) ** 2)
    c[d < 0] *= np.sqrt(pos / neg)
    return Q @ c


def random_symmetry(rng, sp, spread=0.5):
    """A fundamental symmetry with K+ spanned by the columns of E+ + E- K, |K| small."""
    from krein.decomposition import canonical_decomposition, decomposition_from_positive_subspace, symmetry_of

    d = canonical_decomposition(sp)
    Ep, Em = d.basis_plus, d.basis_minus
    K = spread * (rng.normal(size=(Em.shape[1], Ep.shape[1])) + 1j * rng.normal(size=(Em.shape[1], Ep.shape[1])))
    K /= max(1.0, np.linalg.norm(K, 2) / spread)
    return symmetry_of(decomposition_from_positive_subspace(sp, Ep + Em @ K))


def metric(sym):
    """Hermitian matrix H with |x|_J^2 = x^H H x."""
    H = sym.space.gram @ sym.matrix
    return 0.5 * (H + H.conj().T)


def equivalence_bounds(J1, J2):
    """Sharp constants c, C with c <= |x|_J1 / |x|_J2 <= C for all x != 0."""
    L = np.linalg.cholesky(metric(J2))
    Li = np.linalg.inv(L)
    w = np.linalg.eigvalsh(Li @ metric(J1) @ Li.conj().T)
    return float(np.sqrt(w[0])), float(np.sqrt(w[-1]))
