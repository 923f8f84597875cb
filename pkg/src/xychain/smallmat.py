"""Dense complex linear algebra for 2x2 and 4x4 matrices.

Matrices are plain ``numpy.ndarray`` objects with complex dtype. Everything
here is deliberately self-contained so it can serve as an independent
numerical reference for the closed-form expressions elsewhere in the package.
"""
from dataclasses import dataclass

import numpy as np

SUPPORTED_DIMS = (2, 4)

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

_JACOBI_TOL = 1e-14
_JACOBI_MAX_SWEEPS = 50
_TAYLOR_DEGREE = 18


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in descending order, eigenvectors as the columns of ``vectors``."""

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self):
        return (self.vectors * self.values) @ self.vectors.conj().T


def as_matrix(a, dims=SUPPORTED_DIMS):
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in dims:
        raise ValueError(f"expected a square matrix of dimension {dims}, got shape {m.shape}")
    return m


def dagger(a):
    return np.conj(np.asarray(a)).T


def is_hermitian(a, tol=1e-10):
    a = np.asarray(a)
    return bool(np.max(np.abs(a - dagger(a))) < tol)


def is_unitary(a, tol=1e-10):
    a = np.asarray(a)
    return bool(np.max(np.abs(a @ dagger(a) - np.eye(a.shape[0]))) < tol)


def is_positive(a, tol=1e-12):
    return bool(is_hermitian(a) and eig_hermitian(a).values[-1] >= -tol)


def kron(a, b):
    """Kronecker product of two 2x2 matrices, ``a`` acting on the left qubit."""
    a = as_matrix(a, dims=(2,))
    b = as_matrix(b, dims=(2,))
    out = np.empty((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            out[2 * i:2 * i + 2, 2 * j:2 * j + 2] = a[i, j] * b
    return out


def eig_hermitian(a):
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the real symmetric Jacobi rotation that annihilates it. Sweeps
    stop once every off-diagonal modulus is below ``1e-14`` times the
    Frobenius norm.

    Raises ``ValueError`` for non-Hermitian input.
    """
    a = as_matrix(a)
    if not is_hermitian(a, tol=1e-10):
        raise ValueError("eig_hermitian requires a Hermitian matrix")
    return _jacobi(a)


def singular_values(a):
    """Singular values, descending, from the Hermitian dilation [[0, a], [a^H, 0]].

    Unlike taking square roots of eig(a^H a), small singular values keep an
    absolute error of order machine epsilon times the norm.
    """
    a = as_matrix(a)
    n = a.shape[0]
    dil = np.zeros((2 * n, 2 * n), dtype=complex)
    dil[:n, n:] = a
    dil[n:, :n] = dagger(a)
    return np.clip(_jacobi(dil).values[:n], 0.0, None)


def _jacobi(a):
    n = a.shape[0]
    a = 0.5 * (a + dagger(a))
    v = np.eye(n, dtype=complex)
    scale = max(np.linalg.norm(a), np.finfo(float).tiny)
    skip = _JACOBI_TOL * scale * 1e-3

    for _ in range(_JACOBI_MAX_SWEEPS):
        off = np.abs(a - np.diag(np.diag(a)))
        if off.max() <= _JACOBI_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= skip:
                    continue
                ph = np.conj(apq / mag)
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # a <- R^H a R with R = [[c, s], [-s ph, c ph]] on the (p, q) plane
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * ph * cq
                a[:, q] = s * cp + c * ph * cq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * np.conj(ph) * rq
                a[q, :] = s * rp + c * np.conj(ph) * rq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * ph * vq
                v[:, q] = s * vp + c * ph * vq
    else:
        raise RuntimeError("Jacobi iteration did not converge")

    values = np.real(np.diag(a))
    order = np.argsort(values)[::-1]
    return EigenDecomposition(values=values[order], vectors=v[:, order])


def expm(a):
    """Matrix exponential by scaling and squaring a truncated Taylor series.

    The matrix is scaled by ``2**-s`` so its 1-norm drops below 0.5, the
    degree-18 Taylor polynomial is evaluated by Horner's rule, and the result
    is squared ``s`` times.
    """
    a = as_matrix(a)
    n = a.shape[0]
    norm = np.max(np.sum(np.abs(a), axis=0))
    squarings = 0
    if norm >= 0.5:
        squarings = int(np.ceil(np.log2(norm / 0.5))) + 1
    scaled = a / 2.0 ** squarings

    ident = np.eye(n, dtype=complex)
    out = ident.copy()
    for k in range(_TAYLOR_DEGREE, 0, -1):
        out = ident + (scaled @ out) / k
    for _ in range(squarings):
        out = out @ out
    return out


def sqrtm_psd(a, clamp=1e-12):
    """Principal square root of a positive semidefinite Hermitian matrix."""
    dec = eig_hermitian(a)
    vals = dec.values
    if vals[-1] < -clamp * max(1.0, abs(vals[0])):
        raise ValueError("matrix is not positive semidefinite")
    roots = np.sqrt(np.clip(vals, 0.0, None))
    return (dec.vectors * roots) @ dagger(dec.vectors)
