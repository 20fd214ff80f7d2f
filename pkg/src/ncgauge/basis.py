"""Hermitian matrix bases of sl(n) and their structure constants.

The differential-geometric machinery in this package is anchored on a
choice of basis ``E_1, ..., E_D`` of traceless Hermitian ``n x n``
matrices (``D = n**2 - 1`` for a complete basis, fewer for a closed
sub-basis).  Everything downstream — derivations, forms, connections,
curvature — is expressed through three tensors computed here:

* the structure constants ``C[k, l, m]`` defined by
  ``i [E_k, E_l] = sum_m C[k, l, m] E_m``,
* the metric ``g[k, l] = (1/n) tr(E_k E_l)`` and its inverse,
* the Gram data needed to expand arbitrary matrices in the basis.

The default basis is the generalized Gell-Mann family in *grouped*
order: first the symmetric off-diagonal pairs, then the antisymmetric
ones, then the diagonal matrices.  For ``n = 2`` this is exactly
``(sigma_x, sigma_y, sigma_z)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import NotHermitianError, ShapeError, SingularBasisError
from .tolerances import TAU_ALG

__all__ = [
    "dagger",
    "commutator",
    "anticommutator",
    "frob_norm",
    "is_hermitian",
    "is_antihermitian",
    "is_traceless",
    "is_unitary",
    "random_hermitian",
    "random_antihermitian",
    "random_traceless_hermitian",
    "random_unitary",
    "gellmann_basis",
    "basis_metric",
    "structure_constants",
    "MatrixBasis",
]


# ---------------------------------------------------------------------------
# elementary matrix helpers
# ---------------------------------------------------------------------------

def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose of the last two axes."""
    return np.conjugate(np.swapaxes(a, -1, -2))


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a @ b - b @ a``."""
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a @ b + b @ a``."""
    return a @ b + b @ a


def frob_norm(a: np.ndarray) -> float:
    """Frobenius norm of the last two axes, summed over any batch axes."""
    return float(np.sqrt(np.sum(np.abs(a) ** 2)))


def is_hermitian(a: np.ndarray, tol: float = TAU_ALG) -> bool:
    return frob_norm(a - dagger(a)) <= tol * max(1.0, frob_norm(a))


def is_antihermitian(a: np.ndarray, tol: float = TAU_ALG) -> bool:
    return frob_norm(a + dagger(a)) <= tol * max(1.0, frob_norm(a))


def is_traceless(a: np.ndarray, tol: float = TAU_ALG) -> bool:
    return abs(np.trace(a)) <= tol * max(1.0, frob_norm(a))


def is_unitary(a: np.ndarray, tol: float = TAU_ALG) -> bool:
    n = a.shape[-1]
    return frob_norm(dagger(a) @ a - np.eye(n)) <= tol * n


# ---------------------------------------------------------------------------
# random matrices (for tests and demos)
# ---------------------------------------------------------------------------

def _ginibre(n: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random Hermitian matrix with O(1) entries."""
    a = _ginibre(n, rng)
    return (a + dagger(a)) / 2.0


def random_antihermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random anti-Hermitian matrix with O(1) entries."""
    a = _ginibre(n, rng)
    return (a - dagger(a)) / 2.0


def random_traceless_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random traceless Hermitian matrix."""
    h = random_hermitian(n, rng)
    return h - np.trace(h) / n * np.eye(n)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed random unitary (QR of a Ginibre matrix)."""
    q, r = np.linalg.qr(_ginibre(n, rng))
    # fix the phase ambiguity of QR so the distribution is Haar
    return q * (np.diag(r) / np.abs(np.diag(r)))


# ---------------------------------------------------------------------------
# generalized Gell-Mann basis
# ---------------------------------------------------------------------------

def gellmann_basis(n: int) -> np.ndarray:
    """Generalized Gell-Mann matrices for M_n, shape ``(n**2 - 1, n, n)``.

    Grouped ordering: the symmetric pair matrices
    ``S_jk = e_jk + e_kj`` for ``j < k`` come first (lexicographic in
    ``(j, k)``), followed by the antisymmetric pair matrices
    ``A_jk = -i (e_jk - e_kj)`` in the same order, followed by the
    diagonal matrices ``D_l`` for ``l = 1, ..., n - 1`` with

        D_l = sqrt(2 / (l (l + 1))) * (e_11 + ... + e_ll - l * e_(l+1)(l+1)).

    All members are traceless Hermitian with ``tr(E^2) = 2``; for
    ``n = 2`` the list is exactly ``(sigma_x, sigma_y, sigma_z)``.
    """
    if n < 2:
        raise ShapeError(f"matrix size must be at least 2, got {n}")
    mats = []
    for j in range(n):
        for k in range(j + 1, n):
            s = np.zeros((n, n), dtype=complex)
            s[j, k] = 1.0
            s[k, j] = 1.0
            mats.append(s)
    for j in range(n):
        for k in range(j + 1, n):
            a = np.zeros((n, n), dtype=complex)
            a[j, k] = -1j
            a[k, j] = 1j
            mats.append(a)
    for l in range(1, n):
        d = np.zeros((n, n), dtype=complex)
        d[:l, :l] = np.eye(l)
        d[l, l] = -l
        mats.append(np.sqrt(2.0 / (l * (l + 1))) * d)
    return np.array(mats)


def basis_metric(mats: np.ndarray) -> np.ndarray:
    """Metric ``g[k, l] = (1/n) tr(E_k E_l)`` of a Hermitian basis."""
    n = mats.shape[-1]
    return np.real(np.einsum("kab,lba->kl", mats, mats)) / n


def structure_constants(mats: np.ndarray, tol: float = TAU_ALG) -> np.ndarray:
    """Structure constants ``C[k, l, m]`` with ``i [E_k, E_l] = C[k, l, m] E_m``.

    Computed by solving the Gram system of the basis, so the result is
    exact (up to roundoff) for any linearly independent Hermitian family,
    orthogonal or not.  Raises :class:`SingularBasisError` if some
    commutator leaves the span of the family (the family does not close
    under the bracket).

    For Hermitian ``E_k`` the tensor is real and antisymmetric in its
    first two indices; antisymmetry is enforced exactly.
    """
    d, n, _ = mats.shape
    prod = np.einsum("kab,lbc->klac", mats, mats)
    comm = 1j * (prod - prod.transpose(1, 0, 2, 3))
    # rhs[k, l, p] = (1/n) tr(E_p^dag [i E_k, E_l])
    rhs = np.einsum("pba,klba->klp", np.conjugate(mats), comm) / n
    gram = np.einsum("pba,mba->pm", np.conjugate(mats), mats) / n
    try:
        c = np.linalg.solve(gram, rhs.reshape(-1, d).T).T.reshape(d, d, d)
    except np.linalg.LinAlgError as exc:
        raise SingularBasisError("basis matrices are linearly dependent") from exc
    if frob_norm(c.imag) > tol * max(1.0, frob_norm(c.real)):
        raise NotHermitianError("structure constants are not real; basis is not Hermitian")
    c = c.real
    c = (c - c.transpose(1, 0, 2)) / 2.0  # exact antisymmetry
    # closure check: the projected commutators must reproduce the originals
    recon = np.einsum("klm,mab->klab", c, mats)
    if frob_norm(recon - comm) > tol * max(1.0, frob_norm(comm)):
        raise SingularBasisError(
            "commutators leave the span of the family; not a closed basis"
        )
    return c


# ---------------------------------------------------------------------------
# the bundled basis object
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixBasis:
    """A Hermitian matrix basis together with its derived tensors.

    Attributes
    ----------
    n : int
        Size of the square matrices.
    mats : ndarray, shape (D, n, n)
        The basis matrices ``E_k`` (traceless Hermitian).
    c : ndarray, shape (D, D, D)
        Structure constants, ``i [E_k, E_l] = c[k, l, m] E_m``.
    g, g_inv : ndarray, shape (D, D)
        Metric ``(1/n) tr(E_k E_l)`` and its inverse.
    g_det : float
        Determinant of ``g``.
    """

    n: int
    mats: np.ndarray
    c: np.ndarray = field(repr=False)
    g: np.ndarray = field(repr=False)
    g_inv: np.ndarray = field(repr=False)
    g_det: float

    @property
    def dim(self) -> int:
        """Number of basis elements (the number of independent derivations)."""
        return self.mats.shape[0]

    @classmethod
    def from_matrices(cls, mats: np.ndarray, tol: float = TAU_ALG) -> "MatrixBasis":
        """Build the basis bundle from raw matrices, validating as we go."""
        mats = np.asarray(mats, dtype=complex)
        if mats.ndim != 3 or mats.shape[1] != mats.shape[2]:
            raise ShapeError(f"expected shape (D, n, n), got {mats.shape}")
        n = mats.shape[-1]
        for k, e in enumerate(mats):
            if not is_hermitian(e, tol):
                raise NotHermitianError(f"basis matrix {k} is not Hermitian")
            if not is_traceless(e, tol):
                raise SingularBasisError(f"basis matrix {k} is not traceless")
        g = basis_metric(mats)
        g_det = float(np.linalg.det(g))
        if g_det <= tol:
            raise SingularBasisError("basis metric is singular; matrices are dependent")
        g_inv = np.linalg.inv(g)
        c = structure_constants(mats, tol)
        mats = mats.copy()
        mats.setflags(write=False)
        for arr in (c, g, g_inv):
            arr.setflags(write=False)
        return cls(n=n, mats=mats, c=c, g=g, g_inv=g_inv, g_det=g_det)

    @classmethod
    def gellmann(cls, n: int) -> "MatrixBasis":
        """The generalized Gell-Mann basis of sl(n) in grouped order."""
        return cls.from_matrices(gellmann_basis(n))

    @cached_property
    def sqrt_g_det(self) -> float:
        return float(np.sqrt(self.g_det))

    # -- expansion ----------------------------------------------------------

    def expand(self, a: np.ndarray, strict: bool = True, tol: float = TAU_ALG) -> np.ndarray:
        """Coefficients ``c_k`` with ``a = sum_k c_k E_k`` (complex in general).

        Solves the Gram system, so non-orthogonal bases are handled.  With
        ``strict=True`` a residual outside the span raises
        :class:`ShapeError`.
        """
        a = np.asarray(a, dtype=complex)
        if a.shape != (self.n, self.n):
            raise ShapeError(f"expected ({self.n}, {self.n}) matrix, got {a.shape}")
        rhs = np.einsum("kba,ba->k", np.conjugate(self.mats), a) / self.n
        coeff = self.g_inv @ rhs
        if strict:
            resid = a - np.einsum("k,kab->ab", coeff, self.mats)
            if frob_norm(resid) > tol * max(1.0, frob_norm(a)):
                raise ShapeError("matrix is not in the span of the basis")
        return coeff

    def reconstruct(self, coeff: np.ndarray) -> np.ndarray:
        """Inverse of :meth:`expand`: ``sum_k coeff[k] E_k``."""
        coeff = np.asarray(coeff)
        if coeff.shape != (self.dim,):
            raise ShapeError(f"expected {self.dim} coefficients, got {coeff.shape}")
        return np.einsum("k,kab->ab", coeff, self.mats)

    def same_as(self, other: "MatrixBasis", tol: float = TAU_ALG) -> bool:
        """True when the two bundles contain the same matrices."""
        return (
            self.n == other.n
            and self.dim == other.dim
            and frob_norm(self.mats - other.mats) <= tol * self.dim
        )
