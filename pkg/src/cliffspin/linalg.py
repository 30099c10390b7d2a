"""Dense complex linear algebra substrate.

Everything operates on square numpy arrays of dtype complex128.  Matrix
comparisons use the max-absolute-entry norm throughout the package, with a
single overridable default tolerance.  The Kronecker convention is first
factor major (row-major blocks) everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

#: project-wide default tolerance for residual checks
DEFAULT_TOL = 1e-10

#: relative singular-value threshold below which directions count as null
NULL_RTOL = 1e-9


def as_matrix(a) -> np.ndarray:
    """Coerce the input to a square complex matrix."""
    m = np.asarray(a, dtype=complex)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def max_abs(a) -> float:
    """Max-absolute-entry norm; zero for empty input."""
    arr = np.asarray(a)
    if arr.size == 0:
        return 0.0
    return float(np.max(np.abs(arr)))


def eye(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def kron(a, b) -> np.ndarray:
    """Kronecker product, first factor major:

    out[i*db + k, j*db + l] = a[i, j] * b[k, l]
    """
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(mats) -> np.ndarray:
    """Kronecker chain of a (possibly empty) sequence; empty gives [[1]]."""
    out = eye(1)
    for m in mats:
        out = kron(out, m)
    return out


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a, b) -> np.ndarray:
    return a @ b + b @ a


def dagger(a) -> np.ndarray:
    return np.asarray(a).conj().T


def unitarity_residual(u) -> float:
    m = as_matrix(u)
    return max_abs(m @ m.conj().T - eye(m.shape[0]))


def expm(a) -> np.ndarray:
    """Matrix exponential (Pade approximant with scaling and squaring)."""
    m = as_matrix(a)
    if not np.all(np.isfinite(m)):
        raise ValueError("expm: input has non-finite entries")
    return scipy.linalg.expm(m)


def polar_unitary(a, rtol: float = NULL_RTOL) -> np.ndarray:
    """Unitary factor U of the polar decomposition A = U·H with H positive.

    Raises ValueError when the smallest singular value falls below
    ``rtol`` times the largest (singular input).
    """
    m = as_matrix(a)
    w, s, vh = np.linalg.svd(m)
    if s[0] == 0.0 or s[-1] < rtol * s[0]:
        raise ValueError("polar_unitary: input is numerically singular")
    return w @ vh


def null_space(a, rtol: float = NULL_RTOL) -> np.ndarray:
    """Orthonormal basis (as columns) of the null space of a matrix.

    Singular values below ``rtol`` times the largest count as zero.  A
    constraint matrix with no rows (or identically zero) has full null space.
    """
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError("null_space expects a matrix")
    rows, cols = m.shape
    if rows == 0 or max_abs(m) == 0.0:
        return np.eye(cols, dtype=complex)
    u, s, vh = np.linalg.svd(m, full_matrices=True)
    rank = int(np.sum(s > rtol * s[0]))
    return vh[rank:].conj().T


def phase_normalize(v, rtol: float = NULL_RTOL) -> np.ndarray:
    """Rescale a vector by a unit phase so its first significant entry is
    positive real.  Deterministic representative of a phase orbit."""
    vec = np.asarray(v, dtype=complex).ravel()
    mags = np.abs(vec)
    top = mags.max() if vec.size else 0.0
    if top == 0.0:
        return vec
    idx = int(np.argmax(mags > rtol * top))
    return vec / (vec[idx] / mags[idx])


def frozen(a) -> np.ndarray:
    """Read-only complex copy, for arrays stored on immutable value objects."""
    m = np.array(a, dtype=complex)
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class AntilinearOp:
    """Antilinear map v ↦ K·conj(v) with K unitary.

    Composition is the rule (J1∘J2)(v) = K1·conj(K2)·v, used everywhere a
    product of antilinear maps appears.
    """

    matrix: np.ndarray

    def __post_init__(self):
        k = as_matrix(self.matrix)
        if unitarity_residual(k) > 1e-8:
            raise ValueError("AntilinearOp: matrix part is not unitary")
        object.__setattr__(self, "matrix", frozen(k))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, v) -> np.ndarray:
        return self.matrix @ np.conj(np.asarray(v, dtype=complex))

    def compose(self, other: "AntilinearOp") -> np.ndarray:
        """Matrix of the linear map self∘other (antilinear twice = linear)."""
        return self.matrix @ np.conj(other.matrix)

    def square(self) -> np.ndarray:
        return self.compose(self)

    def square_sign(self, tol: float = DEFAULT_TOL) -> int:
        """The sign ε with J² = ε·I; raises when J² is not ±identity."""
        sq = self.square()
        for sign in (1, -1):
            if max_abs(sq - sign * eye(self.dim)) < tol:
                return sign
        raise ValueError("antilinear square is not plus or minus the identity")

    def after_linear(self, m) -> "AntilinearOp":
        """The antilinear map v ↦ J(M·v), i.e. matrix part K·conj(M)."""
        return AntilinearOp(self.matrix @ np.conj(as_matrix(m)))

    def conjugate_matrix(self, m) -> np.ndarray:
        """Matrix of the linear map J·M·J⁻¹ (K unitary): K·conj(M)·K†."""
        k = self.matrix
        return k @ np.conj(as_matrix(m)) @ k.conj().T

    def commutation_residual(self, m, phase: complex = 1) -> float:
        """max-abs of K·conj(M) − phase·M·K."""
        k = self.matrix
        m = np.asarray(m, dtype=complex)
        return max_abs(k @ np.conj(m) - phase * (m @ k))

    def commutation_sign(self, m, tol: float = DEFAULT_TOL):
        """λ ∈ {+1, −1} with K·conj(M) = λ·M·K, or None if neither fits."""
        for lam in (1, -1):
            if self.commutation_residual(m, lam) < tol:
                return lam
        return None


def tensor_antilinear(a: AntilinearOp, b: AntilinearOp) -> AntilinearOp:
    """Tensor product of two antilinear maps; matrix part kron(Ka, Kb)."""
    return AntilinearOp(kron(a.matrix, b.matrix))


def solve_antilinear_commutant(gammas, signs, dim: int | None = None,
                               rtol: float = NULL_RTOL) -> AntilinearOp:
    """Unitary K with K·conj(g) = sign·g·K for every (g, sign) pair.

    For an irreducible generator set the solution space is one complex
    dimension; the representative is chosen deterministically by phase
    normalizing the null-space vector and taking the unitary polar factor.

    Raises ValueError when the solution space is empty (wrong sign pattern)
    or has dimension above one (reducible input).
    """
    gammas = [as_matrix(g) for g in gammas]
    signs = list(signs)
    if len(gammas) != len(signs):
        raise ValueError("one sign is required per generator")
    if gammas:
        dim = gammas[0].shape[0]
    elif dim is None:
        raise ValueError("dim is required when the generator list is empty")
    ident = eye(dim)
    blocks = [np.kron(ident, np.conj(g).T) - sign * np.kron(g, ident)
              for g, sign in zip(gammas, signs)]
    stacked = np.vstack(blocks) if blocks else np.zeros((0, dim * dim), dtype=complex)
    basis = null_space(stacked, rtol)
    n_sol = basis.shape[1]
    if n_sol == 0:
        raise ValueError("no antilinear solution: wrong sign pattern for these generators")
    if n_sol > 1:
        raise ValueError(f"solution space dimension {n_sol}: input representation is reducible")
    k = phase_normalize(basis[:, 0], rtol).reshape(dim, dim)
    return AntilinearOp(polar_unitary(k, rtol))
