"""Orthogonal Lie algebra representations from quadratic gamma monomials.

The generators Tᵃᵇ = ½γᵃγᵇ (a < b, extended antisymmetrically, zero on the
diagonal) satisfy

    [Tᵃᵇ, Tᶜᵈ] = ηᵇᶜTᵃᵈ − ηᵃᶜTᵇᵈ + ηᵇᵈTᶜᵃ − ηᵃᵈTᶜᵇ

for the module's diagonal metric η.  This module provides the bracket
checker, the Levi-Civita Casimir that reproduces the gamma product, the
chirality (Weyl) split, and intertwiner search for equivalence testing.

Indices are 0-based throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .clifford import CliffordModule, sign_triple
from .linalg import (
    DEFAULT_TOL,
    NULL_RTOL,
    commutator,
    eye,
    frozen,
    max_abs,
    null_space,
    phase_normalize,
)


@dataclass(frozen=True)
class SoRepresentation:
    """Indexed generators of an orthogonal Lie algebra on a complex space.

    ``generators`` maps (a, b) with a < b to a matrix; access through
    :meth:`t` for the antisymmetric extension.
    """

    eta: np.ndarray
    dim: int
    generators: dict

    @property
    def n(self) -> int:
        return len(self.eta)

    def pairs(self):
        return sorted(self.generators)

    def t(self, a: int, b: int) -> np.ndarray:
        if a == b:
            return np.zeros((self.dim, self.dim), dtype=complex)
        if a < b:
            return self.generators[(a, b)]
        return -self.generators[(b, a)]


def so_generators(m: CliffordModule) -> SoRepresentation:
    """Quadratic monomials Tᵃᵇ = ½γᵃγᵇ of an irreducible module."""
    gens = {}
    for a in range(m.n):
        for b in range(a + 1, m.n):
            gens[(a, b)] = frozen(0.5 * (m.gammas[a] @ m.gammas[b]))
    return SoRepresentation(eta=np.asarray(m.eta, dtype=int), dim=m.dim, generators=gens)


def bracket_residual(rep: SoRepresentation) -> float:
    """Worst max-abs deviation of any bracket from the structure relation."""
    eta = rep.eta
    pairs = rep.pairs()
    worst = 0.0
    for a, b in pairs:
        tab = rep.t(a, b)
        for c, d in pairs:
            rhs = np.zeros((rep.dim, rep.dim), dtype=complex)
            if b == c:
                rhs = rhs + eta[b] * rep.t(a, d)
            if a == c:
                rhs = rhs - eta[a] * rep.t(b, d)
            if b == d:
                rhs = rhs + eta[b] * rep.t(c, a)
            if a == d:
                rhs = rhs - eta[a] * rep.t(c, b)
            worst = max(worst, max_abs(commutator(tab, rep.t(c, d)) - rhs))
    return worst


def flipped_representation(rep: SoRepresentation) -> SoRepresentation:
    """Negated generators with negated metric; satisfies the same relations.

    Exhibits the isomorphism between the algebras of signature (p, q) and
    (q, p) at the level of structure constants.
    """
    gens = {key: frozen(-g) for key, g in rep.generators.items()}
    return SoRepresentation(eta=-np.asarray(rep.eta), dim=rep.dim, generators=gens)


def _permutation_sign(perm) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def casimir_element(rep: SoRepresentation) -> np.ndarray:
    """Levi-Civita contraction of generator products.

    Evaluates (2^{n/2}/n!)·ε_{a₁…aₙ}·T^{a₁a₂}…T^{a_{n-1}aₙ} by summing over
    every permutation with its sign.  For the quadratic monomials of an
    irreducible module this equals the ordered gamma product.
    """
    n = rep.n
    if n % 2 != 0:
        raise ValueError("the Casimir contraction requires an even index count")
    total = np.zeros((rep.dim, rep.dim), dtype=complex)
    for perm in itertools.permutations(range(n)):
        term = eye(rep.dim)
        for k in range(0, n, 2):
            term = term @ rep.t(perm[k], perm[k + 1])
        total = total + _permutation_sign(perm) * term
    return (2 ** (n // 2) / math.factorial(n)) * total


def weyl_projectors(m: CliffordModule):
    """Projectors (1 ± chirality)/2; defined for even n > 0."""
    if m.n == 0 or m.n % 2 != 0:
        raise ValueError("the chirality split requires even n > 0")
    plus = 0.5 * (eye(m.dim) + m.chirality)
    minus = 0.5 * (eye(m.dim) - m.chirality)
    return plus, minus


def _chirality_columns(m: CliffordModule, sign: int) -> np.ndarray:
    """Selector onto the chirality eigenspace, using that the deterministic
    construction makes the chirality operator diagonal with ±1 entries."""
    diag = np.diagonal(m.chirality)
    off = max_abs(m.chirality - np.diag(diag))
    if off > 1e-12:
        raise ValueError("chirality operator is unexpectedly non-diagonal")
    cols = [i for i, v in enumerate(diag) if abs(v - sign) < 1e-9]
    basis = np.zeros((m.dim, len(cols)), dtype=complex)
    for j, i in enumerate(cols):
        basis[i, j] = 1.0
    return basis


def weyl_pieces(m: CliffordModule):
    """The two half-spinor representations on the chirality eigenspaces."""
    rep = so_generators(m)
    pieces = []
    for sign in (1, -1):
        basis = _chirality_columns(m, sign)
        gens = {key: frozen(basis.conj().T @ g @ basis)
                for key, g in rep.generators.items()}
        pieces.append(SoRepresentation(eta=rep.eta, dim=basis.shape[1], generators=gens))
    return tuple(pieces)


def find_intertwiner(rep_a: SoRepresentation, rep_b: SoRepresentation,
                     rtol: float = 1e-6):
    """Invertible W with W·T_a = T_b·W for every generator, or None.

    The solution space is found by a stacked null-space solve; a candidate
    counts as invertible when its smallest singular value is at least
    ``rtol`` times the largest.  Returns None when the space contains no
    invertible element.
    """
    if rep_a.dim != rep_b.dim:
        raise ValueError("representation dimension mismatch")
    if rep_a.n != rep_b.n or not np.array_equal(rep_a.eta, rep_b.eta):
        raise ValueError("representations must share one metric")
    dim = rep_a.dim
    ident = eye(dim)
    blocks = [np.kron(ident, rep_a.t(a, b).T) - np.kron(rep_b.t(a, b), ident)
              for a, b in rep_a.pairs()]
    stacked = np.vstack(blocks) if blocks else np.zeros((0, dim * dim), dtype=complex)
    basis = null_space(stacked, NULL_RTOL)
    candidates = [basis[:, j] for j in range(basis.shape[1])]
    if basis.shape[1] > 1:
        rng = np.random.default_rng(0)
        for _ in range(4):
            coeff = rng.standard_normal(basis.shape[1])
            candidates.append(basis @ coeff)
    for vec in candidates:
        w = phase_normalize(vec).reshape(dim, dim)
        svals = np.linalg.svd(w, compute_uv=False)
        if svals[0] > 0 and svals[-1] >= rtol * svals[0]:
            return w
    return None


def intertwiner_residual(w, rep_a: SoRepresentation, rep_b: SoRepresentation) -> float:
    return max(
        (max_abs(w @ rep_a.t(a, b) - rep_b.t(a, b) @ w) for a, b in rep_a.pairs()),
        default=0.0,
    )


@dataclass(frozen=True)
class StructureExpectation:
    """Which structure maps survive on the irreducible spinor representation."""

    s: int
    has_j: bool
    has_p: bool


def expected_structure(s: int) -> StructureExpectation:
    """Structure-map table: P survives iff s is even, J except at s = 2, 6."""
    s = s % 8
    return StructureExpectation(s=s, has_j=s not in (2, 6), has_p=s % 2 == 0)


def chirality_exchange_residual(m: CliffordModule) -> float:
    """For s ∈ {2, 6}: J swaps the ±i eigenspaces of the product element.

    Checked as the operator identity J·π⁺ = π⁻·J with π^{±} the
    eigenprojections of P onto ±i.
    """
    if m.s not in (2, 6):
        raise ValueError("eigenvalue exchange is specific to s = 2 or 6")
    plus = 0.5 * (eye(m.dim) - 1j * m.P)
    minus = 0.5 * (eye(m.dim) + 1j * m.P)
    k = m.J.matrix
    return max_abs(k @ np.conj(plus) - minus @ k)


def structure_survival(m: CliffordModule, tol: float = DEFAULT_TOL) -> dict:
    """Measure which structure maps survive on the irreducible representations.

    The product element is a structure map only when it is a nontrivial
    grading (even n); J always commutes with the quadratic monomials, but on
    the half-spinor pieces it survives only when it preserves the two
    chirality eigenspaces (measured sign +1 past the chirality operator).
    For odd n the full module is already irreducible and J survives as is.
    """
    rep = so_generators(m)
    p_comm = max((max_abs(commutator(m.P, g)) for g in rep.generators.values()),
                 default=0.0)
    j_comm = max((m.J.commutation_residual(g, 1) for g in rep.generators.values()),
                 default=0.0)
    if m.n == 0:
        has_p = has_j = True
    elif m.n % 2 == 1:
        has_p = False
        has_j = j_comm < tol
    else:
        has_p = p_comm < tol
        has_j = j_comm < tol and m.J.commutation_sign(m.chirality, tol) == 1
    expected = expected_structure(m.s)
    return {
        "has_p": has_p,
        "has_j": has_j,
        "matches_table": has_p == expected.has_p and has_j == expected.has_j,
        "p_residual": p_comm,
        "j_residual": j_comm,
        "eps_prime": sign_triple(m.s).eps_prime,
    }
