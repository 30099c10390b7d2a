"""Irreducible unitary Clifford modules over real signatures (p, q).

Conventions, fixed project-wide:

* the metric is diagonal with the first p entries +1 and the last q
  entries −1;
* the gamma matrices come from a deterministic tensor chain of Pauli
  matrices (see :func:`build_irrep`), so identical inputs give
  bit-identical modules;
* the product element multiplies the gammas in increasing index order;
* for odd n the two inequivalent modules ("branches") differ only in the
  sign of the last gamma.  The chirality scalar flips with the branch but
  its absolute phase relative to the branch depends on the signature.

The structure maps are the chirality operator, the antilinear real
structure J with J² = ε, Jγᵃ = ε′γᵃJ, Jγ = ε″γJ, and for even s the
hatted variant Ĵ = J∘P which anticommutes with every gamma.  The signs
(ε, ε′, ε″) depend only on s = (q − p) mod 8 and are tabulated in
``SIGN_TABLE``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    AntilinearOp,
    anticommutator,
    eye,
    frozen,
    kron,
    kron_all,
    max_abs,
    solve_antilinear_commutant,
    unitarity_residual,
)
from .report import Report

PAULI_1 = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_3 = np.array([[1, 0], [0, -1]], dtype=complex)

# sign table indexed by s = (q - p) mod 8
_EPS = (1, 1, -1, -1, -1, -1, 1, 1)
_EPS_PRIME = (1, -1, 1, 1, 1, -1, 1, 1)
_EPS_DPRIME = (1, 1, -1, 1, 1, 1, -1, 1)


class SignTriple(NamedTuple):
    """The signs (ε, ε′, ε″); ε″ is None where there is no chirality grading."""

    eps: int
    eps_prime: Optional[int]
    eps_double_prime: Optional[int]


def sign_triple(s: int) -> SignTriple:
    """Sign-table row for s mod 8 (ε″ reported only for even s)."""
    s = s % 8
    eps_dd = _EPS_DPRIME[s] if s % 2 == 0 else None
    return SignTriple(_EPS[s], _EPS_PRIME[s], eps_dd)


SIGN_TABLE = {s: sign_triple(s) for s in range(8)}


@dataclass(frozen=True)
class Signature:
    """Signature (p, q): p generators square to +1, q to −1."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("signature counts must be nonnegative")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def s(self) -> int:
        return (self.q - self.p) % 8

    @property
    def metric(self) -> np.ndarray:
        """Diagonal of the metric, canonical order (+1)^p then (−1)^q."""
        return np.array([1] * self.p + [-1] * self.q, dtype=int)


def as_signature(sig) -> Signature:
    if isinstance(sig, Signature):
        return sig
    p, q = sig
    return Signature(int(p), int(q))


@dataclass(frozen=True)
class CliffordModule:
    """An irreducible unitary Clifford module and its structure maps.

    Fields: the generating gamma matrices, their ordered product P, the
    chirality operator, the real structure J and (even s only) Ĵ = J∘P.
    """

    signature: Signature
    branch: int
    gammas: tuple
    P: np.ndarray
    chirality: np.ndarray
    J: AntilinearOp
    Jhat: Optional[AntilinearOp]

    @property
    def dim(self) -> int:
        return self.P.shape[0]

    @property
    def n(self) -> int:
        return self.signature.n

    @property
    def s(self) -> int:
        return self.signature.s

    @property
    def eta(self) -> np.ndarray:
        return self.signature.metric


def gamma_chain(sig, branch: int = 1) -> list:
    """Deterministic gamma matrices for the signature.

    The Hermitian chain on m = ⌊n/2⌋ qubit factors is

        g_{2k+1} = s3^{⊗k} ⊗ s1 ⊗ 1,   g_{2k+2} = s3^{⊗k} ⊗ s2 ⊗ 1,

    with branch·s3^{⊗m} appended when n is odd.  The first p entries stay
    Hermitian; the remaining q are multiplied by i, so the metric comes out
    in canonical order.
    """
    sig = as_signature(sig)
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    n, m = sig.n, sig.n // 2
    gs = []
    for k in range(m):
        pre = kron_all([PAULI_3] * k)
        post = eye(2 ** (m - k - 1))
        gs.append(kron(kron(pre, PAULI_1), post))
        gs.append(kron(kron(pre, PAULI_2), post))
    if n % 2 == 1:
        gs.append(branch * kron_all([PAULI_3] * m))
    return [g if a < sig.p else 1j * g for a, g in enumerate(gs)]


def product_of(gammas, dim: int | None = None) -> np.ndarray:
    """Ordered product g[0]·g[1]·…; the empty product is the identity."""
    if not len(gammas):
        if dim is None:
            raise ValueError("dim is required for an empty gamma list")
        return eye(dim)
    out = np.asarray(gammas[0], dtype=complex)
    for g in gammas[1:]:
        out = out @ g
    return out


def chirality_phase(s: int) -> complex:
    """The unit i^{s(s+1)/2} rescaling the product element to square to +1."""
    return 1j ** ((s % 8) * ((s % 8) + 1) // 2 % 4)


def build_irrep(sig, branch: int = 1) -> CliffordModule:
    """Construct the irreducible unitary module of dimension 2^⌊n/2⌋.

    Deterministic: identical inputs give bit-identical gamma matrices, and
    the real structure is the canonical representative of the (unique up to
    phase) antilinear solution.
    """
    sig = as_signature(sig)
    gammas = gamma_chain(sig, branch)
    dim = 2 ** (sig.n // 2)
    prod = product_of(gammas, dim)
    chir = chirality_phase(sig.s) * prod
    j = real_structure_from_gammas(gammas, sig.s, dim)
    jhat = j.after_linear(prod) if sig.s % 2 == 0 else None
    return CliffordModule(
        signature=sig,
        branch=branch,
        gammas=tuple(frozen(g) for g in gammas),
        P=frozen(prod),
        chirality=frozen(chir),
        J=j,
        Jhat=jhat,
    )


def real_structure_from_gammas(gammas, s: int, dim: int) -> AntilinearOp:
    """Solve for J with Jγᵃ = ε′γᵃJ, ε′ taken from the sign table."""
    eps_prime = sign_triple(s).eps_prime
    return solve_antilinear_commutant(gammas, [eps_prime] * len(gammas), dim=dim)


def product_element(m: CliffordModule) -> np.ndarray:
    """Recompute P = γ¹γ²…γⁿ in canonical index order."""
    return product_of(m.gammas, m.dim)


def chirality_op(m: CliffordModule) -> np.ndarray:
    """Recompute the chirality operator i^{s(s+1)/2}·P."""
    return chirality_phase(m.s) * product_element(m)


def real_structure(m: CliffordModule) -> AntilinearOp:
    """Recompute the real structure by the antilinear commutant solve."""
    return real_structure_from_gammas(m.gammas, m.s, m.dim)


def hatted_real_structure(m: CliffordModule) -> AntilinearOp:
    """Ĵ = J∘P, the second real structure; defined for even s only."""
    if m.s % 2 != 0:
        raise ValueError("the hatted real structure exists only for even s")
    return m.J.after_linear(m.P)


def clifford_residual(gammas, eta) -> float:
    """max-abs deviation from γᵃγᵇ + γᵇγᵃ = 2ηᵃᵇ·1 over all index pairs."""
    eta = np.asarray(eta)
    if len(gammas) == 0:
        return 0.0
    dim = gammas[0].shape[0]
    worst = 0.0
    for a, ga in enumerate(gammas):
        for b, gb in enumerate(gammas):
            target = 2 * eta[a] * eye(dim) if a == b else np.zeros((dim, dim))
            worst = max(worst, max_abs(anticommutator(ga, gb) - target))
    return worst


def hermiticity_residual(m: CliffordModule) -> float:
    """Gammas must be Hermitian up to index p and anti-Hermitian after."""
    worst = 0.0
    for a, g in enumerate(m.gammas):
        sign = 1 if a < m.signature.p else -1
        worst = max(worst, max_abs(g.conj().T - sign * g))
    return worst


def measure_sign_triple(m: CliffordModule, tol: float = DEFAULT_TOL):
    """Measure (ε, ε′, ε″) of the module's real structure directly.

    ε′ is found by attempting the antilinear solve with each sign pattern:
    for even n both signs admit solutions (J and Ĵ) and the real structure
    is the commuting one; for odd n exactly one pattern has a solution.
    Returns the measured triple together with the solved J.
    """
    solutions = {}
    for sign in (1, -1):
        try:
            solutions[sign] = solve_antilinear_commutant(
                m.gammas, [sign] * m.n, dim=m.dim)
        except ValueError:
            pass
    if not solutions:
        raise ValueError("no antilinear structure found for either sign pattern")
    if m.n % 2 == 0:
        if 1 not in solutions:
            raise ValueError("even-dimensional module without a commuting real structure")
        eps_prime = 1
    else:
        if len(solutions) != 1:
            raise ValueError("odd module admits both sign patterns; construction is inconsistent")
        eps_prime = next(iter(solutions))
    j = solutions[eps_prime]
    eps = j.square_sign(tol)
    eps_dd = j.commutation_sign(m.chirality, tol) if m.s % 2 == 0 else None
    return SignTriple(eps, eps_prime, eps_dd), j


def module_residuals(m: CliffordModule) -> dict:
    """Defining-relation residuals of a constructed module."""
    res = {
        "clifford": clifford_residual(m.gammas, m.eta),
        "unitarity": max((unitarity_residual(g) for g in m.gammas), default=0.0),
        "hermiticity_split": hermiticity_residual(m),
        "product_square": max_abs(
            m.P @ m.P - (-1.0) ** (m.s * (m.s + 1) // 2) * eye(m.dim)),
        "chirality_square": max_abs(m.chirality @ m.chirality - eye(m.dim)),
        "chirality_hermitian": max_abs(m.chirality.conj().T - m.chirality),
        "j_unitarity": unitarity_residual(m.J.matrix),
    }
    eps, eps_prime, eps_dd = sign_triple(m.s)
    res["j_square"] = max_abs(m.J.square() - eps * eye(m.dim))
    res["j_gamma"] = max(
        (m.J.commutation_residual(g, eps_prime) for g in m.gammas), default=0.0)
    if eps_dd is not None:
        res["j_chirality"] = m.J.commutation_residual(m.chirality, eps_dd)
    if m.Jhat is not None:
        res["jhat_square"] = max_abs(m.Jhat.square() - eps_dd * eps * eye(m.dim))
        res["jhat_gamma"] = max(
            (m.Jhat.commutation_residual(g, -1) for g in m.gammas), default=0.0)
        res["jhat_chirality"] = m.Jhat.commutation_residual(m.chirality, eps_dd)
    return res


def verify_module_signs(max_n: int, tol: float = DEFAULT_TOL):
    """Measure the sign triple for every (p, q) with p + q ≤ max_n.

    Both branches are checked when n is odd.  Returns a Report whose
    details carry the per-signature measured and expected rows; failures
    are reported, never raised.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    details = []
    worst = 0.0
    all_ok = True
    for n in range(max_n + 1):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            for branch in ((1,) if n % 2 == 0 else (1, -1)):
                m = build_irrep(sig, branch)
                expected = sign_triple(sig.s)
                res = module_residuals(m)
                row_max = max(res.values())
                try:
                    measured, _ = measure_sign_triple(m, tol)
                    match = measured == expected
                except ValueError as exc:
                    measured = None
                    match = False
                    res["measurement_error"] = str(exc)
                ok = match and row_max < tol
                all_ok = all_ok and ok
                worst = max(worst, row_max)
                details.append({
                    "p": sig.p, "q": sig.q, "branch": branch, "s": sig.s,
                    "measured": list(measured) if measured else None,
                    "expected": list(expected),
                    "max_residual": row_max,
                    "passed": ok,
                })
    return Report(
        name=f"sign-table(max_n={max_n})",
        passed=all_ok,
        max_residual=worst,
        tolerance=tol,
        details=details,
    )
