"""Commuting Clifford actions on a tensor product and the spinor
representation they generate.

Two gamma families Γ₁ᵃ = γ₁ᵃ⊗1 and Γ₂^α = 1⊗γ₂^α commute entry by entry
(rather than anticommute), yet the quadratic monomials

    T₁ᵃᵇ = ½Γ₁ᵃΓ₁ᵇ,   T₂^{αβ} = ½Γ₂^αΓ₂^β,   U^{aβ} = ½Γ₁ᵃΓ₂^β

close into an orthogonal Lie algebra for the metric (−η₁)⊕η₂: the sign
flip on the first factor is forced by the mixed U·U commutators.  The
combined indexing is

    Tᵃᵇ = −T₁ᵃᵇ,  T^{n₁+α,n₁+β} = T₂^{αβ},  T^{a,n₁+β} = U^{aβ},

extended antisymmetrically.  Factor order is significant; swapping the
factors lands the flip on the other signature.

The resulting representation is a full (Dirac) spinor representation when
either factor has even generator count, and a single half-spinor (Weyl)
representation when both are odd.  Both identifications are implemented as
explicit checks: a unitary conjugation for the even case, and a doubled
Clifford module restricted to an eigenspace for the odd-odd case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .clifford import (
    CliffordModule,
    as_signature,
    build_irrep,
    clifford_residual,
    hatted_real_structure,
)
from .linalg import (
    DEFAULT_TOL,
    AntilinearOp,
    commutator,
    eye,
    frozen,
    kron,
    max_abs,
    tensor_antilinear,
)
from .liealg import SoRepresentation, bracket_residual
from .report import Report


@dataclass(frozen=True)
class CommutingAction:
    """Two commuting gamma families acting on a tensor-product space."""

    mod1: CliffordModule
    mod2: CliffordModule
    gamma1: tuple
    gamma2: tuple

    @property
    def dim(self) -> int:
        return self.mod1.dim * self.mod2.dim

    @property
    def n1(self) -> int:
        return self.mod1.n

    @property
    def n2(self) -> int:
        return self.mod2.n

    @property
    def s(self) -> int:
        """Signature parameter of the combined metric (−η₁)⊕η₂."""
        return (self.mod2.s - self.mod1.s) % 8


def build_commuting(sig1, sig2, branch1: int = 1, branch2: int = 1) -> CommutingAction:
    """Lift two irreducible modules to commuting families γ⊗1 and 1⊗γ."""
    mod1 = build_irrep(as_signature(sig1), branch1)
    mod2 = build_irrep(as_signature(sig2), branch2)
    id1, id2 = eye(mod1.dim), eye(mod2.dim)
    gamma1 = tuple(frozen(kron(g, id2)) for g in mod1.gammas)
    gamma2 = tuple(frozen(kron(id1, g)) for g in mod2.gammas)
    return CommutingAction(mod1=mod1, mod2=mod2, gamma1=gamma1, gamma2=gamma2)


def commutation_residual(ca: CommutingAction) -> float:
    """max-abs of [Γ₁ᵃ, Γ₂^α] over all index pairs (must vanish)."""
    worst = 0.0
    for g1 in ca.gamma1:
        for g2 in ca.gamma2:
            worst = max(worst, max_abs(commutator(g1, g2)))
    return worst


def combined_metric(eta1, eta2) -> np.ndarray:
    return np.concatenate([-np.asarray(eta1, dtype=int), np.asarray(eta2, dtype=int)])


@dataclass(frozen=True)
class ProductGenerators:
    """Quadratic monomials of a commuting pair plus their combined indexing."""

    t1: dict
    t2: dict
    u: dict
    combined: SoRepresentation


def _quadratics(gamma1, gamma2):
    t1 = {(a, b): frozen(0.5 * (gamma1[a] @ gamma1[b]))
          for a in range(len(gamma1)) for b in range(a + 1, len(gamma1))}
    t2 = {(a, b): frozen(0.5 * (gamma2[a] @ gamma2[b]))
          for a in range(len(gamma2)) for b in range(a + 1, len(gamma2))}
    u = {(a, b): frozen(0.5 * (gamma1[a] @ gamma2[b]))
         for a in range(len(gamma1)) for b in range(len(gamma2))}
    return t1, t2, u


def product_so_generators(ca: CommutingAction) -> ProductGenerators:
    """Combined generators for the metric (−η₁)⊕η₂."""
    t1, t2, u = _quadratics(ca.gamma1, ca.gamma2)
    n1 = ca.n1
    gens = {}
    for (a, b), m in t1.items():
        gens[(a, b)] = frozen(-m)
    for (a, b), m in u.items():
        gens[(a, n1 + b)] = m
    for (a, b), m in t2.items():
        gens[(n1 + a, n1 + b)] = m
    eta = combined_metric(ca.mod1.eta, ca.mod2.eta)
    combined = SoRepresentation(eta=eta, dim=ca.dim, generators=gens)
    return ProductGenerators(t1=t1, t2=t2, u=u, combined=combined)


def bracket_family_residuals(gamma1, gamma2, eta1, eta2) -> dict:
    """Residuals of the five bracket families for two gamma families.

    The U·U family carries the distinguishing signs

        [U^{aβ}, U^{cδ}] = η₁ᵃᶜ T₂^{βδ} − η₂^{βδ} T₁ᶜᵃ

    (diagonal generators count as zero), which hold for commuting families
    and fail for anticommuting ones.
    """
    eta1 = np.asarray(eta1, dtype=int)
    eta2 = np.asarray(eta2, dtype=int)
    n1, n2 = len(gamma1), len(gamma2)
    dim = gamma1[0].shape[0] if n1 else (gamma2[0].shape[0] if n2 else 1)
    t1, t2, u = _quadratics(gamma1, gamma2)
    zero = np.zeros((dim, dim), dtype=complex)

    def t1_at(a, b):
        if a == b:
            return zero
        return t1[(a, b)] if a < b else -t1[(b, a)]

    def t2_at(a, b):
        if a == b:
            return zero
        return t2[(a, b)] if a < b else -t2[(b, a)]

    res = {"t1-t1": 0.0, "t2-t2": 0.0, "t1-u": 0.0, "u-t2": 0.0, "u-u": 0.0}
    for (a, b), tab in t1.items():
        for (c, d), tcd in t1.items():
            rhs = zero
            if b == c:
                rhs = rhs + eta1[b] * t1_at(a, d)
            if a == c:
                rhs = rhs - eta1[a] * t1_at(b, d)
            if b == d:
                rhs = rhs + eta1[b] * t1_at(c, a)
            if a == d:
                rhs = rhs - eta1[a] * t1_at(c, b)
            res["t1-t1"] = max(res["t1-t1"], max_abs(commutator(tab, tcd) - rhs))
    for (a, b), tab in t2.items():
        for (c, d), tcd in t2.items():
            rhs = zero
            if b == c:
                rhs = rhs + eta2[b] * t2_at(a, d)
            if a == c:
                rhs = rhs - eta2[a] * t2_at(b, d)
            if b == d:
                rhs = rhs + eta2[b] * t2_at(c, a)
            if a == d:
                rhs = rhs - eta2[a] * t2_at(c, b)
            res["t2-t2"] = max(res["t2-t2"], max_abs(commutator(tab, tcd) - rhs))
    for (a, b), tab in t1.items():
        for (c, d), ucd in u.items():
            rhs = zero
            if b == c:
                rhs = rhs + eta1[b] * u[(a, d)]
            if a == c:
                rhs = rhs - eta1[a] * u[(b, d)]
            res["t1-u"] = max(res["t1-u"], max_abs(commutator(tab, ucd) - rhs))
    for (a, b), uab in u.items():
        for (c, d), tcd in t2.items():
            rhs = zero
            if b == c:
                rhs = rhs + eta2[b] * u[(a, d)]
            if b == d:
                rhs = rhs - eta2[b] * u[(a, c)]
            res["u-t2"] = max(res["u-t2"], max_abs(commutator(uab, tcd) - rhs))
    for (a, b), uab in u.items():
        for (c, d), ucd in u.items():
            rhs = zero
            if a == c:
                rhs = rhs + eta1[a] * t2_at(b, d)
            if b == d:
                rhs = rhs - eta2[b] * t1_at(c, a)
            res["u-u"] = max(res["u-u"], max_abs(commutator(uab, ucd) - rhs))
    return res


def verify_bracket_table(ca: CommutingAction, tol: float = DEFAULT_TOL) -> Report:
    """Check the five bracket families of the combined generators."""
    fams = bracket_family_residuals(ca.gamma1, ca.gamma2, ca.mod1.eta, ca.mod2.eta)
    comm = commutation_residual(ca)
    combined = product_so_generators(ca).combined
    total = bracket_residual(combined)
    worst = max([comm, total, *fams.values()])
    name = (f"bracket-families({ca.mod1.signature.p},{ca.mod1.signature.q})x"
            f"({ca.mod2.signature.p},{ca.mod2.signature.q})")
    details = [{"family": key, "residual": val} for key, val in sorted(fams.items())]
    details.append({"family": "gamma-commutation", "residual": comm})
    details.append({"family": "combined-bracket", "residual": total})
    return Report(name=name, passed=worst < tol, max_residual=worst,
                  tolerance=tol, details=details)


def _pair_label(ca: CommutingAction) -> str:
    return (f"({ca.mod1.signature.p},{ca.mod1.signature.q})x"
            f"({ca.mod2.signature.p},{ca.mod2.signature.q})")


def equivalence_even(ca: CommutingAction, tol: float = DEFAULT_TOL) -> Report:
    """Identify the combined generators with a full spinor representation.

    Requires n₁ even.  The reference module uses the gammas iγ₁ᵃ⊗1 and
    γ̄₁⊗γ₂^β (γ̄₁ the first factor's chirality); conjugating its quadratic
    monomials by V = exp(iπγ̄₁/4)⊗1 = (1+iγ̄₁)/√2⊗1 must reproduce the
    combined generators exactly, and V must leave the tensor product
    element unchanged.
    """
    if ca.n1 % 2 != 0:
        raise ValueError("the unitary-conjugation path requires even n1; "
                         "swap the factors or use the odd-odd path")
    id2 = eye(ca.mod2.dim)
    chir1 = kron(ca.mod1.chirality, id2)
    ref = [1j * g for g in ca.gamma1] + [chir1 @ g for g in ca.gamma2]
    ref_eta = combined_metric(ca.mod1.eta, ca.mod2.eta)
    cliff_res = clifford_residual(ref, ref_eta)

    v = kron((eye(ca.mod1.dim) + 1j * ca.mod1.chirality) / math.sqrt(2), id2)
    vh = v.conj().T
    combined = product_so_generators(ca).combined
    n = ca.n1 + ca.n2
    worst = 0.0
    for a in range(n):
        for b in range(a + 1, n):
            s_ab = 0.5 * (ref[a] @ ref[b])
            worst = max(worst, max_abs(v @ s_ab @ vh - combined.t(a, b)))
    p_res = 0.0
    if (ca.n1 + ca.n2) % 2 == 0:
        prod = tensor_product_element(ca)
        p_res = max_abs(v @ prod @ vh - prod)
    overall = max(worst, p_res, cliff_res)
    return Report(
        name=f"even-equivalence{_pair_label(ca)}",
        passed=overall < tol,
        max_residual=overall,
        tolerance=tol,
        details=[
            {"item": "reference-clifford-relations", "residual": cliff_res},
            {"item": "conjugated-generators", "residual": worst},
            {"item": "product-element-invariance", "residual": p_res},
        ],
    )


def equivalence_odd_odd(ca: CommutingAction, tol: float = DEFAULT_TOL) -> Report:
    """Identify the odd-odd tensor representation as one half-spinor piece.

    A doubled Clifford module on C²⊗(the tensor space) uses the gammas

        [[0, γ₁ᵃ], [−γ₁ᵃ, 0]]⊗1   and   [[0, 1], [1, 0]]⊗γ₂^α,

    whose quadratic monomials commute with t = diag(1, −1)⊗1.  The upper
    block (t = +1) must reproduce the combined generators, and the tensor
    product element must be a unit scalar, pinning which half occurs.
    """
    if ca.n1 % 2 == 0 or ca.n2 % 2 == 0:
        raise ValueError("the doubled-module path requires both factors odd")
    flip = np.array([[0, 1], [-1, 0]], dtype=complex)
    swap = np.array([[0, 1], [1, 0]], dtype=complex)
    doubled = [kron(flip, g) for g in ca.gamma1] + [kron(swap, g) for g in ca.gamma2]
    ref_eta = combined_metric(ca.mod1.eta, ca.mod2.eta)
    cliff_res = clifford_residual(doubled, ref_eta)

    d = ca.dim
    combined = product_so_generators(ca).combined
    n = ca.n1 + ca.n2
    worst = 0.0
    for a in range(n):
        for b in range(a + 1, n):
            quad = 0.5 * (doubled[a] @ doubled[b])
            off_block = max(max_abs(quad[:d, d:]), max_abs(quad[d:, :d]))
            restricted = quad[:d, :d]
            worst = max(worst, off_block, max_abs(restricted - combined.t(a, b)))

    prod = tensor_product_element(ca)
    scalar = complex(prod[0, 0])
    scalar_res = max_abs(prod - scalar * eye(d))
    unit_res = abs(abs(scalar) - 1.0)
    overall = max(worst, cliff_res, scalar_res, unit_res)
    return Report(
        name=f"odd-odd-equivalence{_pair_label(ca)}",
        passed=overall < tol,
        max_residual=overall,
        tolerance=tol,
        details=[
            {"item": "doubled-clifford-relations", "residual": cliff_res},
            {"item": "restricted-generators", "residual": worst},
            {"item": "product-scalar", "re": scalar.real, "im": scalar.imag,
             "residual": max(scalar_res, unit_res)},
        ],
    )


def tensor_product_element(ca: CommutingAction) -> np.ndarray:
    """Product element of the combined representation.

    Even-even: (−1)^{n₁/2}·P₁⊗P₂; odd-odd: (−1)^{(n₁−1)/2}·P₁⊗P₂.  Not
    defined when the combined signature parameter is odd.
    """
    if ca.s % 2 != 0:
        raise ValueError("no product element for odd combined signature parameter")
    if ca.n1 % 2 == 0:
        sign = (-1.0) ** (ca.n1 // 2)
    else:
        sign = (-1.0) ** ((ca.n1 - 1) // 2)
    return sign * kron(ca.mod1.P, ca.mod2.P)


def real_structure_recipe(ca: CommutingAction) -> Optional[str]:
    """Which tensor formula gives an antilinear map commuting with the
    combined generators, or None when no general formula exists.

    The mixed generators are odd in each factor's gammas, so the factor
    maps must carry equal commutation signs: plain⊗plain works when the
    signs agree, a hatted factor flips one sign, and the odd-odd cases
    with antisymmetric sign mismatch (combined s = 2, 6) have no formula.
    """
    even1, even2 = ca.n1 % 2 == 0, ca.n2 % 2 == 0
    s1, s2 = ca.mod1.s, ca.mod2.s
    if even1 and even2:
        return "J1xJ2"
    if not even1 and not even2:
        return "J1xJ2" if ca.s in (0, 4) else None
    if even1:
        return "J1xJ2" if s2 in (3, 7) else "Jhat1xJ2"
    return "J1xJ2" if s1 in (3, 7) else "J1xJhat2"


def tensor_real_structure(ca: CommutingAction) -> Optional[AntilinearOp]:
    """Antilinear structure map of the combined representation, if any."""
    recipe = real_structure_recipe(ca)
    if recipe is None:
        return None
    if recipe == "J1xJ2":
        return tensor_antilinear(ca.mod1.J, ca.mod2.J)
    if recipe == "Jhat1xJ2":
        return tensor_antilinear(hatted_real_structure(ca.mod1), ca.mod2.J)
    return tensor_antilinear(ca.mod1.J, hatted_real_structure(ca.mod2))


def tensor_hatted_real_structure(ca: CommutingAction) -> AntilinearOp:
    """Even-even only: the hatted map (−1)^{n₁/2}·Ĵ₁⊗Ĵ₂, equal to J∘P."""
    if ca.n1 % 2 != 0 or ca.n2 % 2 != 0:
        raise ValueError("the hatted tensor structure requires both factors even")
    sign = (-1.0) ** (ca.n1 // 2)
    k = sign * kron(hatted_real_structure(ca.mod1).matrix,
                    hatted_real_structure(ca.mod2).matrix)
    return AntilinearOp(k)


def real_structure_commutation(ca: CommutingAction, j: AntilinearOp) -> float:
    """Worst residual of K·conj(Tᴬᴮ) = Tᴬᴮ·K over the combined generators."""
    combined = product_so_generators(ca).combined
    return max((j.commutation_residual(g, 1) for g in combined.generators.values()),
               default=0.0)


def three_action_closure_defect(sig_a, sig_b, sig_c) -> float:
    """Distance of the quadratic monomials of three commuting families from
    closing under commutators.

    All within- and cross-family quadratics are formed on the triple tensor
    product; every pairwise commutator is projected (real least squares)
    onto the real span of the identity and the quadratics, and the largest
    max-abs projection residual is returned.  A strictly positive defect
    shows the quadratics do not span a Lie algebra.
    """
    sigs = [as_signature(s) for s in (sig_a, sig_b, sig_c)]
    if any(sig.n == 0 for sig in sigs):
        raise ValueError("each factor needs at least one generator")
    mods = [build_irrep(sig) for sig in sigs]
    dims = [m.dim for m in mods]
    lifted = [
        [kron(kron(g, eye(dims[1])), eye(dims[2])) for g in mods[0].gammas],
        [kron(kron(eye(dims[0]), g), eye(dims[2])) for g in mods[1].gammas],
        [kron(eye(dims[0]), kron(eye(dims[1]), g)) for g in mods[2].gammas],
    ]
    quadratics = []
    for fam in lifted:
        for a in range(len(fam)):
            for b in range(a + 1, len(fam)):
                quadratics.append(0.5 * (fam[a] @ fam[b]))
    for i in range(3):
        for j in range(i + 1, 3):
            for ga in lifted[i]:
                for gb in lifted[j]:
                    quadratics.append(0.5 * (ga @ gb))
    dim = dims[0] * dims[1] * dims[2]
    span = [eye(dim)] + quadratics

    def realvec(mat):
        flat = np.asarray(mat, dtype=complex).ravel()
        return np.concatenate([flat.real, flat.imag])

    basis = np.column_stack([realvec(m) for m in span])
    pinv = np.linalg.pinv(basis)
    defect = 0.0
    for i in range(len(quadratics)):
        for j in range(i + 1, len(quadratics)):
            comm = commutator(quadratics[i], quadratics[j])
            coeff = pinv @ realvec(comm)
            recon = sum(c * m for c, m in zip(coeff, span))
            defect = max(defect, max_abs(comm - recon))
    return defect


def swap_factors(ca: CommutingAction) -> CommutingAction:
    """The same data with the two factors exchanged (metric flip moves)."""
    return build_commuting(
        (ca.mod2.signature.p, ca.mod2.signature.q),
        (ca.mod1.signature.p, ca.mod1.signature.q),
        ca.mod2.branch, ca.mod1.branch)


__all__ = [
    "CommutingAction",
    "ProductGenerators",
    "build_commuting",
    "commutation_residual",
    "combined_metric",
    "product_so_generators",
    "bracket_family_residuals",
    "verify_bracket_table",
    "equivalence_even",
    "equivalence_odd_odd",
    "tensor_product_element",
    "real_structure_recipe",
    "tensor_real_structure",
    "tensor_hatted_real_structure",
    "real_structure_commutation",
    "three_action_closure_defect",
    "swap_factors",
]
