"""Clifford module construction and structure maps.

Expected matrices below are hand-derived from the Pauli algebra
(s1 s2 = i s3 and cyclic); sign-table rows are checked by independent
measurement (attempting both antilinear sign patterns)."""

import numpy as np
import pytest

from cliffspin.clifford import (
    Signature,
    build_irrep,
    chirality_op,
    hatted_real_structure,
    measure_sign_triple,
    module_residuals,
    product_element,
    real_structure,
    sign_triple,
    verify_module_signs,
)
from cliffspin.linalg import eye, max_abs

S1 = np.array([[0, 1], [1, 0]], dtype=complex)
S2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
S3 = np.array([[1, 0], [0, -1]], dtype=complex)

ALL_SIGNATURES_5 = [(p, n - p) for n in range(6) for p in range(n + 1)]


def test_trivial_module():
    m = build_irrep((0, 0))
    assert m.dim == 1 and m.gammas == ()
    assert np.array_equal(m.P, eye(1))
    assert np.array_equal(m.chirality, eye(1))
    assert max_abs(m.J.matrix - eye(1)) < 1e-14
    assert m.Jhat is not None  # s = 0


@pytest.mark.parametrize("branch", [1, -1])
def test_single_negative_generator(branch):
    m = build_irrep((0, 1), branch)
    assert m.dim == 1
    assert max_abs(m.gammas[0] - np.array([[1j * branch]])) == 0.0
    # the chirality scalar flips with the branch
    assert max_abs(m.chirality - np.array([[-branch]])) == 0.0


def test_pauli_pair_construction():
    m = build_irrep((2, 0))
    assert max_abs(m.gammas[0] - S1) == 0.0
    assert max_abs(m.gammas[1] - S2) == 0.0
    anti = m.gammas[0] @ m.gammas[1] + m.gammas[1] @ m.gammas[0]
    assert max_abs(anti) == 0.0


def test_product_element_small_cases():
    assert np.array_equal(product_element(build_irrep((0, 0))), eye(1))
    # (0,2): P = (i s1)(i s2) = -i s3, squaring to -1 (s = 2)
    m = build_irrep((0, 2))
    assert max_abs(m.P - (-1j) * S3) < 1e-15
    assert max_abs(m.P @ m.P + eye(2)) == 0.0
    # (1,0): P = branch, squaring to +1 (s = 7)
    for branch in (1, -1):
        m = build_irrep((1, 0), branch)
        assert max_abs(m.P - branch * eye(1)) == 0.0


def test_chirality_small_cases():
    # (0,2): i^3 * (-i s3) = -s3;  (2,0): i^21 * (i s3) = -s3
    assert max_abs(build_irrep((0, 2)).chirality + S3) < 1e-15
    assert max_abs(build_irrep((2, 0)).chirality + S3) < 1e-15


def test_real_structure_small_cases():
    # (0,1): s = 1, plain conjugation
    m = build_irrep((0, 1))
    assert max_abs(m.J.matrix - eye(1)) < 1e-14
    # (0,3): s = 3, K proportional to s2, J^2 = -1
    m = build_irrep((0, 3))
    assert max_abs(m.J.matrix - np.array([[0, 1], [-1, 0]], dtype=complex)) < 1e-12
    assert m.J.square_sign() == -1


def test_hatted_structure_cases():
    m = build_irrep((0, 0))
    assert max_abs(m.Jhat.matrix - m.J.matrix) == 0.0
    m = build_irrep((0, 2))
    # anticommutes with both gammas, squares to eps'' * eps = +1
    for g in m.gammas:
        assert m.Jhat.commutation_residual(g, -1) < 1e-12
    assert m.Jhat.square_sign() == 1
    m = build_irrep((0, 6))
    assert m.Jhat.square_sign() == -1  # eps''*eps = (-1)(+1)
    with pytest.raises(ValueError):
        hatted_real_structure(build_irrep((0, 1)))


@pytest.mark.parametrize("pq", ALL_SIGNATURES_5)
def test_module_invariants(pq):
    m = build_irrep(pq)
    res = module_residuals(m)
    assert max(res.values()) < 1e-12, res


@pytest.mark.parametrize("pq", [(0, 1), (1, 0), (0, 3), (2, 1), (1, 2), (3, 2)])
def test_odd_branches_differ_only_in_last_gamma(pq):
    plus = build_irrep(pq, 1)
    minus = build_irrep(pq, -1)
    for a in range(plus.n - 1):
        assert np.array_equal(plus.gammas[a], minus.gammas[a])
    assert max_abs(plus.gammas[-1] + minus.gammas[-1]) == 0.0
    # chirality is a scalar that flips with the branch
    for m in (plus, minus):
        scalar = m.chirality[0, 0]
        assert abs(abs(scalar) - 1.0) < 1e-12
        assert max_abs(m.chirality - scalar * eye(m.dim)) < 1e-12
    assert max_abs(plus.chirality + minus.chirality) < 1e-12


@pytest.mark.parametrize("pq", ALL_SIGNATURES_5)
def test_j_past_product_element(pq):
    # J P = eps'^n P J, which collapses to eps' for every row of the table
    m = build_irrep(pq)
    eps_prime = sign_triple(m.s).eps_prime
    lam = eps_prime ** m.n
    assert m.J.commutation_residual(m.P, lam) < 1e-12
    if m.n % 2 == 1:
        assert lam == eps_prime
    else:
        assert lam == 1


def test_recomputed_maps_match_stored():
    m = build_irrep((3, 2))
    assert max_abs(product_element(m) - m.P) == 0.0
    assert max_abs(chirality_op(m) - m.chirality) == 0.0
    assert np.array_equal(real_structure(m).matrix, m.J.matrix)


def test_measured_signs_match_table_small():
    rows = {
        (0, 0): (1, 1, 1),
        (0, 1): (1, -1, None),
        (1, 0): (1, 1, None),
        (2, 0): (1, 1, -1),
        (1, 1): (1, 1, 1),
        (0, 2): (-1, 1, -1),
    }
    for pq, expected in rows.items():
        measured, _ = measure_sign_triple(build_irrep(pq))
        assert tuple(measured) == expected, pq


def test_verify_module_signs_report():
    report = verify_module_signs(2, tol=1e-12)
    assert report.passed
    assert report.max_residual < 1e-12
    seen = {(d["p"], d["q"], d["branch"]) for d in report.details}
    assert (0, 0, 1) in seen and (1, 0, -1) in seen and (0, 2, 1) in seen
    trivial = next(d for d in report.details if (d["p"], d["q"]) == (0, 0))
    assert trivial["measured"] == [1, 1, 1]
    with pytest.raises(ValueError):
        verify_module_signs(0)


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature(-1, 2)
    sig = Signature(1, 2)
    assert sig.n == 3 and sig.s == 1
    assert list(sig.metric) == [1, -1, -1]
