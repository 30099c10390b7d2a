"""Commuting actions: the five bracket families with their distinguishing
signs, the even and odd-odd spinor identifications, the tensor structure
maps, and non-closure for three families."""

import numpy as np
import pytest

from cliffspin.clifford import build_irrep, hatted_real_structure
from cliffspin.commuting import (
    bracket_family_residuals,
    build_commuting,
    combined_metric,
    commutation_residual,
    equivalence_even,
    equivalence_odd_odd,
    product_so_generators,
    real_structure_commutation,
    real_structure_recipe,
    swap_factors,
    tensor_hatted_real_structure,
    tensor_product_element,
    tensor_real_structure,
    three_action_closure_defect,
    verify_bracket_table,
)
from cliffspin.liealg import SoRepresentation, bracket_residual
from cliffspin.linalg import expm, eye, kron, max_abs


def test_scalar_pair():
    ca = build_commuting((0, 1), (0, 1))
    assert ca.dim == 1
    assert max_abs(ca.gamma1[0] - np.array([[1j]])) == 0.0
    assert commutation_residual(ca) == 0.0


def test_commutation_and_own_relations():
    from cliffspin.clifford import clifford_residual

    for pair, dim in [(((0, 3), (0, 1)), 2), (((4, 0), (0, 6)), 32)]:
        ca = build_commuting(*pair)
        assert ca.dim == dim
        assert commutation_residual(ca) == 0.0
        # each lifted family still satisfies its own anticommutation relations
        assert clifford_residual(ca.gamma1, ca.mod1.eta) < 1e-14
        assert clifford_residual(ca.gamma2, ca.mod2.eta) < 1e-14


def test_combined_metric_examples():
    ca = build_commuting((0, 3), (0, 1))
    pg = product_so_generators(ca)
    assert list(pg.combined.eta) == [1, 1, 1, -1]
    ca = build_commuting((4, 0), (0, 6))
    assert list(product_so_generators(ca).combined.eta) == [-1] * 10


def test_single_mixed_generator():
    ca = build_commuting((0, 1), (1, 0))
    pg = product_so_generators(ca)
    assert max_abs(pg.u[(0, 0)] - np.array([[0.5j]])) == 0.0
    assert bracket_residual(pg.combined) == 0.0


@pytest.mark.parametrize("pair", [
    ((0, 3), (0, 1)),
    ((4, 0), (0, 6)),
    ((1, 1), (2, 0)),
    ((0, 7), (3, 0)),
])
def test_bracket_table(pair):
    report = verify_bracket_table(build_commuting(*pair), tol=1e-12)
    assert report.passed, report.details


def test_wrong_metric_fails():
    ca = build_commuting((0, 3), (0, 1))
    pg = product_so_generators(ca)
    wrong_eta = np.concatenate([ca.mod1.eta, ca.mod2.eta])
    wrong = SoRepresentation(eta=wrong_eta, dim=pg.combined.dim,
                             generators=pg.combined.generators)
    assert bracket_residual(wrong) >= 0.5


def test_anticommuting_split_fails_mixed_family():
    # one module of four anticommuting gammas split 3 + 1: the mixed
    # commutators then carry the wrong signs
    m = build_irrep((0, 4))
    g1, g2 = list(m.gammas[:3]), list(m.gammas[3:])
    fams = bracket_family_residuals(g1, g2, [-1, -1, -1], [-1])
    assert fams["t1-t1"] < 1e-12
    assert fams["t2-t2"] < 1e-12
    assert fams["u-u"] >= 0.5
    # the genuinely commuting construction passes the same check
    ca = build_commuting((0, 3), (0, 1))
    good = bracket_family_residuals(ca.gamma1, ca.gamma2, ca.mod1.eta, ca.mod2.eta)
    assert max(good.values()) < 1e-12


def test_factor_swap():
    ca = build_commuting((0, 3), (0, 1))
    swapped = swap_factors(ca)
    assert list(product_so_generators(swapped).combined.eta) == [1, -1, -1, -1]
    assert verify_bracket_table(swapped, tol=1e-12).passed


class TestEvenIdentification:
    def test_small_pair(self):
        report = equivalence_even(build_commuting((2, 0), (0, 1)), tol=1e-12)
        assert report.passed, report.details

    def test_full_pair(self):
        report = equivalence_even(build_commuting((4, 0), (0, 6)), tol=1e-12)
        assert report.passed, report.details

    def test_degenerate_second_factor(self):
        report = equivalence_even(build_commuting((2, 0), (0, 0)), tol=1e-12)
        assert report.passed

    def test_odd_first_factor_rejected(self):
        with pytest.raises(ValueError):
            equivalence_even(build_commuting((0, 3), (0, 1)))

    def test_closed_form_rotation_matches_expm(self):
        # V = (1 + i*chirality)/sqrt(2) on the first factor equals the
        # quarter-turn exponential
        ca = build_commuting((2, 0), (0, 1))
        chir = ca.mod1.chirality
        closed = kron((eye(2) + 1j * chir) / np.sqrt(2), eye(ca.mod2.dim))
        via_expm = kron(expm(1j * np.pi * chir / 4), eye(ca.mod2.dim))
        assert max_abs(closed - via_expm) < 1e-13


class TestOddOddIdentification:
    def test_example_pair(self):
        report = equivalence_odd_odd(build_commuting((0, 3), (0, 1)), tol=1e-12)
        assert report.passed, report.details

    def test_large_pair(self):
        report = equivalence_odd_odd(build_commuting((0, 7), (3, 0)), tol=1e-12)
        assert report.passed, report.details

    def test_one_dimensional_pair(self):
        report = equivalence_odd_odd(build_commuting((1, 0), (0, 1)), tol=1e-12)
        assert report.passed

    def test_even_factor_rejected(self):
        with pytest.raises(ValueError):
            equivalence_odd_odd(build_commuting((2, 0), (0, 1)))


class TestTensorProductElement:
    def test_trivial(self):
        ca = build_commuting((0, 0), (0, 0))
        assert np.array_equal(tensor_product_element(ca), eye(1))

    def test_odd_odd_scalar(self):
        ca = build_commuting((0, 3), (0, 1))
        prod = tensor_product_element(ca)
        assert max_abs(prod - (-1j) * eye(2)) < 1e-14
        assert ca.s == 6

    def test_even_even(self):
        ca = build_commuting((4, 0), (0, 6))
        prod = tensor_product_element(ca)
        assert max_abs(prod - kron(ca.mod1.P, ca.mod2.P)) == 0.0
        # s = 2: squares to -1
        assert max_abs(prod @ prod + eye(32)) < 1e-12

    def test_commutes_with_generators(self):
        for pair in [((0, 3), (0, 1)), ((2, 0), (2, 0))]:
            ca = build_commuting(*pair)
            prod = tensor_product_element(ca)
            for g in product_so_generators(ca).combined.generators.values():
                assert max_abs(prod @ g - g @ prod) < 1e-12

    def test_odd_combined_signature_rejected(self):
        with pytest.raises(ValueError):
            tensor_product_element(build_commuting((2, 0), (0, 1)))


# one signature pair per branch of the structure-map case analysis
RECIPE_CASES = [
    ((4, 0), (0, 6), "J1xJ2"),     # even-even
    ((2, 0), (2, 0), "J1xJ2"),     # even-even, small
    ((0, 3), (0, 3), "J1xJ2"),     # odd-odd, s = 0
    ((3, 0), (0, 1), "J1xJ2"),     # odd-odd, s = 4
    ((2, 0), (0, 3), "J1xJ2"),     # even-odd, second s in {3, 7}
    ((2, 0), (0, 1), "Jhat1xJ2"),  # even-odd, second s in {1, 5}
    ((0, 1), (2, 0), "J1xJhat2"),  # odd-even, first s in {1, 5}
    ((0, 3), (2, 0), "J1xJ2"),     # odd-even, first s in {3, 7}
]


class TestTensorRealStructure:
    @pytest.mark.parametrize("sig1,sig2,recipe", RECIPE_CASES)
    def test_recipe_and_commutation(self, sig1, sig2, recipe):
        ca = build_commuting(sig1, sig2)
        assert real_structure_recipe(ca) == recipe
        j = tensor_real_structure(ca)
        assert j is not None
        assert real_structure_commutation(ca, j) < 1e-10

    @pytest.mark.parametrize("sig1,sig2", [((0, 3), (0, 1)), ((0, 1), (0, 3))])
    def test_absent_odd_odd_cases(self, sig1, sig2):
        ca = build_commuting(sig1, sig2)
        assert (ca.s % 8) in (2, 6)
        assert real_structure_recipe(ca) is None
        assert tensor_real_structure(ca) is None

    @pytest.mark.parametrize("sig1,sig2", [((2, 0), (2, 0)), ((4, 0), (0, 6))])
    def test_even_even_hatted_identity(self, sig1, sig2):
        # J followed by the product element equals the signed hatted pair
        ca = build_commuting(sig1, sig2)
        j = tensor_real_structure(ca)
        jhat = j.after_linear(tensor_product_element(ca))
        sign = (-1.0) ** (ca.n1 // 2)
        direct = sign * kron(hatted_real_structure(ca.mod1).matrix,
                             hatted_real_structure(ca.mod2).matrix)
        assert max_abs(jhat.matrix - direct) < 1e-10
        assert max_abs(tensor_hatted_real_structure(ca).matrix - direct) < 1e-12


class TestThreeActions:
    def test_trivial_scalars(self):
        assert three_action_closure_defect((0, 1), (0, 1), (0, 1)) < 1e-12

    def test_three_even_pairs(self):
        assert three_action_closure_defect((2, 0), (2, 0), (2, 0)) > 0.1

    def test_mixed_triple(self):
        assert three_action_closure_defect((0, 3), (0, 3), (0, 1)) > 0.1

    def test_empty_factor_rejected(self):
        with pytest.raises(ValueError):
            three_action_closure_defect((0, 0), (0, 1), (0, 1))

    def test_two_families_do_close(self):
        # sanity control: with only two commuting families every commutator
        # of quadratics stays inside the span, so the same projection
        # machinery reports (essentially) zero defect
        ca = build_commuting((2, 0), (0, 3))
        pg = product_so_generators(ca)
        quads = list(pg.t1.values()) + list(pg.t2.values()) + list(pg.u.values())
        span = [eye(ca.dim)] + quads

        def realvec(mat):
            flat = np.asarray(mat, dtype=complex).ravel()
            return np.concatenate([flat.real, flat.imag])

        basis = np.column_stack([realvec(m) for m in span])
        pinv = np.linalg.pinv(basis)
        worst = 0.0
        for i in range(len(quads)):
            for j in range(i + 1, len(quads)):
                comm = quads[i] @ quads[j] - quads[j] @ quads[i]
                coeff = pinv @ realvec(comm)
                recon = sum(c * m for c, m in zip(coeff, span))
                worst = max(worst, max_abs(comm - recon))
        assert worst < 1e-10


def test_combined_metric_helper():
    assert list(combined_metric([1, -1], [-1])) == [-1, 1, -1]
