import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lorentz_octets.clifford_cpt import (CPT_ELEMENTS, ChargeClass, CliffordSignature, CptPhases, DivisionRing,
                                         GaussianMatrix, PiRuleError, UnassignedParity, automorphism_report,
                                         charge_class, check_basis, classify, conjugation_matrices,
                                         count_generator_kinds, cpt_projective_check, cpt_table,
                                         double_conjugation_sign, gamma_basis, parity_square, pi_conj_sign,
                                         pi_matrix, counting_rule_sign)

S = CliffordSignature
EVEN_SIGS = [S(p, n - p) for n in range(2, 9, 2) for p in range(n + 1)]


def dense(g: GaussianMatrix) -> np.ndarray:
    return g.re + 1j * g.im


# -- classification --------------------------------------------------------------------

@pytest.mark.parametrize("sig, ring", [
    (S(1, 1), DivisionRing.R), (S(0, 2), DivisionRing.H), (S(119, 115), DivisionRing.H),
    (S(2, 0), DivisionRing.R), (S(3, 0), DivisionRing.C), (S(5, 0), DivisionRing.HH), (S(1, 0), DivisionRing.RR),
])
def test_classify_examples(sig, ring):
    assert classify(sig) == ring


@given(st.integers(0, 80), st.integers(0, 80))
def test_classify_is_periodic_mod_8(p, q):
    assert classify(S(p + 8, q)) == classify(S(p, q)) == classify(S(p, q + 8))


def test_signature_rejects_negative():
    with pytest.raises(ValueError):
        S(-1, 2)


def test_charge_class_examples():
    for ring in DivisionRing:
        assert charge_class(True, ring) == ChargeClass.CHARGED
    assert charge_class(False, DivisionRing.H) == ChargeClass.NEUTRAL
    assert charge_class(False, DivisionRing.HH) == ChargeClass.NEUTRAL
    assert charge_class(False, DivisionRing.R) == ChargeClass.TRULY_NEUTRAL
    assert charge_class(False, DivisionRing.RR) == ChargeClass.TRULY_NEUTRAL


@pytest.mark.parametrize("sig, sq", [(S(135, 131), 1), (S(45, 43), -1), (S(89, 83), -1)])
def test_parity_square_examples(sig, sq):
    assert parity_square(sig) == sq


@pytest.mark.parametrize("sig", [S(3, 3), S(1, 0), S(4, 1), S(8, 3), S(0, 1)])
def test_parity_square_unassigned(sig):
    with pytest.raises(UnassignedParity):
        parity_square(sig)


# -- gamma bases -----------------------------------------------------------------------

@pytest.mark.parametrize("sig", EVEN_SIGS, ids=str)
def test_gamma_basis_anticommutes_and_squares(sig):
    basis = gamma_basis(sig)
    assert check_basis(basis)
    assert basis.generator_squares == [1] * sig.p + [-1] * sig.q
    # independent float oracle
    mats = [dense(g) for g in basis.gammas]
    eye = np.eye(basis.dim)
    for i, j in itertools.product(range(sig.n), repeat=2):
        want = 2 * basis.generator_squares[i] * eye if i == j else 0 * eye
        assert np.array_equal(mats[i] @ mats[j] + mats[j] @ mats[i], want)
    a, b = count_generator_kinds(basis)
    assert a + b == sig.n


def test_gamma_basis_2_0_is_real():
    basis = gamma_basis(S(2, 0))
    assert count_generator_kinds(basis) == (0, 2)


def test_gamma_basis_0_2_is_quaternions():
    basis = gamma_basis(S(0, 2))
    i, j = (dense(g) for g in basis.gammas)
    k = i @ j
    assert np.array_equal(k @ k, -np.eye(2))
    assert np.array_equal(i @ k, -k @ i)


def test_gamma_basis_1_1_mixed_squares():
    assert gamma_basis(S(1, 1)).generator_squares == [1, -1]


def test_gamma_basis_rejects_odd_and_cap():
    with pytest.raises(ValueError):
        gamma_basis(S(2, 1))
    with pytest.raises(ValueError):
        gamma_basis(S(8, 6))


# -- Π and the double-conjugation sign --------------------------------------------------

def test_pi_1_1_is_identity():
    basis = gamma_basis(S(1, 1))
    assert pi_matrix(basis) == basis.identity()
    assert double_conjugation_sign(S(1, 1)) == 1


def test_pi_0_2_sign_is_minus_one_in_every_basis():
    # the counting rule's +1 for a - b ≡ 0 is contradicted by the explicit product
    for real_count in (0, 1, 2):
        try:
            basis = gamma_basis(S(0, 2), real_count=real_count)
        except ValueError:
            continue
        try:
            assert pi_conj_sign(basis) == -1
        except PiRuleError:
            pass
    basis = gamma_basis(S(0, 2), real_count=1)
    a, b = count_generator_kinds(basis)
    assert (a - b) % 4 == 0
    assert pi_conj_sign(basis) == -1
    assert counting_rule_sign(S(0, 2), a, b) == 1
    assert double_conjugation_sign(S(0, 2)) == -1


@pytest.mark.parametrize("sig", [S(1, 5), S(2, 4), S(0, 6), S(4, 0), S(5, 1)], ids=str)
def test_pi_sign_matches_float_oracle(sig):
    basis = gamma_basis(sig)
    pi = dense(pi_matrix(basis))
    prod = pi @ np.conj(pi)
    sign = pi_conj_sign(basis)
    assert np.allclose(prod, sign * np.eye(basis.dim))


INVARIANCE_CASES = [(s, rc) for s in EVEN_SIGS if s.n <= 4 and s.d_mod8 in (4, 6) for rc in range(s.n + 1)] + [
    (S(1, 5), 3), (S(1, 5), 4), (S(2, 4), 0), (S(2, 4), 3), (S(2, 4), 5), (S(5, 1), 2), (S(6, 0), 3), (S(6, 0), 4)]


@pytest.mark.parametrize("sig, rc", INVARIANCE_CASES, ids=lambda x: str(x))
def test_pi_sign_basis_invariant(sig, rc):
    try:
        basis = gamma_basis(sig, real_count=rc)
    except ValueError:
        pytest.skip(f"no basis of {sig} with {rc} real generators")
    assert count_generator_kinds(basis)[1] == rc
    try:
        assert pi_conj_sign(basis) == -1
    except PiRuleError:
        a, b = count_generator_kinds(basis)
        assert a % 2 == 1 and b % 2 == 0


def test_pi_rule_rejects_other_rings():
    for sig in (S(3, 0), S(1, 0), S(4, 1)):
        with pytest.raises(PiRuleError):
            double_conjugation_sign(sig)


# -- conjugation matrices --------------------------------------------------------------

def test_dirac_scale_w_implements_involution():
    basis = gamma_basis(S(1, 3))
    m = conjugation_matrices(basis)
    W = dense(m.W)
    for g in basis.gammas:
        G = dense(g)
        assert np.allclose(W @ G @ np.linalg.inv(W), -G)
    assert m.C == m.E @ m.W


@pytest.mark.parametrize("sig", [S(1, 1), S(2, 0), S(0, 2), S(1, 3), S(3, 1), S(0, 6), S(2, 4)], ids=str)
def test_automorphisms_commute(sig):
    report = automorphism_report(gamma_basis(sig))
    assert all(report.values()), report


def test_reversion_implementer_float_oracle():
    basis = gamma_basis(S(1, 1))
    m = conjugation_matrices(basis)
    E = dense(m.E)
    for g in basis.gammas:
        G = dense(g)
        assert np.allclose(E @ G.T @ np.linalg.inv(E), G)
    assert m.K == m.Pi @ m.W and m.S == m.Pi @ m.E and m.F == m.Pi @ m.C


@pytest.mark.parametrize("sig", [S(1, 1), S(0, 2), S(1, 3), S(0, 6)], ids=str)
def test_cpt_representatives_projective(sig):
    assert cpt_projective_check(gamma_basis(sig))


# -- CPT table -------------------------------------------------------------------------

def test_cpt_table_unit_phases_is_z2_cubed():
    table = cpt_table(CptPhases())
    assert table.is_abelian() and table.all_involutions() and table.is_z2_cubed()
    assert all(table.cell(a, b).phase_value(table.phases) == 1 for a in CPT_ELEMENTS for b in CPT_ELEMENTS)


def test_cpt_table_examples():
    table = cpt_table()
    pt = table.cell("P", "T")
    assert (pt.monomial(), pt.word, pt.element) == ("η_p·η_t", "WE", "PT")
    cc = table.cell("C", "C")
    assert (cc.monomial(), cc.word, cc.element) == ("η_c^2", "Π²", "1")
    assert table.cell("1", "CPT").word == "F"


def test_cpt_phase_value():
    ph = CptPhases(eta_p=1j, eta_t=-1, eta_c=np.exp(0.3j))
    cell = cpt_table(ph).cell("CP", "CT")
    assert np.isclose(cell.phase_value(ph), 1j * -1 * np.exp(0.6j))


def test_cpt_phases_must_be_unit():
    with pytest.raises(ValueError):
        CptPhases(eta_p=2)
