import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lorentz_octets.su3 import (OKUBO2_PRINTED, YoungPQ, adjoint, adjoint_preserves_commutators, admissible,
                                admissible_degrees, charge_operator, comm, degree, degrees_table,
                                diagonal_eigenvalues, fequal, fmat, hypercharge3, okubo_basis2, okubo_basis3,
                                okubo_commutator_check, reduction_811, spin_fixations, su2_commutator_check,
                                su2_embedding, to_float, unitary_field, upper_block)

h = Fraction(1, 2)
t = Fraction(1, 3)


@pytest.mark.parametrize("p, q, n", [(1, 1, 8), (0, 0, 1), (6, 6, 343), (3, 0, 10)])
def test_degree_examples(p, q, n):
    assert degree(YoungPQ(p, q)) == n


def test_degrees_table_first_row_triangular():
    assert degrees_table(6)[0] == [1, 3, 6, 10, 15, 21, 28]


@given(st.integers(0, 60), st.integers(0, 60))
def test_degree_symmetric_and_positive(p, q):
    assert degree(YoungPQ(p, q)) == degree(YoungPQ(q, p)) >= 1
    # Weyl dimension oracle: product over positive roots of <λ+ρ, α>/<ρ, α>
    assert degree(YoungPQ(p, q)) * 2 == (p + 1) * (q + 1) * (p + q + 2)


def test_young_rejects_negative():
    with pytest.raises(ValueError):
        YoungPQ(-1, 0)


def test_admissible():
    assert admissible(YoungPQ(1, 1)) and not admissible(YoungPQ(1, 0)) and admissible(YoungPQ(3, 0))
    assert admissible_degrees(160) == [1, 8, 10, 27, 28, 35, 55, 64, 80, 81, 91, 125, 136, 143, 154]


def test_okubo_basis3_printed_entries():
    A = okubo_basis3()
    assert fequal(A[(1, 1)], fmat([[2 * t, 0, 0], [0, -t, 0], [0, 0, -t]]))
    assert fequal(A[(1, 1)] + A[(2, 2)] + A[(3, 3)], fmat([[0] * 3] * 3))
    for i in (1, 2, 3):
        assert sum(A[(i, i)][j, j] for j in range(3)) == 0


def test_okubo_commutators_all_81():
    result = okubo_commutator_check()
    assert len(result) == 81 and all(result.values())


def test_su2_embedding():
    a = su2_embedding()
    assert fequal(a[(1, 1)] + a[(2, 2)], fmat([[0] * 3] * 3))
    assert su2_commutator_check(a)
    assert fequal(upper_block(a[(1, 1)]), fmat([[h, 0], [0, -h]]))
    for key, m in okubo_basis2().items():
        assert fequal(upper_block(a[key]), m)


def test_su2_lowering_is_sigma_combination():
    # with σ/2 normalisation a²₁ = σ₁/2 + iσ₂/2 is the unit at row 1, column 2
    sig1 = np.array([[0, 1], [1, 0]]) / 2
    sig2 = np.array([[0, -1j], [1j, 0]]) / 2
    a21 = to_float(upper_block(su2_embedding()[(2, 1)]))
    assert np.allclose(a21, sig1 + 1j * sig2)


def test_okubo2_printed_differs_only_at_a21():
    true = okubo_basis2()
    for key in true:
        assert fequal(OKUBO2_PRINTED[key], true[key]) == (key != (2, 1))
    assert not su2_commutator_check(OKUBO2_PRINTED)


def test_spin_fixations():
    I3, U3, V3 = spin_fixations()
    assert fequal(I3, fmat([[h, 0, 0], [0, -h, 0], [0, 0, 0]]))
    assert fequal(U3, fmat([[0, 0, 0], [0, -h, 0], [0, 0, h]]))
    assert fequal(V3, fmat([[h, 0, 0], [0, 0, 0], [0, 0, -h]]))


def test_hypercharge_triplet():
    # u, d carry 1/3 and s carries -2/3
    assert diagonal_eigenvalues(hypercharge3()) == [t, t, -2 * t]


def test_charge_operator_triplet():
    assert fequal(charge_operator(1, 0, 0, 3), okubo_basis3()[(1, 1)])
    with pytest.raises(ValueError):
        charge_operator(1, 0, 0, 5)


def test_adjoint_preserves_commutators():
    assert adjoint_preserves_commutators()


def test_adjoint_matches_structure_constant_oracle():
    # independent oracle: ad(X) acting on the 9-dim full matrix space, restricted to a traceless basis
    A = okubo_basis3()
    keys = [(1, 1), (3, 3), (2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3)]
    basis = np.array([to_float(A[k]).ravel() for k in keys]).T
    for k in A.A:
        X = to_float(A[k])
        images = np.array([(X @ to_float(A[j]) - to_float(A[j]) @ X).ravel() for j in keys]).T
        coords, *_ = np.linalg.lstsq(basis, images, rcond=None)
        assert np.allclose(coords, to_float(adjoint(A[k])))


def test_adjoint_spectra():
    I3, _, _ = spin_fixations()
    ev = np.sort(np.linalg.eigvals(to_float(adjoint(I3))).real)
    assert np.allclose(ev, [-1, -0.5, -0.5, 0, 0, 0.5, 0.5, 1])
    Y = np.sort(np.linalg.eigvals(to_float(adjoint(hypercharge3()))).real)
    assert np.allclose(Y, [-1, -1, 0, 0, 0, 0, 1, 1])
    Q = np.sort(np.linalg.eigvals(to_float(charge_operator(1, 0, 0, 8))).real)
    assert np.allclose(Q, [-1, -1, 0, 0, 0, 0, 1, 1])


def test_unitary_field():
    assert fequal(unitary_field(1, 0), fmat([[t, 0, 0], [0, t, 0], [0, 0, -2 * t]]))
    assert fequal(unitary_field(0, 1), fmat([[2 * t, 0, 0], [0, -t, 0], [0, 0, -t]]))


@given(st.fractions(), st.fractions())
def test_unitary_field_traceless(c, cp):
    z = unitary_field(c, cp)
    assert z[0, 0] + z[1, 1] + z[2, 2] == 0


def test_reduction_811():
    sizes = reduction_811()
    assert sizes == [3, 2, 2, 1] and sum(sizes) == degree(YoungPQ(1, 1)) and sizes.count(1) == 1


def test_diagonal_eigenvalues_rejects_non_diagonal():
    with pytest.raises(ValueError):
        diagonal_eigenvalues(okubo_basis3()[(1, 2)])
