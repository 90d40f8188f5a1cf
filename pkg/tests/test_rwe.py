import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lorentz_octets.rep_core import HalfInt, RepLabel, commutator, weights
from lorentz_octets.rwe import (BIVECTOR_ORDER, MINKOWSKI, ORBIT_TYPES, angular_momentum, bivector_metric,
                                bivector_system_matrices, det_factorization_check, dirac_gamma_set,
                                dirac_l_matrices, gamma_of_p, lambda3_generalized, mass_spectrum_from_gamma0,
                                orbit_type, pm_pairing_check, s_squared)

SIGMA = (np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.array([[1, 0], [0, -1]]))


# -- Γ(p), pairing, spectra ------------------------------------------------------------

def test_gamma_of_p_basic():
    g = dirac_gamma_set()
    assert np.array_equal(gamma_of_p(g, (1, 0, 0, 0)), g.g0)
    assert not gamma_of_p(g, (0, 0, 0, 0)).any()
    ev = np.sort(np.linalg.eigvals(gamma_of_p(g, (2.5, 0, 0, 0))).real)
    assert np.allclose(ev, [-2.5, -2.5, 2.5, 2.5])


def test_dirac_gammas_anticommute_with_minkowski_signs():
    g = dirac_gamma_set()
    mats = (g.g0, g.g1, g.g2, g.g3)
    eta = np.diag([1, -1, -1, -1])
    for i, j in itertools.product(range(4), repeat=2):
        assert np.allclose(mats[i] @ mats[j] + mats[j] @ mats[i], 2 * eta[i, j] * np.eye(4))


@pytest.mark.parametrize("g0, paired", [
    (np.diag([1, 1, -1, -1]), True),
    (np.diag([1, 2, 3]), False),
    (lambda3_generalized(HalfInt(1), HalfInt(1)).as_matrix(), True),
])
def test_pm_pairing(g0, paired):
    assert pm_pairing_check(g0).paired is paired


def test_pm_pairing_rejects_non_finite():
    with pytest.raises(ValueError):
        pm_pairing_check(np.array([[np.nan]]))


@pytest.mark.parametrize("g0, mu0, masses", [
    (np.diag([1, -1]), 1.0, [1.0]),
    (np.diag([1, 1, -1, -1]), 0.511, [0.511]),
    (np.diag([2, 1, -1, -2]), 1.0, [2.0, 1.0]),
])
def test_mass_spectrum(g0, mu0, masses):
    assert np.allclose(mass_spectrum_from_gamma0(g0, mu0).masses, masses)


def test_mass_spectrum_reports_complex_eigenvalues():
    spec = mass_spectrum_from_gamma0(np.array([[0, -1], [1, 0]]), 1.0)
    assert spec.masses == [] and len(spec.complex_eigenvalues) == 2


def test_det_factorization_dirac():
    g = dirac_gamma_set()
    rng = np.random.default_rng(11)
    m = 1.3
    samples = rng.uniform(-2, 2, size=(100, 4))
    rep = det_factorization_check(g, m, samples)
    for v, p in zip(rep.values, samples):
        want = (s_squared(p) - m * m) ** 2
        assert abs(v - want) <= 1e-9 * max(1.0, abs(want))
    assert rep.roots_s2 and np.isclose(rep.roots_s2[0], m * m, rtol=1e-6)


def test_det_constant_on_hyperboloid():
    g = dirac_gamma_set()
    eta = 0.7
    a = (np.cosh(eta) * 2, np.sinh(eta) * 2, 0, 0)
    b = (np.sqrt(4 + 0.3 ** 2 + 0.4 ** 2), 0, 0.3, 0.4)
    rep = det_factorization_check(g, 1.0, [a, b])
    assert len(rep.groups) == 1 and rep.constant_on_groups


def test_det_vanishes_on_mass_shell():
    g = dirac_gamma_set()
    m = 0.9
    rep = det_factorization_check(g, m, [(m, 0, 0, 0)])
    assert abs(rep.values[0]) < 1e-9


# -- bivectors and L-matrices ----------------------------------------------------------

def oracle_bivector_metric(g):
    out = np.zeros((6, 6))
    for A, (a, b) in enumerate(BIVECTOR_ORDER):
        for B, (c, d) in enumerate(BIVECTOR_ORDER):
            out[A, B] = np.linalg.det(np.array([[g[a, c], g[a, d]], [g[b, c], g[b, d]]]))
    return out


def test_bivector_metric_minkowski_value():
    # pairs 23, 31, 12 carry (+1)(+1) products; 10, 20, 30 pick up one time sign
    assert np.array_equal(bivector_metric(MINKOWSKI), np.diag([-1, 1, 1, -1, -1, 1]))
    assert np.allclose(bivector_metric(MINKOWSKI), oracle_bivector_metric(MINKOWSKI))


def test_bivector_metric_euclidean_and_sign():
    assert np.array_equal(bivector_metric(np.eye(4, dtype=int)), np.eye(6, dtype=int))
    assert np.array_equal(bivector_metric(-MINKOWSKI), bivector_metric(MINKOWSKI))


@given(st.lists(st.integers(-3, 3), min_size=10, max_size=10))
def test_bivector_metric_matches_determinant_oracle(entries):
    g = np.zeros((4, 4), dtype=int)
    g[np.triu_indices(4)] = entries
    g = g + np.triu(g, 1).T
    assert np.allclose(bivector_metric(g), oracle_bivector_metric(g))


def test_bivector_metric_rejects_asymmetric():
    with pytest.raises(ValueError):
        bivector_metric(np.arange(16).reshape(4, 4))


@pytest.mark.parametrize("c, scale", [(2, 1.0), (0, 0.0), (1, 0.5)])
def test_dirac_l_matrices(c, scale):
    L, Lc = dirac_l_matrices(c)
    for l, lc, s in zip(L, Lc, SIGMA):
        assert np.array_equal(l, scale * s)
        assert np.array_equal(lc, np.conj(scale * s))


# -- Λ₃ --------------------------------------------------------------------------------

def test_lambda3_proton_blocks():
    lam = lambda3_generalized(HalfInt(59), HalfInt(58))
    assert len(lam.blocks) == 59 and lam.dimension == 3540
    b1 = lam.block(1)
    assert b1[0] == Fraction(1711, 2) and b1[1] - b1[0] == -29 and b1[-1] == Fraction(-1711, 2)
    assert lam.block(2)[0] == 826 and lam.block(2)[1] == 826 - 28
    assert lam.block(3)[0] == Fraction(1593, 2)
    assert lam.block(29) == tuple(Fraction(59 - 2 * i, 2) for i in range(60))
    assert lam.zero_blocks() == [30]
    for i in range(1, 60):
        assert lam.block(60 - i) == tuple(-x for x in lam.block(i))


def test_lambda3_half_zero():
    lam = lambda3_generalized(HalfInt(1), HalfInt(0))
    assert lam.diagonal() == [0, 0]


@given(st.integers(0, 24), st.integers(0, 24))
def test_lambda3_spectrum_matches_outer_product(k, r):
    lam = lambda3_generalized(HalfInt(k), HalfInt(r))
    oracle = sorted(m.value * md.value for m in weights(HalfInt(k)) for md in weights(HalfInt(r)))
    assert sorted(lam.diagonal()) == oracle
    assert sum(lam.diagonal()) == 0
    assert lam.dimension == (k + 1) * (r + 1)


@given(st.integers(0, 12), st.integers(0, 12))
def test_lambda3_spectrum_is_paired(k, r):
    assert pm_pairing_check(lambda3_generalized(HalfInt(k), HalfInt(r)).as_matrix()).paired


def test_angular_momentum_c2_is_pauli():
    for L, s in zip(angular_momentum(HalfInt(1), c=2.0), SIGMA):
        assert np.allclose(L.toarray(), s)


def test_bivector_system_half_zero_reduces_to_single_factor():
    rep = RepLabel(HalfInt(1), HalfInt(0))
    for D, L in zip(bivector_system_matrices(rep), angular_momentum(HalfInt(1))):
        assert np.allclose(D.toarray(), L.toarray())


def test_bivector_system_half_half_spectrum():
    D3 = bivector_system_matrices(RepLabel(HalfInt(1), HalfInt(1)))[2].toarray()
    assert np.allclose(np.sort(np.linalg.eigvalsh(D3)), [-1, 0, 0, 1])


def test_bivector_system_difference_form_does_not_close():
    # [D1, D2] = i(J3 ⊗ 1 + 1 ⊗ J3), not i·D3
    rep = RepLabel(HalfInt(1), HalfInt(1))
    D1, D2, D3 = bivector_system_matrices(rep)
    La, Lb = angular_momentum(HalfInt(1)), angular_momentum(HalfInt(1))
    from scipy import sparse
    plus = sparse.kron(La[2], sparse.identity(2)) + sparse.kron(sparse.identity(2), Lb[2])
    c = commutator(D1, D2).toarray()
    assert np.allclose(c, 1j * plus.toarray())
    assert not np.allclose(c, 1j * D3.toarray())


def test_bivector_system_cap():
    with pytest.raises(ValueError):
        bivector_system_matrices(RepLabel(HalfInt(80), HalfInt(80)))


# -- orbits ----------------------------------------------------------------------------

@pytest.mark.parametrize("p, kind", [
    ((2, 1, 0, 0), "O+_m"), ((-2, 1, 0, 0), "O-_m"), ((0, 1, 0, 0), "O_im"),
    ((1, 1, 0, 0), "O+_0"), ((-1, 0, 1, 0), "O-_0"), ((0, 0, 0, 0), "O0_0"),
])
def test_orbit_types(p, kind):
    assert orbit_type(p) == kind
    assert kind in ORBIT_TYPES


def test_orbit_type_mass_mismatch():
    with pytest.raises(ValueError):
        orbit_type((2, 0, 0, 0), m=1.0)
    assert orbit_type((2, 0, 0, 0), m=2.0) == "O+_m"
