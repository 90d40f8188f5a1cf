from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lorentz_octets.rep_core import HalfInt, RepLabel
from lorentz_octets.spin_lines import (degree_sequence, interlocking_neighbors, line, position_on_line,
                                       spin_multiplet, tensor_structure)


def R(l, ldot):
    return RepLabel(HalfInt.of(l), HalfInt.of(ldot))


h = Fraction(1, 2)


def test_line_spin0():
    assert line(0, 5).entries == (R(0, 0), R(h, h), R(1, 1), R(3 * h, 3 * h), R(2, 2))


def test_line_spin_half():
    assert line(HalfInt(1), 4).entries == (R(h, 0), R(1, h), R(3 * h, 1), R(2, 3 * h))


def test_line_single_entry_and_dual():
    assert line(HalfInt(3), 1).entries == (R(3 * h, 0),)
    assert line(HalfInt(3), 1, dual=True).entries == (R(0, 3 * h),)


def test_line_rejects_empty():
    with pytest.raises(ValueError):
        line(0, 0)


@pytest.mark.parametrize("s2, expected", [
    (0, [1, 4, 9, 16, 25]),
    (1, [2, 6, 12, 20, 30]),
    (2, [3, 8, 15, 24, 35]),
])
def test_degree_sequences(s2, expected):
    assert degree_sequence(line(HalfInt(s2), 5)) == expected


@given(st.integers(0, 20), st.integers(1, 30))
def test_degree_sequence_formula_and_dual(s2, n):
    seq = degree_sequence(line(HalfInt(s2), n))
    assert seq == [(i + s2 + 1) * (i + 1) for i in range(n)]
    assert degree_sequence(line(HalfInt(s2), n, dual=True)) == seq


@given(st.integers(0, 20), st.integers(1, 20))
def test_line_entries_step_by_half(s2, n):
    entries = line(HalfInt(s2), n).entries
    for i, rep in enumerate(entries):
        assert rep.k - rep.r == s2 and rep.r == i


def test_tensor_structure_examples():
    ts = tensor_structure(R(Fraction(59, 2), 29))
    assert (ts.complex_dim, ts.spinspace_dim_log2) == (234, 117)
    ts0 = tensor_structure(R(0, 0))
    assert (ts0.complex_dim, ts0.spinspace_dim) == (0, 1)


@given(st.integers(0, 100))
def test_spin0_complex_dim_is_twice_k_plus_r(s2):
    s = HalfInt(s2)
    ts = tensor_structure(RepLabel(s, s))
    assert ts.complex_dim == 4 * s2
    assert ts.spinspace_dim_log2 == 2 * s2


@pytest.mark.parametrize("rep, expected", [
    (R(0, 0), [R(h, h)]),
    (R(h, h), [R(0, 0), R(0, 1), R(1, 0), R(1, 1)]),
    (R(1, h), [R(h, 0), R(h, 1), R(3 * h, 0), R(3 * h, 1)]),
])
def test_interlocking_neighbors(rep, expected):
    assert interlocking_neighbors(rep) == sorted(expected)


@pytest.mark.parametrize("s2, expected", [
    (2, [R(1, 0), R(h, h), R(0, 1)]),
    (1, [R(h, 0), R(0, h)]),
    (5, [R(5 * h, 0), R(2, h), R(3 * h, 1), R(1, 3 * h), R(h, 2), R(0, 5 * h)]),
])
def test_spin_multiplets(s2, expected):
    assert spin_multiplet(HalfInt(s2)) == expected


def test_second_triplet():
    assert spin_multiplet(HalfInt(2), shift=1) == [R(3 * h, h), R(1, 1), R(h, 3 * h)]


@given(st.integers(0, 16), st.integers(0, 10))
def test_multiplet_l_minus_ldot_progression(s2, shift):
    reps = spin_multiplet(HalfInt(s2), shift)
    assert len(reps) == s2 + 1
    for j, rep in enumerate(reps):
        assert rep.l - rep.ldot == HalfInt(s2) - j
    assert reps[0].spin == HalfInt(s2) and reps[-1].spin == HalfInt(s2)


def test_position_on_line():
    assert position_on_line(R(Fraction(59, 2), 29)) == (HalfInt(1), False, 58)
    assert position_on_line(R(Fraction(53, 2), Fraction(55, 2))) == (HalfInt(2), True, 53)
