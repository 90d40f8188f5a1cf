"""SU(3): degrees, admissibility, Okubo operators, su(2) embeddings and the adjoint octet.

All matrices are numpy object arrays of Fractions, so commutator checks are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass(frozen=True)
class YoungPQ:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be non-negative")


def degree(pq: YoungPQ) -> int:
    return (pq.p + 1) * (pq.q + 1) * (pq.p + pq.q + 2) // 2


def degrees_table(max_index: int) -> list[list[int]]:
    if max_index < 0:
        raise ValueError("max must be non-negative")
    return [[degree(YoungPQ(p, q)) for q in range(max_index + 1)] for p in range(max_index + 1)]


def admissible(pq: YoungPQ) -> bool:
    return (pq.p - pq.q) % 3 == 0


def admissible_degrees(max_degree: int) -> list[int]:
    """Sorted distinct degrees ≤ max_degree of admissible (p, q)."""
    out = set()
    p = 0
    while degree(YoungPQ(p, 0)) <= max_degree:
        q = 0
        while degree(YoungPQ(p, q)) <= max_degree:
            if admissible(YoungPQ(p, q)):
                out.add(degree(YoungPQ(p, q)))
            q += 1
        p += 1
    return sorted(out)


def fmat(rows) -> np.ndarray:
    return np.array([[Fraction(x) for x in row] for row in rows], dtype=object)


def fzeros(n: int) -> np.ndarray:
    return np.array([[ZERO] * n for _ in range(n)], dtype=object)


def feye(n: int) -> np.ndarray:
    m = fzeros(n)
    for i in range(n):
        m[i, i] = ONE
    return m


def comm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a.dot(b) - b.dot(a)


def fequal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


@dataclass(frozen=True)
class OkuboBasis3:
    """A[(i, k)] is A^i_k: unit entry at row k, column i, minus δ^i_k/3 on the diagonal."""

    A: dict[tuple[int, int], np.ndarray]

    def __getitem__(self, key: tuple[int, int]) -> np.ndarray:
        return self.A[key]


def okubo_basis3() -> OkuboBasis3:
    A = {}
    for i, k in itertools.product((1, 2, 3), repeat=2):
        m = fzeros(3)
        m[k - 1, i - 1] = ONE
        if i == k:
            m = m - feye(3) * Fraction(1, 3)
        A[(i, k)] = m
    return OkuboBasis3(A)


def okubo_commutator_check(basis: OkuboBasis3 | None = None) -> dict[tuple[int, int, int, int], bool]:
    """[A^i_k, A^l_m] = δ^i_m A^l_k - δ^l_k A^i_m over all 81 index pairs."""
    basis = basis or okubo_basis3()
    out = {}
    for (i, k), (l, m) in itertools.product(basis.A, repeat=2):
        rhs = fzeros(3)
        if i == m:
            rhs = rhs + basis[(l, k)]
        if l == k:
            rhs = rhs - basis[(i, m)]
        out[(i, k, l, m)] = fequal(comm(basis[(i, k)], basis[(l, m)]), rhs)
    return out


def su2_embedding(basis: OkuboBasis3 | None = None) -> dict[tuple[int, int], np.ndarray]:
    """a^i_j = A^i_j - ½δ^i_j A^k_k for i, j ∈ {1, 2}, summing k over {1, 2}."""
    basis = basis or okubo_basis3()
    trace_part = basis[(1, 1)] + basis[(2, 2)]
    out = {}
    for i, j in itertools.product((1, 2), repeat=2):
        m = basis[(i, j)]
        if i == j:
            m = m - trace_part * Fraction(1, 2)
        out[(i, j)] = m
    return out


def okubo_basis2() -> dict[tuple[int, int], np.ndarray]:
    """2×2 Okubo operators: a^i_k has a unit at row k, column i, minus δ^i_k/2."""
    out = {}
    for i, k in itertools.product((1, 2), repeat=2):
        m = fzeros(2)
        m[k - 1, i - 1] = ONE
        if i == k:
            m = m - feye(2) * Fraction(1, 2)
        out[(i, k)] = m
    return out


def su2_commutator_check(a: dict[tuple[int, int], np.ndarray]) -> bool:
    for (i, j), (k, l) in itertools.product(a, repeat=2):
        n = next(iter(a.values())).shape[0]
        rhs = fzeros(n)
        if i == l:
            rhs = rhs + a[(k, j)]
        if k == j:
            rhs = rhs - a[(i, l)]
        if not fequal(comm(a[(i, j)], a[(k, l)]), rhs):
            return False
    return True


def spin_fixations(basis: OkuboBasis3 | None = None) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(I₃, U₃, V₃) = (A¹₁ + ½A³₃, A³₃ + ½A¹₁, A¹₁ + ½A²₂)."""
    basis = basis or okubo_basis3()
    h = Fraction(1, 2)
    I3 = basis[(1, 1)] + basis[(3, 3)] * h
    U3 = basis[(3, 3)] + basis[(1, 1)] * h
    V3 = basis[(1, 1)] + basis[(2, 2)] * h
    return I3, U3, V3


def hypercharge3(basis: OkuboBasis3 | None = None) -> np.ndarray:
    basis = basis or okubo_basis3()
    return -basis[(3, 3)]


# -- adjoint octet ---------------------------------------------------------------------

# fixed ordering of the 8 traceless basis elements
ADJOINT_BASIS: tuple[tuple[int, int], ...] = ((1, 1), (3, 3), (2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3))


def _coordinates(m: np.ndarray) -> list[Fraction]:
    """Coordinates of a traceless 3×3 matrix in ADJOINT_BASIS.

    A^i_k with i ≠ k is the unit at (k, i); the diagonal d = x·A¹₁ + y·A³₃ gives
    d1 - d2 = x and d3 - d2 = y.
    """
    d = [m[i, i] for i in range(3)]
    if sum(d) != 0:
        raise ValueError("matrix is not traceless")
    coords = [d[0] - d[1], d[2] - d[1]]
    for i, k in ADJOINT_BASIS[2:]:
        coords.append(m[k - 1, i - 1])
    return coords


def adjoint(m: np.ndarray, basis: OkuboBasis3 | None = None) -> np.ndarray:
    """8×8 matrix of ad(m) on the traceless subspace, columns = images of ADJOINT_BASIS."""
    basis = basis or okubo_basis3()
    out = fzeros(8)
    for col, key in enumerate(ADJOINT_BASIS):
        for row, c in enumerate(_coordinates(comm(m, basis[key]))):
            out[row, col] = c
    return out


def adjoint_preserves_commutators(basis: OkuboBasis3 | None = None) -> bool:
    basis = basis or okubo_basis3()
    for a, b in itertools.product(basis.A.values(), repeat=2):
        if not fequal(adjoint(comm(a, b), basis), comm(adjoint(a, basis), adjoint(b, basis))):
            return False
    return True


def charge_operator(alpha, beta, gamma, dimension: int) -> np.ndarray:
    """Q = αA¹₁ + βA³₃ + γ·1 in the triplet (3) or adjoint (8) representation."""
    basis = okubo_basis3()
    alpha, beta, gamma = (Fraction(x) for x in (alpha, beta, gamma))
    if dimension == 3:
        return basis[(1, 1)] * alpha + basis[(3, 3)] * beta + feye(3) * gamma
    if dimension == 8:
        return (adjoint(basis[(1, 1)], basis) * alpha + adjoint(basis[(3, 3)], basis) * beta
                + feye(8) * gamma)
    raise ValueError(f"dimension must be 3 or 8, got {dimension}")


def unitary_field(C, Cprime) -> np.ndarray:
    C, Cprime = Fraction(C), Fraction(Cprime)
    first = fmat([[Fraction(1, 3), 0, 0], [0, Fraction(1, 3), 0], [0, 0, Fraction(-2, 3)]])
    second = fmat([[Fraction(2, 3), 0, 0], [0, Fraction(-1, 3), 0], [0, 0, Fraction(-1, 3)]])
    return first * C + second * Cprime


def reduction_811() -> list[int]:
    """Octet → triplet ⊕ doublet ⊕ conjugate doublet ⊕ singlet."""
    return [3, 2, 2, 1]


def to_float(m: np.ndarray) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in m])


def diagonal_eigenvalues(m: np.ndarray) -> list[Fraction]:
    """Exact eigenvalues of a matrix that is diagonal in its basis (raises otherwise)."""
    n = m.shape[0]
    if any(m[i, j] != 0 for i in range(n) for j in range(n) if i != j):
        raise ValueError("matrix is not diagonal")
    return sorted((m[i, i] for i in range(n)), reverse=True)


def upper_block(m: np.ndarray) -> np.ndarray:
    """The 2×2 block acting on the first two basis vectors."""
    return m[:2, :2].copy()


# The four 2×2 operators as printed; a²₁ is printed as the zero matrix although the
# commutation relations force the unit at row 1, column 2 (see okubo_basis2).
OKUBO2_PRINTED = {
    (1, 1): fmat([[Fraction(1, 2), 0], [0, Fraction(-1, 2)]]),
    (2, 1): fmat([[0, 0], [0, 0]]),
    (1, 2): fmat([[0, 0], [1, 0]]),
    (2, 2): fmat([[Fraction(-1, 2), 0], [0, Fraction(1, 2)]]),
}
