"""Real Clifford algebras Cl(p,q): classification, exact spinor bases, Π and the CPT group.

Gamma matrices are built from Pauli strings, so every entry is a Gaussian
integer and every generator is either purely real or purely imaginary.
Arithmetic on them is exact (int64 real and imaginary parts).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

DEFAULT_CAP = 12


class DivisionRing(str, Enum):
    R = "R"
    RR = "R+R"
    C = "C"
    H = "H"
    HH = "H+H"


class ChargeClass(str, Enum):
    CHARGED = "Charged"
    NEUTRAL = "Neutral"
    TRULY_NEUTRAL = "TrulyNeutral"


class UnassignedParity(ValueError):
    pass


class PiRuleError(ValueError):
    pass


@dataclass(frozen=True)
class CliffordSignature:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be non-negative")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def d(self) -> int:
        return self.p - self.q

    @property
    def d_mod8(self) -> int:
        return (self.p - self.q) % 8

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


_RING_BY_RESIDUE = {
    0: DivisionRing.R, 2: DivisionRing.R,
    1: DivisionRing.RR,
    3: DivisionRing.C, 7: DivisionRing.C,
    4: DivisionRing.H, 6: DivisionRing.H,
    5: DivisionRing.HH,
}


def classify(sig: CliffordSignature) -> DivisionRing:
    return _RING_BY_RESIDUE[sig.d_mod8]


def charge_class(field_is_complex: bool, ring: DivisionRing) -> ChargeClass:
    if field_is_complex:
        return ChargeClass.CHARGED
    if ring in (DivisionRing.H, DivisionRing.HH):
        return ChargeClass.NEUTRAL
    if ring in (DivisionRing.R, DivisionRing.RR):
        return ChargeClass.TRULY_NEUTRAL
    raise ValueError(f"no charge class for a real algebra with ring {ring.value}")


def parity_square(sig: CliffordSignature) -> int:
    r = sig.d_mod8
    if r == 4:
        return 1
    if r in (2, 6):
        return -1
    raise UnassignedParity(f"parity square unassigned for p-q = {r} (mod 8)")


# -- exact Gaussian-integer matrices ------------------------------------------------

@dataclass(frozen=True, eq=False)
class GaussianMatrix:
    re: np.ndarray
    im: np.ndarray

    @classmethod
    def identity(cls, n: int) -> "GaussianMatrix":
        return cls(np.eye(n, dtype=np.int64), np.zeros((n, n), dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    def __matmul__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix(self.re @ other.re - self.im @ other.im,
                              self.re @ other.im + self.im @ other.re)

    def __add__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix(self.re + other.re, self.im + other.im)

    def __neg__(self) -> "GaussianMatrix":
        return GaussianMatrix(-self.re, -self.im)

    def scale(self, re: int, im: int = 0) -> "GaussianMatrix":
        # multiply by the Gaussian integer re + i·im
        return GaussianMatrix(re * self.re - im * self.im, re * self.im + im * self.re)

    def conj(self) -> "GaussianMatrix":
        return GaussianMatrix(self.re, -self.im)

    @property
    def T(self) -> "GaussianMatrix":
        return GaussianMatrix(self.re.T.copy(), self.im.T.copy())

    @property
    def H(self) -> "GaussianMatrix":
        return GaussianMatrix(self.re.T.copy(), -self.im.T.copy())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        return bool(np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im))

    __hash__ = None  # type: ignore[assignment]

    def is_real(self) -> bool:
        return not self.im.any()

    def is_imaginary(self) -> bool:
        return not self.re.any()

    def scalar_multiple_of_identity(self) -> complex | None:
        """The Gaussian integer c if this equals c·I, else None."""
        n = self.dim
        c_re, c_im = int(self.re[0, 0]), int(self.im[0, 0])
        if self == GaussianMatrix.identity(n).scale(c_re, c_im):
            return complex(c_re, c_im)
        return None

    def inverse_unitary(self) -> "GaussianMatrix":
        """Inverse of a unitary matrix (conjugate transpose), checked exactly."""
        inv = self.H
        if not (self @ inv == GaussianMatrix.identity(self.dim)):
            raise ValueError("matrix is not unitary")
        return inv

    def to_complex(self) -> np.ndarray:
        return self.re.astype(float) + 1j * self.im.astype(float)


# Pauli letters 0=I, 1=X, 2=Y, 3=Z as (re, im) 2×2 integer pairs
_PAULI = {
    0: (np.array([[1, 0], [0, 1]]), np.zeros((2, 2), dtype=np.int64)),
    1: (np.array([[0, 1], [1, 0]]), np.zeros((2, 2), dtype=np.int64)),
    2: (np.zeros((2, 2), dtype=np.int64), np.array([[0, -1], [1, 0]])),
    3: (np.array([[1, 0], [0, -1]]), np.zeros((2, 2), dtype=np.int64)),
}


@dataclass(frozen=True)
class PauliWord:
    """i^phase · σ_{letters[0]} ⊗ σ_{letters[1]} ⊗ ..."""

    letters: tuple[int, ...]
    phase: int  # power of i, 0 or 1

    @property
    def square(self) -> int:
        return -1 if self.phase % 2 else 1

    @property
    def is_real(self) -> bool:
        return (self.letters.count(2) + self.phase) % 2 == 0

    @property
    def is_symmetric(self) -> bool:
        return self.letters.count(2) % 2 == 0

    def anticommutes(self, other: "PauliWord") -> bool:
        clash = sum(1 for a, b in zip(self.letters, other.letters) if a and b and a != b)
        return clash % 2 == 1

    def matrix(self) -> GaussianMatrix:
        m = GaussianMatrix(np.ones((1, 1), dtype=np.int64), np.zeros((1, 1), dtype=np.int64))
        for letter in self.letters:
            re, im = _PAULI[letter]
            m = GaussianMatrix(np.kron(m.re, re) - np.kron(m.im, im),
                               np.kron(m.re, im) + np.kron(m.im, re))
        return m.scale(0, 1) if self.phase % 2 else m

    def __str__(self) -> str:
        body = "".join("IXYZ"[c] for c in self.letters) or "1"
        return ("i" if self.phase % 2 else "") + body


@dataclass(frozen=True)
class GammaBasis:
    signature: CliffordSignature
    words: tuple[PauliWord, ...]
    gammas: tuple[GaussianMatrix, ...] = field(repr=False)

    @property
    def generator_squares(self) -> list[int]:
        return [w.square for w in self.words]

    @property
    def dim(self) -> int:
        return 2 ** (self.signature.n // 2)

    def identity(self) -> GaussianMatrix:
        return GaussianMatrix.identity(self.dim)


def _symplectic(word: PauliWord) -> tuple[int, int]:
    x = z = 0
    for pos, c in enumerate(word.letters):
        if c in (1, 2):
            x |= 1 << pos
        if c in (2, 3):
            z |= 1 << pos
    return x, z


def _search_words(sig: CliffordSignature, real_count: int | None,
                  real_count_parity: int | None) -> tuple[PauliWord, ...] | None:
    """Backtracking search for n anticommuting Pauli words with the requested squares.

    Reality is free per slot; the number of real generators is constrained
    exactly (``real_count``) or by parity.  Forward checking keeps, for every
    open slot, only candidates anticommuting with everything chosen so far.
    """
    n = sig.n
    qubits = n // 2
    squares = [1] * sig.p + [-1] * sig.q
    cands: dict[int, list[tuple[PauliWord, int, int]]] = {1: [], -1: []}
    for letters in itertools.product(range(4), repeat=qubits):
        if not any(letters):
            continue
        for phase in (0, 1):
            w = PauliWord(tuple(letters), phase)
            x, z = _symplectic(w)
            cands[w.square].append((w, x, z))
    for sq in cands:
        # real words first so all-real bases are reached quickly
        cands[sq].sort(key=lambda t: (not t[0].is_real, t[0].letters, t[0].phase))

    def anti(a, b) -> bool:
        return bin((a[1] & b[2]) ^ (a[2] & b[1])).count("1") % 2 == 1

    def ok_count(b: int, filled: int) -> bool:
        left = n - filled
        if real_count is not None:
            return b <= real_count <= b + left
        if left == 0 and real_count_parity is not None:
            return b % 2 == real_count_parity
        return True

    def rec(i: int, chosen: list, b: int, domains: list[list]):
        if i == n:
            return list(chosen) if ok_count(b, n) else None
        for cand in domains[i]:
            nb = b + (1 if cand[0].is_real else 0)
            if not ok_count(nb, i + 1):
                continue
            new_domains = domains[: i + 1]
            dead = False
            for dom in domains[i + 1:]:
                kept = [c for c in dom if anti(c, cand)]
                if not kept:
                    dead = True
                    break
                new_domains.append(kept)
            if dead:
                continue
            chosen.append(cand)
            got = rec(i + 1, chosen, nb, new_domains)
            if got is not None:
                return got
            chosen.pop()
        return None

    found = rec(0, [], 0, [cands[sq] for sq in squares])
    return None if found is None else tuple(c[0] for c in found)


def _default_real_count_parity(sig: CliffordSignature) -> int | None:
    ring = classify(sig)
    if ring == DivisionRing.H:
        # b ≡ (n-2)/2 (mod 2) gives a - b ≡ 2 (mod 4)
        return ((sig.n - 2) // 2) % 2
    return None


def gamma_basis(sig: CliffordSignature, cap: int = DEFAULT_CAP,
                real_count: int | None = None) -> GammaBasis:
    """Exact spinor basis of Cl(p,q) for even n.

    Ring-R signatures get an all-real basis.  Ring-H signatures get a basis
    with a - b ≡ 2 (mod 4) unless ``real_count`` asks for a specific number
    of real generators.
    """
    if sig.n % 2:
        raise ValueError(f"{sig}: odd n has no single spinor representation here")
    if sig.n > cap:
        raise ValueError(f"{sig}: n = {sig.n} exceeds the matrix cap {cap}")
    if sig.n == 0:
        return GammaBasis(sig, (), ())
    if real_count is None and classify(sig) == DivisionRing.R:
        real_count = sig.n
    words = _search_words(sig, real_count, None if real_count is not None
                          else _default_real_count_parity(sig))
    if words is None:
        raise ValueError(f"{sig}: no Pauli-string basis with {real_count} real generators")
    return GammaBasis(sig, words, tuple(w.matrix() for w in words))


def check_basis(basis: GammaBasis) -> bool:
    ident = basis.identity()
    for i, gi in enumerate(basis.gammas):
        if not (gi @ gi == ident.scale(basis.generator_squares[i])):
            return False
        for gj in basis.gammas[i + 1:]:
            if not ((gi @ gj) + (gj @ gi) == ident.scale(0)):
                return False
    return True


def count_generator_kinds(basis: GammaBasis) -> tuple[int, int]:
    """(a, b): generators with a non-real entry, and all-real generators."""
    a = sum(1 for g in basis.gammas if not g.is_real())
    return a, len(basis.gammas) - a


def ordered_product(mats, dim: int) -> GaussianMatrix:
    out = GaussianMatrix.identity(dim)
    for m in mats:
        out = out @ m
    return out


def pi_matrix(basis: GammaBasis) -> GaussianMatrix:
    sig = basis.signature
    ring = classify(sig)
    a, b = count_generator_kinds(basis)
    if ring == DivisionRing.R:
        if a:
            raise PiRuleError(f"{sig}: unit Π needs an all-real basis, got {a} complex generators")
        return basis.identity()
    if ring != DivisionRing.H:
        raise PiRuleError(f"{sig}: Π rule covers rings R and H only, got {ring.value}")
    if a % 2 == 0:
        return ordered_product([g for g in basis.gammas if not g.is_real()], basis.dim)
    if b % 2 == 1:
        return ordered_product([g for g in basis.gammas if g.is_real()], basis.dim)
    raise PiRuleError(f"{sig}: neither a even nor b odd (a={a}, b={b})")


def pi_conj_sign(basis: GammaBasis) -> int:
    """Sign s with Π·conj(Π) = s·I, from the explicit product."""
    pi = pi_matrix(basis)
    c = (pi @ pi.conj()).scalar_multiple_of_identity()
    if c is None or c.imag or abs(c.real) != 1:
        raise ArithmeticError("Π·conj(Π) is not ±I")
    return int(c.real)


def counting_rule_sign(sig: CliffordSignature, a: int, b: int) -> int:
    """Sign predicted by the counting rule: +1 iff a - b ≡ 0,1 (mod 4); +1 for ring R."""
    if classify(sig) == DivisionRing.R:
        return 1
    return 1 if (a - b) % 4 in (0, 1) else -1


def double_conjugation_sign(sig: CliffordSignature, cap: int = DEFAULT_CAP) -> int:
    """Π·conj(Π) sign, computed on the default basis (the sign is basis independent)."""
    if sig.d_mod8 not in (0, 2, 4, 6):
        raise PiRuleError(f"{sig}: residue {sig.d_mod8} outside the Π rule")
    return pi_conj_sign(gamma_basis(sig, cap))


@dataclass(frozen=True)
class ConjugationMatrices:
    W: GaussianMatrix
    E: GaussianMatrix
    C: GaussianMatrix
    K: GaussianMatrix
    S: GaussianMatrix
    F: GaussianMatrix
    Pi: GaussianMatrix


def conjugation_matrices(basis: GammaBasis) -> ConjugationMatrices:
    dim = basis.dim
    W = ordered_product(basis.gammas, dim)
    sym = [g for g, w in zip(basis.gammas, basis.words) if w.is_symmetric]
    anti = [g for g, w in zip(basis.gammas, basis.words) if not w.is_symmetric]
    # exactly one of these satisfies E γᵀ E⁻¹ = γ for every generator
    E = ordered_product(sym, dim) if len(sym) % 2 else ordered_product(anti, dim)
    Pi = pi_matrix(basis)
    C = E @ W
    return ConjugationMatrices(W=W, E=E, C=C, K=Pi @ W, S=Pi @ E, F=Pi @ C, Pi=Pi)


def star(m: ConjugationMatrices, A: GaussianMatrix) -> GaussianMatrix:
    return m.W @ A @ m.W.inverse_unitary()


def reversion(m: ConjugationMatrices, A: GaussianMatrix) -> GaussianMatrix:
    return m.E @ A.T @ m.E.inverse_unitary()


def bar(m: ConjugationMatrices, A: GaussianMatrix) -> GaussianMatrix:
    return m.Pi @ A.conj() @ m.Pi.inverse_unitary()


def blades(basis: GammaBasis):
    """All ordered products e_I over subsets I, with their index tuples."""
    n = len(basis.gammas)
    for size in range(n + 1):
        for idx in itertools.combinations(range(n), size):
            yield idx, ordered_product([basis.gammas[i] for i in idx], basis.dim)


def automorphism_report(basis: GammaBasis) -> dict[str, bool]:
    """Defining identities and pairwise commutativity of ⋆, ~ and the bar map on all blades."""
    m = conjugation_matrices(basis)
    ok = {"star": True, "reversion": True, "bar": True,
          "star~rev": True, "star~bar": True, "rev~bar": True}
    for idx, blade in blades(basis):
        g = len(idx)
        ok["star"] &= star(m, blade) == blade.scale((-1) ** g)
        ok["reversion"] &= reversion(m, blade) == blade.scale((-1) ** (g * (g - 1) // 2))
        ok["bar"] &= bar(m, blade) == blade
        ok["star~rev"] &= reversion(m, star(m, blade)) == star(m, reversion(m, blade))
        ok["star~bar"] &= bar(m, star(m, blade)) == star(m, bar(m, blade))
        ok["rev~bar"] &= bar(m, reversion(m, blade)) == reversion(m, bar(m, blade))
    return {k: bool(v) for k, v in ok.items()}


# -- CPT group -----------------------------------------------------------------------

CPT_ELEMENTS = ("1", "P", "T", "PT", "C", "CP", "CT", "CPT")
# matrix symbol and (p, t, c) bits of each element
CPT_SYMBOL = {"1": "1", "P": "W", "T": "E", "PT": "C", "C": "Π", "CP": "K", "CT": "S", "CPT": "F"}
CPT_BITS = {"1": (0, 0, 0), "P": (1, 0, 0), "T": (0, 1, 0), "PT": (1, 1, 0),
            "C": (0, 0, 1), "CP": (1, 0, 1), "CT": (0, 1, 1), "CPT": (1, 1, 1)}
_BY_BITS = {v: k for k, v in CPT_BITS.items()}


@dataclass(frozen=True)
class CptPhases:
    """Numeric phases; use None in cpt_table for the symbolic table."""

    eta_p: complex = 1
    eta_t: complex = 1
    eta_c: complex = 1

    def __post_init__(self) -> None:
        for v in (self.eta_p, self.eta_t, self.eta_c):
            if not np.isclose(abs(v), 1.0):
                raise ValueError(f"phase {v} is not a unit complex number")


@dataclass(frozen=True)
class CptCell:
    exponents: tuple[int, int, int]  # powers of (η_p, η_t, η_c)
    word: str
    element: str  # product element at unit phases after X² = 1

    def monomial(self) -> str:
        parts = []
        for name, e in zip(("η_p", "η_t", "η_c"), self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "·".join(parts) or "1"

    def phase_value(self, phases: CptPhases) -> complex:
        ep, et, ec = self.exponents
        return complex(phases.eta_p ** ep * phases.eta_t ** et * phases.eta_c ** ec)


@dataclass(frozen=True)
class CptTable:
    elements: tuple[str, ...]
    cells: tuple[tuple[CptCell, ...], ...]
    phases: CptPhases | None

    def cell(self, row: str, col: str) -> CptCell:
        return self.cells[self.elements.index(row)][self.elements.index(col)]

    def is_abelian(self) -> bool:
        return all(self.cell(a, b).element == self.cell(b, a).element
                   for a in self.elements for b in self.elements)

    def all_involutions(self) -> bool:
        return all(self.cell(a, a).element == "1" for a in self.elements)

    def is_z2_cubed(self) -> bool:
        closed = all(self.cell(a, b).element in self.elements
                     for a in self.elements for b in self.elements)
        latin = all(len({self.cell(a, b).element for b in self.elements}) == 8 for a in self.elements)
        return closed and latin and self.is_abelian() and self.all_involutions()


def _cell(row: str, col: str) -> CptCell:
    rb, cb = CPT_BITS[row], CPT_BITS[col]
    exps = tuple(x + y for x, y in zip(rb, cb))
    rs, cs = CPT_SYMBOL[row], CPT_SYMBOL[col]
    if row == "1":
        word = cs
    elif col == "1":
        word = rs
    elif row == col:
        word = f"{rs}²"
    else:
        word = rs + cs
    element = _BY_BITS[tuple((x + y) % 2 for x, y in zip(rb, cb))]
    return CptCell(exponents=exps, word=word, element=element)


def cpt_table(phases: CptPhases | None = None) -> CptTable:
    cells = tuple(tuple(_cell(r, c) for c in CPT_ELEMENTS) for r in CPT_ELEMENTS)
    return CptTable(elements=CPT_ELEMENTS, cells=cells, phases=phases)


def cpt_representatives(basis: GammaBasis) -> dict[str, GaussianMatrix]:
    m = conjugation_matrices(basis)
    return {"1": basis.identity(), "P": m.W, "T": m.E, "PT": m.C,
            "C": m.Pi, "CP": m.K, "CT": m.S, "CPT": m.F}


def cpt_projective_check(basis: GammaBasis) -> bool:
    """Each product of representatives equals a unit Gaussian multiple of the XOR element."""
    reps = cpt_representatives(basis)
    table = cpt_table()
    for a in CPT_ELEMENTS:
        for b in CPT_ELEMENTS:
            target = reps[table.cell(a, b).element]
            prod = reps[a] @ reps[b]
            if not any(prod == target.scale(re, im) for re, im in ((1, 0), (-1, 0), (0, 1), (0, -1))):
                return False
    return True
