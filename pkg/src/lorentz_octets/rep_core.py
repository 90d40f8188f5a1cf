"""Finite-dimensional representations of the Lorentz group.

Labels are pairs of non-negative half-integers (l, l̇).  Half-integers are kept
exactly as twice their value; operator matrices are scipy sparse matrices in
the weight basis m = l, l-1, ..., -l (product basis (m, ṁ), m major).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

import numpy as np
import scipy.sparse as sp
from scipy.sparse import linalg as spla


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An exact half-integer, stored as ``twice`` the value."""

    twice: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice, (int, np.integer)) or isinstance(self.twice, bool):
            raise TypeError(f"twice must be an int, got {self.twice!r}")
        object.__setattr__(self, "twice", int(self.twice))

    @classmethod
    def of(cls, value: "HalfInt | int | Fraction | str") -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        frac = Fraction(value)
        if (2 * frac).denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(2 * frac))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: "HalfInt | int") -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __mul__(self, other: "HalfInt | int | Fraction") -> Fraction:
        if isinstance(other, HalfInt):
            return Fraction(self.twice * other.twice, 4)
        return self.value * other

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __lt__(self, other: "HalfInt | int | Fraction") -> bool:
        if isinstance(other, HalfInt):
            return self.twice < other.twice
        return self.value < other

    def __hash__(self) -> int:
        return hash(self.value)

    def __float__(self) -> float:
        return self.twice / 2

    def __str__(self) -> str:
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


@dataclass(frozen=True, order=True)
class RepLabel:
    """Irreducible representation label (l, l̇)."""

    l: HalfInt
    ldot: HalfInt

    def __post_init__(self) -> None:
        object.__setattr__(self, "l", HalfInt.of(self.l))
        object.__setattr__(self, "ldot", HalfInt.of(self.ldot))
        if self.l.twice < 0 or self.ldot.twice < 0:
            raise ValueError(f"weights must be non-negative: ({self.l}, {self.ldot})")

    @classmethod
    def from_twice(cls, k: int, r: int) -> "RepLabel":
        return cls(HalfInt(k), HalfInt(r))

    @property
    def k(self) -> int:
        return self.l.twice

    @property
    def r(self) -> int:
        return self.ldot.twice

    @property
    def degree(self) -> int:
        return (self.k + 1) * (self.r + 1)

    @property
    def spin(self) -> HalfInt:
        return abs(self.l - self.ldot)

    def swapped(self) -> "RepLabel":
        return RepLabel(self.ldot, self.l)

    def __str__(self) -> str:
        return f"({self.l},{self.ldot})"


@dataclass(frozen=True)
class GelfandNaimarkPair:
    l0: HalfInt
    l1: HalfInt

    def __post_init__(self) -> None:
        object.__setattr__(self, "l0", HalfInt.of(self.l0))
        object.__setattr__(self, "l1", HalfInt.of(self.l1))


@dataclass(frozen=True)
class OperatorSet:
    """Weight-basis operators X±, X3 (first factor) and Y±, Y3 (second factor).

    Matrices are CSR sparse.  For a single factor the Y set is empty (None).
    """

    xp: sp.csr_matrix
    xm: sp.csr_matrix
    x3: sp.csr_matrix
    yp: sp.csr_matrix | None = None
    ym: sp.csr_matrix | None = None
    y3: sp.csr_matrix | None = None

    @property
    def dim(self) -> int:
        return self.x3.shape[0]

    def x_components(self) -> tuple[sp.csr_matrix, sp.csr_matrix, sp.csr_matrix]:
        return _cartesian(self.xp, self.xm, self.x3)

    def y_components(self) -> tuple[sp.csr_matrix, sp.csr_matrix, sp.csr_matrix]:
        if self.y3 is None:
            raise ValueError("single-factor operator set has no Y operators")
        return _cartesian(self.yp, self.ym, self.y3)


def _cartesian(p, m, z):
    # X1 = (X+ + X-)/2, X2 = (X+ - X-)/(2i)
    return ((p + m) * 0.5, (p - m) * (-0.5j), z)


def degree(rep: RepLabel) -> int:
    return rep.degree


def spin(rep: RepLabel) -> HalfInt:
    return rep.spin


def spin_values(rep: RepLabel) -> list[HalfInt]:
    s = rep.spin.twice
    return [HalfInt(t) for t in range(-s, s + 1, 2)]


def from_gelfand_naimark(pair: GelfandNaimarkPair) -> RepLabel:
    # l = (l0 + l1 - 1)/2, l̇ = (l0 - l1 + 1)/2, doubled: 2l = l0 + l1 - 1
    k = (pair.l0.twice + pair.l1.twice - 2) // 2
    r = (pair.l0.twice - pair.l1.twice + 2) // 2
    if (pair.l0.twice + pair.l1.twice) % 2:
        raise ValueError(f"l0 + l1 must be an integer: {pair}")
    if k < 0 or r < 0:
        raise ValueError(f"pair {pair.l0},{pair.l1} gives negative weights")
    return RepLabel.from_twice(k, r)


def to_gelfand_naimark(rep: RepLabel) -> GelfandNaimarkPair:
    # l0 = l + l̇, l1 = l - l̇ + 1
    return GelfandNaimarkPair(rep.l + rep.ldot, rep.l - rep.ldot + 1)


def weights(l: HalfInt) -> list[HalfInt]:
    """Weights m = l, l-1, ..., -l."""
    l = HalfInt.of(l)
    return [HalfInt(t) for t in range(l.twice, -l.twice - 1, -2)]


def ladder_squared(l: HalfInt) -> list[int]:
    """Exact squares of the X₋ entries, (l+m)(l-m+1) for m = l .. -l+1."""
    l = HalfInt.of(l)
    out = []
    for m in weights(l)[:-1]:
        a = (l + m).value
        b = (l - m + 1).value
        out.append(int(a * b))
    return out


def ladder_matrices(l: HalfInt, scale: float = 1.0) -> OperatorSet:
    """Single-factor X₋, X₊, X₃ of dimension 2l+1; ``scale`` multiplies all three."""
    l = HalfInt.of(l)
    if l.twice < 0:
        raise ValueError("l must be non-negative")
    n = l.twice + 1
    sub = np.sqrt(np.array(ladder_squared(l), dtype=float)) * scale
    # X₋|m⟩ ∝ |m-1⟩: column j (weight m) to row j+1
    xm = sp.diags([sub], [-1], shape=(n, n), format="csr")
    xp = sp.csr_matrix(xm.T)
    x3 = sp.diags([np.array([t / 2 for t in range(l.twice, -l.twice - 1, -2)]) * scale], [0],
                  shape=(n, n), format="csr")
    return OperatorSet(xp=xp, xm=xm, x3=x3)


def product_operators(rep: RepLabel, scale: float = 1.0) -> OperatorSet:
    a = ladder_matrices(rep.l, scale)
    b = ladder_matrices(rep.ldot, scale)
    ia = sp.identity(a.dim, format="csr")
    ib = sp.identity(b.dim, format="csr")
    return OperatorSet(
        xp=sp.kron(a.xp, ib, format="csr"),
        xm=sp.kron(a.xm, ib, format="csr"),
        x3=sp.kron(a.x3, ib, format="csr"),
        yp=sp.kron(ia, b.xp, format="csr"),
        ym=sp.kron(ia, b.xm, format="csr"),
        y3=sp.kron(ia, b.x3, format="csr"),
    )


def sl2c_generators(rep: RepLabel, scale: float = 1.0):
    """Return (A, B) triples with A_l = -i(X_l + Y_l), B_l = Y_l - X_l."""
    ops = product_operators(rep, scale)
    xs = ops.x_components()
    ys = ops.y_components()
    A = tuple((x + y) * (-1j) for x, y in zip(xs, ys))
    B = tuple(y - x for x, y in zip(xs, ys))
    return A, B


def clebsch_gordan_spins(rep: RepLabel) -> list[HalfInt]:
    top = rep.k + rep.r
    bottom = abs(rep.k - rep.r)
    return [HalfInt(t) for t in range(top, bottom - 1, -2)]


def commutator(a, b):
    return a @ b - b @ a


class Banded:
    """Square matrix stored by diagonals: ``diags[k][i] = M[i, i+k]``.

    Products of the weight-basis operators stay banded, so commutators of
    large representations cost a few vectorized numpy calls.
    """

    __slots__ = ("n", "diags")

    def __init__(self, n: int, diags: dict[int, np.ndarray]):
        self.n = n
        self.diags = diags

    @classmethod
    def from_sparse(cls, m) -> "Banded":
        m = sp.coo_matrix(m)
        n = m.shape[0]
        out: dict[int, np.ndarray] = {}
        for k in np.unique(m.col - m.row):
            sel = (m.col - m.row) == k
            arr = np.zeros(n, dtype=complex)
            arr[m.row[sel]] = m.data[sel]
            out[int(k)] = arr
        return cls(n, out)

    def _combine(self, other: "Banded", sign: float) -> "Banded":
        out = {k: v.copy() for k, v in self.diags.items()}
        for k, v in other.diags.items():
            out[k] = out[k] + sign * v if k in out else sign * v
        return Banded(self.n, out)

    def __add__(self, other: "Banded") -> "Banded":
        return self._combine(other, 1.0)

    def __sub__(self, other: "Banded") -> "Banded":
        return self._combine(other, -1.0)

    def __mul__(self, c: complex) -> "Banded":
        return Banded(self.n, {k: v * c for k, v in self.diags.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "Banded") -> "Banded":
        n = self.n
        out: dict[int, np.ndarray] = {}
        for a, da in self.diags.items():
            for b, db in other.diags.items():
                k = a + b
                if abs(k) >= n:
                    continue
                # (AB)[i, i+a+b] = A[i, i+a] * B[i+a, i+a+b]
                shifted = np.zeros(n, dtype=complex)
                if a >= 0:
                    shifted[: n - a] = db[a:]
                else:
                    shifted[-a:] = db[: n + a]
                prod = da * shifted
                out[k] = out[k] + prod if k in out else prod
        return Banded(n, out)

    def norm(self) -> float:
        return float(np.sqrt(sum(np.vdot(v, v).real for v in self.diags.values())))

    def toarray(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=complex)
        idx = np.arange(self.n)
        for k, v in self.diags.items():
            rows = idx[max(0, -k): self.n - max(0, k)]
            m[rows, rows + k] = v[rows]
        return m


def _rel_err(lhs, rhs) -> float:
    if isinstance(lhs, Banded):
        return (lhs - rhs).norm() / max(1.0, rhs.norm())
    diff = lhs - rhs
    num = spla.norm(diff) if sp.issparse(diff) else np.linalg.norm(diff)
    den = spla.norm(rhs) if sp.issparse(rhs) else np.linalg.norm(rhs)
    return float(num / max(1.0, den))


def ladder_relation_errors(l: HalfInt) -> dict[str, float]:
    """Relative errors of [X3,X±] = ±X± and [X+,X-] = 2X3."""
    ops = ladder_matrices(l)
    xp, xm, x3 = (Banded.from_sparse(m) for m in (ops.xp, ops.xm, ops.x3))
    return {
        "[X3,X+]=X+": _rel_err(commutator(x3, xp), xp),
        "[X3,X-]=-X-": _rel_err(commutator(x3, xm), xm * -1),
        "[X+,X-]=2X3": _rel_err(commutator(xp, xm), x3 * 2),
    }


# (lhs, lhs, sign, rhs); sign 0 means the pair commutes
SL2C_RELATIONS: tuple[tuple[str, str, int, str], ...] = (
    ("A1", "A2", 1, "A3"), ("A2", "A3", 1, "A1"), ("A3", "A1", 1, "A2"),
    ("B1", "B2", -1, "A3"), ("B2", "B3", -1, "A1"), ("B3", "B1", -1, "A2"),
    ("A1", "B1", 0, "A1"), ("A2", "B2", 0, "A1"), ("A3", "B3", 0, "A1"),
    ("A1", "B2", 1, "B3"), ("A1", "B3", -1, "B2"),
    ("A2", "B3", 1, "B1"), ("A2", "B1", -1, "B3"),
    ("A3", "B1", 1, "B2"), ("A3", "B2", -1, "B1"),
)


def banded_operators(rep: RepLabel) -> dict[str, Banded]:
    """X1..X3 and Y1..Y3 of the product representation, built straight into banded form."""
    n_l, n_r = rep.k + 1, rep.r + 1
    n = n_l * n_r
    j, jd = np.divmod(np.arange(n), n_r)
    m = (rep.k - 2 * j) / 2
    md = (rep.r - 2 * jd) / 2

    def lower(dim: int, l2: int, pos: np.ndarray) -> np.ndarray:
        # X₋ entry landing on weight index ``pos`` from index pos-1
        src = (l2 - 2 * (pos - 1)) / 2
        lv = l2 / 2
        vals = np.sqrt(np.clip((lv + src) * (lv - src + 1), 0, None))
        return np.where(pos >= 1, vals, 0.0)

    x_down = lower(n_l, rep.k, j)  # M[i, i - n_r]
    y_down = lower(n_r, rep.r, jd)  # M[i, i - 1]

    def ladder(down: np.ndarray, step: int) -> tuple[Banded, Banded]:
        minus = np.zeros(n, dtype=complex)
        minus[:] = down
        plus = np.zeros(n, dtype=complex)
        # X₊ = X₋ᵀ: M⁺[i, i+step] = M⁻[i+step, i]
        plus[: n - step] = down[step:]
        return Banded(n, {step: plus}), Banded(n, {-step: minus})

    out: dict[str, Banded] = {}
    for name, down, step, diag in (("X", x_down, n_r, m), ("Y", y_down, 1, md)):
        if step >= n:
            zero = Banded(n, {})
            xp = xm = zero
        else:
            xp, xm = ladder(down, step)
        out[f"{name}1"] = (xp + xm) * 0.5
        out[f"{name}2"] = (xp - xm) * (-0.5j)
        out[f"{name}3"] = Banded(n, {0: diag.astype(complex)})
    return out


def sl2c_relation_errors(rep: RepLabel) -> dict[str, float]:
    """Relative errors of the fifteen A/B commutation relations."""
    ops = banded_operators(rep)
    gens = {}
    for i in "123":
        gens[f"A{i}"] = (ops[f"X{i}"] + ops[f"Y{i}"]) * (-1j)
        gens[f"B{i}"] = ops[f"Y{i}"] - ops[f"X{i}"]
    out = {}
    for a, b, sign, c in SL2C_RELATIONS:
        lhs = commutator(gens[a], gens[b])
        out[f"[{a},{b}]"] = _rel_err(lhs, gens[c] * sign)
    return out


def xy_commutator_norm(rep: RepLabel) -> float:
    """Largest Frobenius norm of [X_i, Y_j] over the nine pairs."""
    ops = banded_operators(rep)
    xs = [ops[f"X{i}"] for i in "123"]
    ys = [ops[f"Y{i}"] for i in "123"]
    return max(commutator(x, y).norm() for x in xs for y in ys)
