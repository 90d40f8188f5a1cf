"""Plane-wave eigenvalue analysis for relativistic wave equations.

Covers Γ(p) assembly, the ±λ spectral pairing, determinant constancy on
mass hyperboloids, the bivector metric, Dirac L-matrices and the block
structure of the generalized Λ₃ matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import scipy.sparse as sp
from scipy.optimize import brentq, minimize_scalar

from lorentz_octets.rep_core import HalfInt, RepLabel, ladder_matrices, weights

MINKOWSKI = np.diag([-1, -1, -1, 1])
BIVECTOR_ORDER: tuple[tuple[int, int], ...] = ((2, 3), (1, 0), (2, 0), (3, 0), (3, 1), (1, 2))
DEFAULT_DEGREE_CAP = 5200


@dataclass(frozen=True)
class GammaSet:
    g0: np.ndarray
    g1: np.ndarray
    g2: np.ndarray
    g3: np.ndarray

    def __post_init__(self) -> None:
        shapes = {m.shape for m in (self.g0, self.g1, self.g2, self.g3)}
        if len(shapes) != 1 or len(next(iter(shapes))) != 2 or next(iter(shapes))[0] != next(iter(shapes))[1]:
            raise ValueError(f"gamma matrices must be equal square shapes, got {shapes}")

    @property
    def dim(self) -> int:
        return self.g0.shape[0]


def dirac_gamma_set() -> GammaSet:
    """Standard Dirac representation: γ⁰ = diag(1,1,-1,-1), γᵏ = [[0,σₖ],[-σₖ,0]]."""
    sig = _pauli()
    z = np.zeros((2, 2))
    g0 = np.diag([1, 1, -1, -1]).astype(complex)
    gk = [np.block([[z, s], [-s, z]]).astype(complex) for s in sig]
    return GammaSet(g0, *gk)


def _pauli() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return (np.array([[0, 1], [1, 0]], dtype=complex),
            np.array([[0, -1j], [1j, 0]], dtype=complex),
            np.array([[1, 0], [0, -1]], dtype=complex))


def gamma_of_p(g: GammaSet, p) -> np.ndarray:
    p0, p1, p2, p3 = (float(x) for x in p)
    return g.g0 * p0 - g.g1 * p1 - g.g2 * p2 - g.g3 * p3


def s_squared(p) -> float:
    p0, p1, p2, p3 = (float(x) for x in p)
    return p0 * p0 - p1 * p1 - p2 * p2 - p3 * p3


@dataclass
class PairingReport:
    paired: bool
    eigenvalues: np.ndarray
    unmatched: list[complex] = field(default_factory=list)


def _eigenvalues(g0) -> np.ndarray:
    if sp.issparse(g0):
        g0 = g0.toarray()
    g0 = np.asarray(g0)
    if g0.ndim != 2 or g0.shape[0] != g0.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(g0)):
        raise ValueError("matrix has non-finite entries")
    if np.count_nonzero(g0 - np.diag(np.diagonal(g0))) == 0:
        return np.diagonal(g0).astype(complex)
    return np.linalg.eigvals(g0)


def pm_pairing_check(g0, tol: float = 1e-9) -> PairingReport:
    """Check that nonzero eigenvalues come in (λ, -λ) pairs of equal multiplicity."""
    ev = _eigenvalues(g0)
    scale = max(1.0, float(np.max(np.abs(ev)))) if ev.size else 1.0
    nonzero = sorted((e for e in ev if abs(e) > tol * scale), key=lambda z: (z.real, z.imag))
    remaining = list(nonzero)
    unmatched = []
    while remaining:
        e = remaining.pop(0)
        j = next((i for i, f in enumerate(remaining) if abs(f + e) <= tol * scale), None)
        if j is None:
            unmatched.append(e)
        else:
            remaining.pop(j)
    return PairingReport(paired=not unmatched, eigenvalues=ev, unmatched=unmatched)


@dataclass
class MassSpectrum:
    masses: list[float]
    complex_eigenvalues: list[complex]


def mass_spectrum_from_gamma0(g0, mu0: float, tol: float = 1e-9) -> MassSpectrum:
    """m_i = μ⁰λ_i for the distinct real eigenvalues λ_i > 0, descending."""
    ev = _eigenvalues(g0)
    scale = max(1.0, float(np.max(np.abs(ev)))) if ev.size else 1.0
    real_pos, cplx = [], []
    for e in ev:
        if abs(e.imag) > tol * scale:
            cplx.append(complex(e))
        elif e.real > tol * scale:
            real_pos.append(float(e.real))
    distinct: list[float] = []
    for lam in sorted(real_pos, reverse=True):
        if not distinct or abs(distinct[-1] - lam) > tol * scale:
            distinct.append(lam)
    return MassSpectrum([mu0 * lam for lam in distinct], cplx)


@dataclass
class DetReport:
    values: list[float]
    s2: list[float]
    groups: list[list[int]]
    constant_on_groups: bool
    roots_s2: list[float]


def _det(g: GammaSet, p, m: float) -> complex:
    return complex(np.linalg.det(gamma_of_p(g, p) + m * np.eye(g.dim)))


def _p_for_s2(s2: float) -> tuple[float, float, float, float]:
    return (np.sqrt(s2), 0.0, 0.0, 0.0) if s2 >= 0 else (0.0, np.sqrt(-s2), 0.0, 0.0)


def det_factorization_check(g: GammaSet, m: float, samples, tol: float = 1e-7,
                            scan_points: int = 400) -> DetReport:
    """Evaluate det(Γ(p)+mE) on samples, group by s²(p), and locate the roots in s².

    Roots are bracketed on a grid over the sampled s² range (widened to cover
    m²).  Sign changes are refined by Brent's method; even-order roots (no
    sign change) are refined by minimizing |D| and accepted when it vanishes
    within ``tol``.
    """
    samples = [tuple(float(x) for x in p) for p in samples]
    if not samples:
        raise ValueError("samples must be non-empty")
    vals = [_det(g, p, m) for p in samples]
    s2 = [s_squared(p) for p in samples]
    groups: list[list[int]] = []
    for i, v in enumerate(s2):
        for grp in groups:
            if abs(s2[grp[0]] - v) <= tol * max(1.0, abs(v)):
                grp.append(i)
                break
        else:
            groups.append([i])
    dscale = max(1.0, max(abs(v) for v in vals))
    constant = all(abs(vals[i] - vals[grp[0]]) <= tol * dscale for grp in groups for i in grp)

    def D(x: float) -> float:
        return _det(g, _p_for_s2(x), m).real

    lo = min(min(s2), -abs(m) ** 2 - 1.0)
    hi = max(max(s2), 2 * m * m + 1.0)
    grid = np.linspace(lo, hi, scan_points)
    dv = np.array([D(x) for x in grid])
    yscale = max(1.0, float(np.max(np.abs(dv))))
    roots: list[float] = []
    for i in range(len(grid) - 1):
        a, b = grid[i], grid[i + 1]
        if dv[i] == 0.0:
            roots.append(float(a))
        elif dv[i] * dv[i + 1] < 0:
            roots.append(float(brentq(D, a, b, xtol=tol * max(1.0, abs(a)))))
        elif 0 < i and abs(dv[i]) <= abs(dv[i - 1]) and abs(dv[i]) <= abs(dv[i + 1]):
            res = minimize_scalar(lambda x: abs(D(x)), bounds=(grid[i - 1], b), method="bounded",
                                  options={"xatol": tol * max(1.0, abs(a)) * 1e-2})
            if abs(D(res.x)) <= tol * yscale:
                roots.append(float(res.x))
    merged: list[float] = []
    for r in sorted(roots):
        if not merged or abs(r - merged[-1]) > 1e3 * tol * max(1.0, abs(r)):
            merged.append(r)
    return DetReport(values=[v.real for v in vals], s2=s2, groups=groups,
                     constant_on_groups=constant, roots_s2=merged)


def bivector_metric(g=MINKOWSKI) -> np.ndarray:
    g = np.asarray(g)
    if g.shape != (4, 4) or not np.array_equal(g, g.T):
        raise ValueError("metric must be a symmetric 4×4 matrix")
    out = np.zeros((6, 6), dtype=g.dtype)
    for A, (al, be) in enumerate(BIVECTOR_ORDER):
        for B, (ga, de) in enumerate(BIVECTOR_ORDER):
            out[A, B] = g[al, ga] * g[be, de] - g[al, de] * g[be, ga]
    return out


def dirac_l_matrices(c: float = 2.0) -> tuple[tuple[np.ndarray, ...], tuple[np.ndarray, ...]]:
    """(L₁, L₂, L₃) = (c/2)·σ and the complex-conjugate triple."""
    L = tuple((c / 2) * s for s in _pauli())
    return L, tuple(np.conj(m) for m in L)


@dataclass(frozen=True)
class Lambda3Blocks:
    """Block-diagonal Λ₃: block for ṁ is ṁ·diag(l, l-1, ..., -l); ṁ descends."""

    rep: RepLabel
    mdots: tuple[HalfInt, ...]
    blocks: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block(self, index: int) -> tuple[Fraction, ...]:
        """1-based block access."""
        return self.blocks[index - 1]

    def diagonal(self) -> list[Fraction]:
        return [x for b in self.blocks for x in b]

    def as_matrix(self, dtype=float):
        return sp.diags([np.array([float(x) for x in self.diagonal()], dtype=dtype)], [0], format="csr")

    def zero_blocks(self) -> list[int]:
        return [i + 1 for i, b in enumerate(self.blocks) if all(x == 0 for x in b)]


def lambda3_generalized(l: HalfInt, ldot: HalfInt) -> Lambda3Blocks:
    rep = RepLabel(l, ldot)
    ms = weights(rep.l)
    mdots = tuple(weights(rep.ldot))
    blocks = tuple(tuple(md * m for m in ms) for md in mdots)
    return Lambda3Blocks(rep=rep, mdots=mdots, blocks=blocks)


def angular_momentum(l: HalfInt, c: float = 1.0) -> tuple[sp.csr_matrix, ...]:
    """Hermitian (L₁, L₂, L₃) for weight l, scaled by c (c=2 gives Pauli at l=1/2)."""
    ops = ladder_matrices(l, scale=c)
    return ops.x_components()


def bivector_system_matrices(rep: RepLabel, c: float = 1.0,
                             cap: int = DEFAULT_DEGREE_CAP) -> tuple[sp.csr_matrix, ...]:
    """Difference-form Λ_j = L^l_j ⊗ 1 - 1 ⊗ L^l̇_j, j = 1..3."""
    if rep.degree > cap:
        raise ValueError(f"degree {rep.degree} exceeds the matrix cap {cap}")
    La = angular_momentum(rep.l, c)
    Lb = angular_momentum(rep.ldot, c)
    ia = sp.identity(rep.k + 1, format="csr")
    ib = sp.identity(rep.r + 1, format="csr")
    return tuple(sp.kron(a, ib, format="csr") - sp.kron(ia, b, format="csr") for a, b in zip(La, Lb))


ORBIT_TYPES = ("O+_m", "O-_m", "O_im", "O+_0", "O-_0", "O0_0")


def orbit_type(p, m: float | None = None, tol: float = 1e-9) -> str:
    """Six-way orbit classification of a momentum 4-vector.

    With ``m`` given, the vector must lie on s² = m², s² = -m² or the cone;
    otherwise a ValueError names the mismatch.
    """
    vec = np.asarray([float(x) for x in p])
    if vec.shape != (4,) or not np.all(np.isfinite(vec)):
        raise ValueError("p must be a finite 4-vector")
    scale = max(1.0, float(np.max(np.abs(vec))) ** 2)
    if np.all(np.abs(vec) <= tol):
        return "O0_0"
    s2 = s_squared(vec)
    if abs(s2) <= tol * scale:
        kind = "O+_0" if vec[0] > 0 else "O-_0"
    elif s2 > 0:
        kind = "O+_m" if vec[0] > 0 else "O-_m"
    else:
        kind = "O_im"
    if m is not None and kind in ("O+_m", "O-_m", "O_im"):
        target = m * m if kind != "O_im" else -m * m
        if abs(s2 - target) > tol * scale:
            raise ValueError(f"s²(p) = {s2} is not on the orbit for m = {m}")
    return kind
