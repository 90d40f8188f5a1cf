"""Spin-mass formula, representation search and Gell-Mann–Okubo mass splitting.

Masses are in MeV.  In quadratic mode every GMO quantity (m₀, α, ..., residuals)
is in MeV² and the formula produces m².
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from lorentz_octets.rep_core import HalfInt, RepLabel
from lorentz_octets.rwe import ORBIT_TYPES, orbit_type

__all__ = [
    "ORBIT_TYPES", "QuantumNumbers", "GmoParams", "Observation", "FitResult", "RankDeficiencyError",
    "OctetMasses", "ClosureReport", "mgy_mass", "effective_ratio", "search_rep", "search_table",
    "orbit_type", "gmo_coefficients", "hypercharge_coefficients", "gmo_predict",
    "gmo_hypercharge_only", "m0_average", "multiplet_m0", "gmo_fit", "closure_relations",
    "octet_spread", "splitting_regime", "load_observations", "DEFAULT_REGIME_THRESHOLD",
]

# Threshold on max|m² - m₀²|/m₀² separating the linear and quadratic regimes.
# A convention: 0.5 sends the baryon octet (0.32) to the linear formula and the
# pseudoscalar octet (0.91) to the quadratic one.
DEFAULT_REGIME_THRESHOLD = 0.5


@dataclass(frozen=True)
class QuantumNumbers:
    B: int
    s: HalfInt
    P2: int
    Q: int
    Y: int
    I: HalfInt
    U: HalfInt

    def __post_init__(self) -> None:
        for name in ("s", "I", "U"):
            value = HalfInt.of(getattr(self, name))
            if value.twice < 0:
                raise ValueError(f"{name} must be non-negative")
            object.__setattr__(self, name, value)
        if self.P2 not in (1, -1):
            raise ValueError("P2 must be +1 or -1")


@dataclass(frozen=True)
class GmoParams:
    m0: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    alpha_p: float = 0.0
    beta_p: float = 0.0
    gamma_p: float = 0.0
    quadratic: bool = False

    def vector(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.alpha_p, self.beta_p, self.gamma_p)

    def theta_ratios(self) -> tuple[float | None, float | None, float | None]:
        """α′/α, β′/β, γ′/γ (None where the denominator vanishes); reported, never imposed."""
        return tuple(None if den == 0 else num / den for num, den in
                     ((self.alpha_p, self.alpha), (self.beta_p, self.beta), (self.gamma_p, self.gamma)))

    def as_dict(self) -> dict:
        return {"m0": self.m0, "alpha": self.alpha, "beta": self.beta, "gamma": self.gamma,
                "alpha_p": self.alpha_p, "beta_p": self.beta_p, "gamma_p": self.gamma_p,
                "quadratic": self.quadratic}


# -- spin-mass formula and search -----------------------------------------------------

def mgy_mass(rep: RepLabel, mu0: float) -> float:
    """μ⁰(l+½)(l̇+½)."""
    if not mu0 > 0:
        raise ValueError("mu0 must be positive")
    return float(mu0 * (rep.l.value + Fraction(1, 2)) * (rep.ldot.value + Fraction(1, 2)))


def effective_ratio(rep: RepLabel) -> Fraction:
    """(2l+1)(2l̇+1)/2, the mass ratio m/μ⁰ that the worked assignments use."""
    return Fraction(rep.degree, 2)


def _line_candidates(target: Fraction, spin: HalfInt, count: int) -> list[RepLabel]:
    out = []
    i = 0
    above = 0
    while above < count:
        rep = RepLabel.from_twice(spin.twice + i, i)
        out.append(rep)
        if effective_ratio(rep) > target:
            above += 1
        i += 1
    return out


def _search_key(target: Fraction):
    return lambda rep: (abs(effective_ratio(rep) - target), rep.degree)


def search_rep(target_ratio: float, spin: HalfInt | int, count: int = 1) -> list[RepLabel]:
    """The ``count`` labels (s + i/2, i/2) closest to ``target_ratio`` by effective ratio.

    Ties go to the smaller degree.
    """
    if not target_ratio > 0:
        raise ValueError("target_ratio must be positive")
    if count < 1:
        raise ValueError("count must be at least 1")
    spin = HalfInt.of(spin)
    if spin.twice < 0:
        raise ValueError("spin must be non-negative")
    target = Fraction(target_ratio)
    cands = sorted(_line_candidates(target, spin, count), key=_search_key(target))
    return cands[:count]


def search_table(target_ratio: float, spin: HalfInt | int, count: int, mu0: float) -> list[dict]:
    """Ranked search results with the effective ratio and the literal formula side by side."""
    out = []
    for rank, rep in enumerate(search_rep(target_ratio, spin, count), start=1):
        ratio = effective_ratio(rep)
        out.append({
            "rank": rank, "l": str(rep.l), "ldot": str(rep.ldot), "degree": rep.degree,
            "effective_ratio": float(ratio), "distance": float(abs(ratio - Fraction(target_ratio))),
            "effective_mass_mev": float(ratio) * mu0, "mgy_mass_mev": mgy_mass(rep, mu0),
        })
    return out


# -- Gell-Mann–Okubo ------------------------------------------------------------------

def hypercharge_coefficients(qn: QuantumNumbers) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of (α, β, γ): 1, Y, I(I+1) - Y²/4."""
    I = qn.I.value
    return Fraction(1), Fraction(qn.Y), I * (I + 1) - Fraction(qn.Y * qn.Y, 4)


def gmo_coefficients(qn: QuantumNumbers) -> tuple[Fraction, ...]:
    """Coefficients of (α, β, γ, α′, β′, γ′) as exact rationals."""
    U = qn.U.value
    return hypercharge_coefficients(qn) + (Fraction(1), Fraction(-qn.Q), U * (U + 1) - Fraction(qn.Q * qn.Q, 4))


def _finish(value, quadratic: bool):
    if not quadratic:
        return value
    if value < 0:
        raise ValueError(f"quadratic formula gives m² = {value} < 0")
    return math.sqrt(value)


def gmo_predict(params: GmoParams, qn: QuantumNumbers):
    """m, or √(m²) in quadratic mode."""
    value = params.m0 + sum(c * p for c, p in zip(gmo_coefficients(qn), params.vector()))
    return _finish(value, params.quadratic)


def gmo_hypercharge_only(params: GmoParams, qn: QuantumNumbers):
    value = params.m0 + sum(c * p for c, p in zip(hypercharge_coefficients(qn), params.vector()[:3]))
    return _finish(value, params.quadratic)


def m0_average(masses: Sequence[float], quadratic: bool = False,
               weights: Sequence[int] | None = None) -> float:
    """Weighted mean of the masses, or of their squares (giving m₀²) in quadratic mode."""
    if len(masses) == 0:
        raise ValueError("no masses given")
    weights = [1] * len(masses) if weights is None else list(weights)
    if len(weights) != len(masses):
        raise ValueError("weights and masses differ in length")
    total = sum(weights)
    if total <= 0:
        raise ValueError("weights must sum to a positive number")
    vals = [m * m if quadratic else m for m in masses]
    return sum(w * v for w, v in zip(weights, vals)) / total


@dataclass(frozen=True)
class Observation:
    name: str
    qn: QuantumNumbers
    mass: float


def _as_observations(observations) -> list[Observation]:
    out = []
    for i, obs in enumerate(observations):
        if isinstance(obs, Observation):
            out.append(obs)
        else:
            qn, mass = obs
            out.append(Observation(f"obs{i}", qn, float(mass)))
    return out


def multiplet_m0(observations, quadratic: bool = False) -> float:
    """m₀ (or m₀²): the mean over (I, Y) multiplets of each multiplet's mean mass."""
    groups: dict[tuple[int, int], list[float]] = {}
    for obs in _as_observations(observations):
        groups.setdefault((obs.qn.I.twice, obs.qn.Y), []).append(obs.mass)
    means = [m0_average(v, quadratic) for _, v in sorted(groups.items())]
    return sum(means) / len(means)


class RankDeficiencyError(ValueError):
    """The design matrix does not determine the parameters; ``null_space`` spans the ambiguity."""

    def __init__(self, columns: Sequence[str], null_space: list[dict[str, float]]):
        self.columns = tuple(columns)
        self.null_space = null_space
        desc = "; ".join(" + ".join(f"{v:.6g}*{k}" for k, v in vec.items()) for vec in null_space)
        super().__init__(f"rank-deficient fit over columns {list(columns)}; null space: {desc}")


# Column name -> coefficient index in gmo_coefficients.  α and α′ both multiply 1,
# so they are fitted as one offset, reported as alpha (with alpha_p = 0).
FIT_COLUMNS = {"alpha+alpha_p": 0, "beta": 1, "gamma": 2, "beta_p": 4, "gamma_p": 5}
CONSTRAINTS = frozenset({"beta=0", "hypercharge_only"})


@dataclass
class FitResult:
    params: GmoParams
    columns: tuple[str, ...]
    design: np.ndarray
    target: np.ndarray
    residuals: dict[str, float]
    rms: float
    relations: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        params = self.params.as_dict()
        params["alpha+alpha_p"] = self.params.alpha + self.params.alpha_p
        return {"params": params, "residuals": dict(self.residuals), "rms": self.rms,
                "relations": dict(self.relations)}


def design_matrix(observations, constraints: Iterable[str] = ()) -> tuple[tuple[str, ...], list[list[Fraction]]]:
    """Exact coefficient rows for the free columns after ``constraints``."""
    constraints = frozenset(constraints)
    unknown = constraints - CONSTRAINTS
    if unknown:
        raise ValueError(f"unknown constraints {sorted(unknown)}; allowed {sorted(CONSTRAINTS)}")
    cols = [c for c in FIT_COLUMNS
            if not (c == "beta" and "beta=0" in constraints)
            and not (c in ("beta_p", "gamma_p") and "hypercharge_only" in constraints)]
    rows = []
    for obs in _as_observations(observations):
        coeffs = gmo_coefficients(obs.qn)
        rows.append([coeffs[FIT_COLUMNS[c]] for c in cols])
    return tuple(cols), rows


def gmo_fit(observations, quadratic: bool = False, m0: float | None = None,
            constraints: Iterable[str] = (), rank_tol: float = 1e-10) -> FitResult:
    """Least-squares GMO fit with m₀ held fixed (default: multiplet_m0 of the data)."""
    obs = _as_observations(observations)
    cols, rows = design_matrix(obs, constraints)
    if len(obs) < len(cols):
        raise ValueError(f"{len(obs)} observations cannot determine {len(cols)} parameters")
    if m0 is None:
        m0 = multiplet_m0(obs, quadratic)
    A = np.array([[float(x) for x in row] for row in rows])
    b = np.array([(o.mass ** 2 if quadratic else o.mass) - m0 for o in obs])
    _, sing, vt = np.linalg.svd(A)
    rank = int(np.sum(sing > rank_tol * sing[0])) if sing.size else 0
    if rank < len(cols):
        null = [dict(zip(cols, (float(x) for x in v))) for v in vt[rank:]]
        raise RankDeficiencyError(cols, null)
    x, *_ = np.linalg.lstsq(A, b, rcond=None)
    values = dict(zip(cols, (float(v) for v in x)))
    params = GmoParams(m0=float(m0), alpha=values.get("alpha+alpha_p", 0.0), beta=values.get("beta", 0.0),
                       gamma=values.get("gamma", 0.0), beta_p=values.get("beta_p", 0.0),
                       gamma_p=values.get("gamma_p", 0.0), quadratic=quadratic)
    res = b - A @ x
    residuals = {o.name: float(r) for o, r in zip(obs, res)}
    rms = float(np.sqrt(np.mean(res ** 2)))
    return FitResult(params=params, columns=cols, design=A, target=b, residuals=residuals, rms=rms)


# -- closure relations and regime --------------------------------------------------------

@dataclass(frozen=True)
class OctetMasses:
    """Multiplet masses: the two hypercharge ±1 doublets, the isotriplet and the isosinglet."""

    doublet_minus: float
    doublet_plus: float
    triplet: float
    singlet: float
    quadratic: bool


@dataclass(frozen=True)
class ClosureReport:
    lhs: float
    rhs: float
    abs_diff: float
    rel_to_lhs: float
    rel_to_m0: float
    m0: float
    quadratic: bool

    def as_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "abs_diff": self.abs_diff,
                "rel_to_lhs": self.rel_to_lhs, "rel_to_m0": self.rel_to_m0, "m0": self.m0,
                "quadratic": self.quadratic}


def closure_relations(octet_masses: OctetMasses) -> ClosureReport:
    """Both sides of the GMO closure relation.

    Linear: m_a + m_b = ½(3m_singlet + m_triplet).
    Quadratic: 4m_K² = 3m_singlet² + m_triplet², written with m_K² = ½(m_a² + m_b²).
    ``m0`` is the multiplet average (m₀² in quadratic mode).
    """
    om = octet_masses
    if om.quadratic:
        a, b, t, s = (x * x for x in (om.doublet_minus, om.doublet_plus, om.triplet, om.singlet))
        lhs, rhs = 2 * (a + b), 3 * s + t
    else:
        a, b, t, s = om.doublet_minus, om.doublet_plus, om.triplet, om.singlet
        lhs, rhs = a + b, (3 * s + t) / 2
    m0 = (a + b + t + s) / 4
    diff = abs(lhs - rhs)
    return ClosureReport(lhs=lhs, rhs=rhs, abs_diff=diff, rel_to_lhs=diff / abs(lhs) if lhs else 0.0,
                         rel_to_m0=diff / m0 if m0 else 0.0, m0=m0, quadratic=om.quadratic)


def octet_spread(octet_masses: OctetMasses) -> tuple[float, float]:
    """(δm², m₀²) with m₀² the multiplet mean of m² and δm² = max|m² - m₀²|."""
    om = octet_masses
    sq = [x * x for x in (om.doublet_minus, om.doublet_plus, om.triplet, om.singlet)]
    m0_sq = sum(sq) / 4
    return max(abs(x - m0_sq) for x in sq), m0_sq


def splitting_regime(delta_m2: float, m0_sq: float, threshold: float = DEFAULT_REGIME_THRESHOLD) -> str:
    if not m0_sq > 0:
        raise ValueError("m0_sq must be positive")
    return "linear" if abs(delta_m2) / m0_sq < threshold else "quadratic"


# -- CSV ----------------------------------------------------------------------------

CSV_HEADER = ("name", "Q", "Y", "I2", "U2", "B", "spin2", "parity", "mass_mev")


def load_observations(path: str | Path) -> list[Observation]:
    """Read ``name,Q,Y,I2,U2,B,spin2,parity,mass_mev`` rows (I2, U2, spin2 doubled; parity = P²)."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = set(CSV_HEADER) - set(reader.fieldnames or ())
        if missing:
            raise ValueError(f"{path}: missing columns {sorted(missing)}")
        out = []
        for lineno, row in enumerate(reader, start=2):
            try:
                qn = QuantumNumbers(B=int(row["B"]), s=HalfInt(int(row["spin2"])), P2=int(row["parity"]),
                                    Q=int(row["Q"]), Y=int(row["Y"]), I=HalfInt(int(row["I2"])),
                                    U=HalfInt(int(row["U2"])))
                out.append(Observation(row["name"], qn, float(row["mass_mev"])))
            except (TypeError, ValueError) as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
    return out


def observations_to_rows(observations: Sequence[Observation]) -> list[dict]:
    return [{"name": o.name, "Q": o.qn.Q, "Y": o.qn.Y, "I2": o.qn.I.twice, "U2": o.qn.U.twice,
             "B": o.qn.B, "spin2": o.qn.s.twice, "parity": o.qn.P2, "mass_mev": o.mass}
            for o in observations]


def masses_by_name(observations: Sequence[Observation]) -> Mapping[str, float]:
    return {o.name: o.mass for o in observations}
