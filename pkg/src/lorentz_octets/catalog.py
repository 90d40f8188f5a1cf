"""Built-in state vectors of the octets F₁/₂, B₀, B₁ and a consistency validator.

Every value below is the printed one, anomalies included.  ``validate`` reports
where the printed data break the structural invariants and ``corrected``
derives a consistent companion for the dimension anomalies.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from lorentz_octets.clifford_cpt import (ChargeClass, CliffordSignature, DivisionRing, charge_class, classify,
                                         parity_square)
from lorentz_octets.mass_model import Observation, OctetMasses, QuantumNumbers, gmo_coefficients, \
    hypercharge_coefficients
from lorentz_octets.rep_core import HalfInt, RepLabel

REP_KINDS = ("complex", "real", "complex-conjugate")
MULTIPLET_SIZES = {"Phi3": 3, "Phi2": 2, "Phi2*": 2, "Phi0": 1}
OCTET_NAMES = ("F12", "B0", "B1")
H = Fraction(1, 2)


@dataclass(frozen=True)
class ParticleState:
    name: str
    symbol: str
    rep: RepLabel
    rep_kind: str
    sym_space: tuple[int, int]
    algebra: int | CliffordSignature
    spinspace_log2: int
    spinspace_ring: DivisionRing
    parity2: int
    qn: QuantumNumbers
    truly_neutral: bool = False
    algebra_hat: bool = False
    spinspace_hat: bool = False
    real_form: CliffordSignature | None = None
    quark_string: str | None = None
    mass_exp: float | None = None
    # printed charge-splitting row: coefficients of (α, β, γ, α′, β′, γ′); None = term omitted
    printed_gmo: tuple[Fraction | None, ...] | None = None
    prose_rep: RepLabel | None = None
    prose_signature: CliffordSignature | None = None

    def __post_init__(self) -> None:
        if self.rep_kind not in REP_KINDS:
            raise ValueError(f"rep_kind must be one of {REP_KINDS}")
        if self.rep_kind == "real" and not isinstance(self.algebra, CliffordSignature):
            raise ValueError("real states carry a real Clifford signature")
        if self.rep_kind != "real" and isinstance(self.algebra, CliffordSignature):
            raise ValueError("complex states carry a complex algebra dimension")

    @property
    def is_complex(self) -> bool:
        return self.rep_kind != "real"

    @property
    def charge_label(self) -> str:
        if self.qn.Q != 0:
            return f"{self.qn.Q:+d}"
        return "0̄" if self.truly_neutral else "0"

    def algebra_str(self) -> str:
        hat = "^" if self.algebra_hat else ""
        if self.is_complex:
            star = "*" if self.rep_kind == "complex-conjugate" else ""
            return f"{star}C_{self.algebra}"
        return f"{hat}Cl_{{{self.algebra.p},{self.algebra.q}}}"

    def as_dict(self) -> dict:
        alg = self.algebra
        return {
            "name": self.name, "symbol": self.symbol, "l": str(self.rep.l), "ldot": str(self.rep.ldot),
            "degree": self.rep.degree, "rep_kind": self.rep_kind, "sym_space": list(self.sym_space),
            "algebra": alg if isinstance(alg, int) else [alg.p, alg.q], "algebra_hat": self.algebra_hat,
            "real_form": None if self.real_form is None else [self.real_form.p, self.real_form.q],
            "spinspace_log2": self.spinspace_log2, "spinspace_ring": self.spinspace_ring.value,
            "spinspace_hat": self.spinspace_hat, "parity2": self.parity2,
            "B": self.qn.B, "spin": str(self.qn.s), "Q": self.qn.Q, "Y": self.qn.Y, "I": str(self.qn.I),
            "U": str(self.qn.U), "charge_label": self.charge_label, "quark_string": self.quark_string,
            "mass_exp": self.mass_exp,
            "printed_gmo": None if self.printed_gmo is None else
            [None if c is None else str(c) for c in self.printed_gmo],
            "prose_rep": None if self.prose_rep is None else [str(self.prose_rep.l), str(self.prose_rep.ldot)],
            "prose_signature": None if self.prose_signature is None else
            [self.prose_signature.p, self.prose_signature.q],
        }


@dataclass(frozen=True)
class ChargeMultiplet:
    label: str
    name: str
    members: tuple[ParticleState, ...]
    mass_exp: float | None = None
    # printed hypercharge-splitting row: coefficients of (α, β, γ)
    printed_gmo: tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        if self.label not in MULTIPLET_SIZES:
            raise ValueError(f"unknown multiplet label {self.label!r}")
        if len(self.members) != MULTIPLET_SIZES[self.label]:
            raise ValueError(f"{self.label} needs {MULTIPLET_SIZES[self.label]} members")


@dataclass(frozen=True)
class Octet:
    name: str
    multiplets: tuple[ChargeMultiplet, ...]
    baryon_number: int
    spin: HalfInt
    parity2: int
    quadratic: bool

    def __post_init__(self) -> None:
        if [m.label for m in self.multiplets] != list(MULTIPLET_SIZES):
            raise ValueError("an octet holds Phi3, Phi2, Phi2*, Phi0 in that order")

    @property
    def states(self) -> list[ParticleState]:
        return [s for m in self.multiplets for s in m.members]

    def state(self, name: str) -> ParticleState:
        for s in self.states:
            if s.name == name:
                return s
        raise KeyError(name)

    def multiplet(self, name: str) -> ChargeMultiplet:
        for m in self.multiplets:
            if m.name == name:
                return m
        raise KeyError(name)

    def observations(self) -> list[Observation]:
        return [Observation(s.name, s.qn, s.mass_exp) for s in self.states]

    def hypercharge_masses(self) -> OctetMasses:
        """The printed multiplet masses in the closure-relation layout."""
        by_y = {}
        for m in self.multiplets:
            rep = m.members[0].qn
            by_y.setdefault((rep.Y, rep.I.twice), m.mass_exp)
        doublets = sorted((y, mass) for (y, i2), mass in by_y.items() if i2 == 1)
        triplet = next(mass for (y, i2), mass in by_y.items() if i2 == 2)
        singlet = next(mass for (y, i2), mass in by_y.items() if i2 == 0)
        return OctetMasses(doublet_minus=doublets[0][1], doublet_plus=doublets[1][1], triplet=triplet,
                           singlet=singlet, quadratic=self.quadratic)

    def as_dict(self) -> dict:
        return {
            "name": self.name, "baryon_number": self.baryon_number, "spin": str(self.spin),
            "parity2": self.parity2, "quadratic": self.quadratic,
            "multiplets": [{"label": m.label, "name": m.name, "mass_exp": m.mass_exp,
                            "printed_gmo": None if m.printed_gmo is None else [str(c) for c in m.printed_gmo],
                            "members": [s.as_dict() for s in m.members]} for m in self.multiplets],
        }


# -- data ------------------------------------------------------------------------------

def _rep(l, ldot) -> RepLabel:
    return RepLabel(HalfInt.of(l), HalfInt.of(ldot))


def _sig(p: int, q: int) -> CliffordSignature:
    return CliffordSignature(p, q)


def _row(*coeffs) -> tuple[Fraction | None, ...]:
    return tuple(None if c is None else Fraction(c) for c in coeffs)


def _qn(B, s2, P2, Q, Y, I2, U2) -> QuantumNumbers:
    return QuantumNumbers(B=B, s=HalfInt(s2), P2=P2, Q=Q, Y=Y, I=HalfInt(I2), U=HalfInt(U2))


def _f12() -> Octet:
    B, s2, P2 = 1, 1, 1
    rep_sigma, rep_n, rep_xi, rep_lambda = _rep(H * 67, 33), _rep(H * 59, 29), _rep(H * 71, 35), _rep(H * 65, 32)
    sigma = (
        ParticleState("Sigma+", "Σ⁺", rep_sigma, "complex", (67, 66), 266, 133, DivisionRing.C, P2,
                      _qn(B, s2, P2, 1, 0, 2, 1), real_form=_sig(135, 131), quark_string="uus", mass_exp=1189.4,
                      printed_gmo=_row(1, 0, 2, 1, -1, H)),
        ParticleState("Sigma0", "Σ⁰", rep_sigma, "real", (67, 66), _sig(135, 131), 133, DivisionRing.H, P2,
                      _qn(B, s2, P2, 0, 0, 2, 2), quark_string="uds", mass_exp=1192.4,
                      printed_gmo=_row(1, 0, 2, 1, 0, 2)),
        ParticleState("Sigma-", "Σ⁻", rep_sigma, "complex-conjugate", (67, 66), 266, 133, DivisionRing.C, P2,
                      _qn(B, s2, P2, -1, 0, 2, 1), spinspace_hat=True, real_form=_sig(135, 131),
                      quark_string="dds", mass_exp=1197.1, printed_gmo=_row(1, 0, 2, 1, 1, H)),
    )
    nucleon = (
        # the printed γ′ coefficient 2 matches no half-integer U; U = 1/2 is the U-spin of p
        ParticleState("P", "p", rep_n, "complex", (59, 58), 234, 117, DivisionRing.C, P2,
                      _qn(B, s2, P2, 1, 1, 1, 1), real_form=_sig(119, 115), quark_string="uud", mass_exp=938.3,
                      printed_gmo=_row(1, 1, H, 1, -1, 2)),
        ParticleState("N", "n", rep_n, "real", (59, 58), _sig(119, 115), 117, DivisionRing.H, P2,
                      _qn(B, s2, P2, 0, 1, 1, 2), quark_string="ddu", mass_exp=939.5,
                      printed_gmo=_row(1, 1, H, 1, 0, 2)),
    )
    xi = (
        ParticleState("Xi-", "Ξ⁻", rep_xi, "complex", (71, 70), 282, 141, DivisionRing.C, P2,
                      _qn(B, s2, P2, -1, -1, 1, 1), real_form=_sig(143, 139), quark_string="ssd", mass_exp=1320.8,
                      printed_gmo=_row(1, -1, H, 1, 1, H), prose_rep=_rep(H * 75, 35)),
        ParticleState("Xi0", "Ξ⁰", rep_xi, "real", (71, 70), _sig(143, 139), 141, DivisionRing.H, P2,
                      _qn(B, s2, P2, 0, -1, 1, 2), quark_string="ssu", mass_exp=1314.3,
                      printed_gmo=_row(1, -1, H, 1, 0, 2), prose_rep=_rep(H * 75, 35),
                      prose_signature=_sig(133, 139)),
    )
    lam = (
        ParticleState("Lambda", "Λ", rep_lambda, "real", (65, 64), _sig(131, 127), 129, DivisionRing.H, P2,
                      _qn(B, s2, P2, 0, 0, 0, 0), quark_string="uds", mass_exp=1115.4,
                      printed_gmo=_row(1, 0, 0, 1, 0, 0)),
    )
    return Octet("F12", (
        ChargeMultiplet("Phi3", "Sigma", sigma, 1192, _row(1, 0, 2)),
        ChargeMultiplet("Phi2", "N", nucleon, 939, _row(1, 1, H)),
        ChargeMultiplet("Phi2*", "Xi", xi, 1318, _row(1, -1, H)),
        ChargeMultiplet("Phi0", "Lambda", lam, 1115, _row(1, 0, 0)),
    ), baryon_number=B, spin=HalfInt(s2), parity2=P2, quadratic=False)


def _b0() -> Octet:
    B, s2, P2 = 0, 0, -1
    rep_pi, rep_k, rep_eta = _rep(11, 11), _rep(H * 43, H * 43), _rep(H * 45, H * 45)
    pi = (
        ParticleState("pi+", "π⁺", rep_pi, "complex", (22, 22), 88, 44, DivisionRing.C, P2,
                      _qn(B, s2, P2, 1, 0, 2, 2), real_form=_sig(45, 43), quark_string="d̄u", mass_exp=139.6,
                      printed_gmo=_row(1, 0, 2, 1, -1, Fraction(7, 4))),
        ParticleState("pi0", "π⁰", rep_pi, "real", (22, 22), _sig(45, 43), 44, DivisionRing.R, P2,
                      _qn(B, s2, P2, 0, 0, 2, 2), truly_neutral=True, quark_string="d̄d ūu",
                      mass_exp=135.0, printed_gmo=_row(1, 0, 2, 1, 0, 2)),
        ParticleState("pi-", "π⁻", rep_pi, "complex-conjugate", (22, 22), 88, 44, DivisionRing.C, P2,
                      _qn(B, s2, P2, -1, 0, 2, 2), spinspace_hat=True, real_form=_sig(45, 43),
                      quark_string="ūd", mass_exp=139.6, printed_gmo=_row(1, 0, 2, 1, 1, Fraction(7, 4))),
    )
    # β is absent from the printed K rows of the charge table because β = 0 for mesons
    k1 = (
        ParticleState("K-", "K⁻", rep_k, "complex", (43, 43), 172, 86, DivisionRing.C, P2,
                      _qn(B, s2, P2, -1, -1, 1, 1), real_form=_sig(89, 83), quark_string="ūs",
                      mass_exp=493.8, printed_gmo=_row(1, None, H, 1, 1, H)),
        ParticleState("K0bar", "K̄⁰", rep_k, "real", (43, 43), _sig(89, 83), 86, DivisionRing.H, P2,
                      _qn(B, s2, P2, 0, -1, 1, 1), algebra_hat=True, spinspace_hat=True,
                      quark_string="d̄s", mass_exp=498.0, printed_gmo=_row(1, None, H, 1, 0, Fraction(3, 4))),
    )
    k2 = (
        ParticleState("K0", "K⁰", rep_k, "real", (43, 43), _sig(89, 83), 86, DivisionRing.H, P2,
                      _qn(B, s2, P2, 0, 1, 1, 1), quark_string="s̄d", mass_exp=498.0,
                      printed_gmo=_row(1, None, H, 1, 0, Fraction(3, 4))),
        ParticleState("K+", "K⁺", rep_k, "complex-conjugate", (43, 43), 172, 86, DivisionRing.C, P2,
                      _qn(B, s2, P2, 1, 1, 1, 1), spinspace_hat=True, real_form=_sig(89, 83),
                      quark_string="s̄u", mass_exp=493.8, printed_gmo=_row(1, None, H, 1, -1, H)),
    )
    eta = (
        ParticleState("eta", "η", rep_eta, "real", (45, 45), _sig(46, 44), 90, DivisionRing.R, P2,
                      _qn(B, s2, P2, 0, 0, 0, 0), truly_neutral=True, quark_string="s̄s", mass_exp=548.7,
                      printed_gmo=_row(1, 0, 0, 1, 0, 0)),
    )
    return Octet("B0", (
        ChargeMultiplet("Phi3", "pi", pi, 138, _row(1, 0, 2)),
        ChargeMultiplet("Phi2", "K1", k1, 496, _row(1, -1, H)),
        ChargeMultiplet("Phi2*", "K2", k2, 496, _row(1, 1, H)),
        ChargeMultiplet("Phi0", "eta", eta, 549, _row(1, 0, 0)),
    ), baryon_number=B, spin=HalfInt(s2), parity2=P2, quadratic=True)


def _b1() -> Octet:
    B, s2, P2 = 0, 2, -1
    rep_rho, rep_ks, rep_phi = _rep(H * 55, H * 53), _rep(H * 59, H * 57), _rep(28, 27)
    rho = (
        ParticleState("rho-", "ρ⁻", rep_rho, "complex", (55, 53), 216, 108, DivisionRing.C, P2,
                      _qn(B, s2, P2, -1, 0, 2, 2), real_form=_sig(109, 107), quark_string="ūd",
                      mass_exp=766.5, printed_gmo=_row(1, 0, 2, 1, 1, Fraction(7, 4))),
        ParticleState("rho0", "ρ⁰", rep_rho, "real", (55, 53), _sig(109, 107), 108, DivisionRing.R, P2,
                      _qn(B, s2, P2, 0, 0, 2, 2), truly_neutral=True, quark_string="d̄d ūu",
                      mass_exp=769.0, printed_gmo=_row(1, 0, 2, 1, 0, 2)),
        # printed with Sym_(55,53) although the label is (53/2, 55/2); the degree agrees
        ParticleState("rho+", "ρ⁺", rep_rho.swapped(), "complex-conjugate", (55, 53), 216, 108, DivisionRing.C,
                      P2, _qn(B, s2, P2, 1, 0, 2, 2), spinspace_hat=True, real_form=_sig(109, 107),
                      quark_string="d̄u", mass_exp=766.5, printed_gmo=_row(1, 0, 2, 1, -1, Fraction(7, 4))),
    )
    k1 = (
        ParticleState("K*-", "*K⁻", rep_ks, "complex", (59, 57), 232, 116, DivisionRing.C, P2,
                      _qn(B, s2, P2, -1, -1, 1, 1), real_form=_sig(119, 113), quark_string="ūs",
                      mass_exp=891.66, printed_gmo=_row(1, None, H, 1, 1, H)),
        ParticleState("K*0bar", "*K̄⁰", rep_ks.swapped(), "real", (57, 59), _sig(119, 113), 116, DivisionRing.H,
                      P2, _qn(B, s2, P2, 0, -1, 1, 1), algebra_hat=True, spinspace_hat=True,
                      quark_string="d̄s", mass_exp=895.81, printed_gmo=_row(1, None, H, 1, 0, Fraction(3, 4))),
    )
    k2 = (
        ParticleState("K*0", "*K⁰", rep_ks, "real", (59, 57), _sig(119, 113), 116, DivisionRing.H, P2,
                      _qn(B, s2, P2, 0, 1, 1, 1), quark_string="s̄d", mass_exp=895.81,
                      printed_gmo=_row(1, None, H, 1, 0, Fraction(3, 4))),
        ParticleState("K*+", "*K⁺", rep_ks.swapped(), "complex-conjugate", (57, 59), 232, 116, DivisionRing.C,
                      P2, _qn(B, s2, P2, 1, 1, 1, 1), spinspace_hat=True, real_form=_sig(119, 113),
                      quark_string="s̄u", mass_exp=891.66, printed_gmo=_row(1, None, H, 1, -1, H)),
    )
    phi = (
        ParticleState("phi", "φ", rep_phi, "real", (56, 54), _sig(110, 108), 109, DivisionRing.R, P2,
                      _qn(B, s2, P2, 0, 0, 0, 0), truly_neutral=True, quark_string="s̄s", mass_exp=782.0,
                      printed_gmo=_row(1, 0, 0, 1, 0, 0)),
    )
    return Octet("B1", (
        ChargeMultiplet("Phi3", "rho", rho, 770, _row(1, 0, 2)),
        ChargeMultiplet("Phi2", "K*1", k1, 892, _row(1, -1, H)),
        ChargeMultiplet("Phi2*", "K*2", k2, 892, _row(1, 1, H)),
        ChargeMultiplet("Phi0", "phi", phi, 782, _row(1, 0, 0)),
    ), baryon_number=B, spin=HalfInt(s2), parity2=P2, quadratic=True)


_BUILDERS = {"F12": _f12, "B0": _b0, "B1": _b1}


def builtin_octets() -> dict[str, Octet]:
    return {name: build() for name, build in _BUILDERS.items()}


def get_octet(name: str) -> Octet:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown octet {name!r}; choose from {list(_BUILDERS)}") from None


def all_states() -> list[ParticleState]:
    return [s for o in builtin_octets().values() for s in o.states]


def find_state(name: str) -> ParticleState | None:
    for s in all_states():
        if s.name == name:
            return s
    return None


def quark_composition(name: str) -> str:
    """Quark string of a built-in state (overbars as combining U+0304); "" for unknown names."""
    state = find_state(name)
    return "" if state is None or state.quark_string is None else state.quark_string


def reduction(octet: Octet) -> list[ChargeMultiplet]:
    return list(octet.multiplets)


# -- validation ------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    particle: str
    family: str
    message: str
    expected: str
    found: str

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def _signature_problems(state: ParticleState) -> tuple[list[str], list[str], list[str]]:
    """(what, expected, found) for the algebra and spinspace dimension checks."""
    k, r = state.rep.k, state.rep.r
    what, exp, got = [], [], []
    if state.is_complex:
        if state.algebra != 2 * (k + r):
            what.append("complex algebra dimension")
            exp.append(str(2 * (k + r)))
            got.append(str(state.algebra))
        if state.real_form is not None and state.real_form.n != 2 * (k + r):
            what.append("real form p+q")
            exp.append(str(2 * (k + r)))
            got.append(str(state.real_form.n))
    else:
        sig = state.algebra
        if sig.n != 2 * (k + r):
            what.append("p+q")
            exp.append(f"{2 * (k + r)} (e.g. Cl({k + r + sig.d // 2},{k + r - sig.d // 2}))")
            got.append(str(sig.n))
        if 2 * state.spinspace_log2 != sig.n:
            what.append("spinspace exponent vs (p+q)/2")
            exp.append(f"{sig.n / 2:g}")
            got.append(str(state.spinspace_log2))
    if state.spinspace_log2 != k + r:
        what.append("spinspace exponent vs k+r")
        exp.append(str(k + r))
        got.append(str(state.spinspace_log2))
    return what, exp, got


def validate(state: ParticleState, octet_spin: HalfInt | None = None) -> list[Violation]:
    out: list[Violation] = []

    def flag(family, message, expected, found):
        out.append(Violation(state.name, family, message, str(expected), str(found)))

    k, r = state.rep.k, state.rep.r
    if sorted(state.sym_space) != sorted((k, r)):
        flag("degree", "Sym space does not match the label", (k, r), state.sym_space)
    if state.rep.degree != (state.sym_space[0] + 1) * (state.sym_space[1] + 1):
        flag("degree", "degree differs from (k+1)(r+1)", state.rep.degree,
             (state.sym_space[0] + 1) * (state.sym_space[1] + 1))

    what, exp, got = _signature_problems(state)
    if what:
        flag("signature_dim", "; ".join(what), "; ".join(exp), "; ".join(got))

    sig = state.real_form if state.is_complex else state.algebra
    if sig is not None:
        if not state.is_complex and classify(sig) != state.spinspace_ring:
            flag("ring", "division ring differs from p-q mod 8", classify(sig).value, state.spinspace_ring.value)
        try:
            p2 = parity_square(sig)
        except ValueError:
            p2 = None
        if p2 != state.parity2:
            flag("parity", f"P² from {sig}", p2, state.parity2)
    if state.is_complex and state.spinspace_ring != DivisionRing.C:
        flag("ring", "complex states have a complex spinspace", "C", state.spinspace_ring.value)

    try:
        cls = charge_class(state.is_complex, state.spinspace_ring)
    except ValueError as exc:
        flag("charge_class", str(exc), "a chargeable ring", state.spinspace_ring.value)
    else:
        want = (ChargeClass.CHARGED if state.qn.Q != 0 else
                ChargeClass.TRULY_NEUTRAL if state.truly_neutral else ChargeClass.NEUTRAL)
        if cls != want:
            flag("charge_class", f"charge label {state.charge_label}", want.value, cls.value)

    spin = state.qn.s if octet_spin is None else HalfInt.of(octet_spin)
    if state.rep.spin != spin:
        flag("spin_line", "label is off the octet's spin line", spin, state.rep.spin)

    if state.printed_gmo is not None:
        want = gmo_coefficients(state.qn)
        names = ("alpha", "beta", "gamma", "alpha'", "beta'", "gamma'")
        for i, (printed, derived) in enumerate(zip(state.printed_gmo, want)):
            if printed is None and derived != 0 and i != 1:
                flag("gmo_coefficient", f"{names[i]} term missing", derived, "omitted")
            elif printed is not None and printed != derived:
                family = "u_coefficient" if i == 5 else "gmo_coefficient"
                flag(family, f"printed {names[i]} coefficient", derived, printed)

    if state.prose_rep is not None and state.prose_rep != state.rep:
        flag("prose_label_mismatch", "prose label differs from the state table",
             f"({state.rep.l}, {state.rep.ldot}) degree {state.rep.degree}",
             f"({state.prose_rep.l}, {state.prose_rep.ldot}) degree {state.prose_rep.degree}")
    elif state.prose_signature is not None and state.prose_signature != state.algebra:
        flag("prose_label_mismatch", "prose signature differs from the state table", state.algebra,
             state.prose_signature)
    return out


def validate_multiplet(m: ChargeMultiplet) -> list[Violation]:
    out = []
    first = m.members[0]
    for s in m.members[1:]:
        if (s.qn.I, s.qn.Y, s.rep.degree) != (first.qn.I, first.qn.Y, first.rep.degree):
            out.append(Violation(s.name, "multiplet", f"{m.name} members disagree on (I, Y, degree)",
                                 str((first.qn.I, first.qn.Y, first.rep.degree)),
                                 str((s.qn.I, s.qn.Y, s.rep.degree))))
    if m.printed_gmo is not None and tuple(m.printed_gmo) != hypercharge_coefficients(first.qn):
        out.append(Violation(m.name, "gmo_coefficient", "printed hypercharge row",
                             str(hypercharge_coefficients(first.qn)), str(m.printed_gmo)))
    return out


def validate_octet(octet: Octet) -> list[Violation]:
    out = []
    for m in octet.multiplets:
        out.extend(validate_multiplet(m))
        for s in m.members:
            out.extend(validate(s, octet.spin))
            if (s.qn.B, s.qn.s, s.parity2) != (octet.baryon_number, octet.spin, octet.parity2):
                out.append(Violation(s.name, "octet_tags", "B, s, P² differ from the octet",
                                     str((octet.baryon_number, octet.spin, octet.parity2)),
                                     str((s.qn.B, s.qn.s, s.parity2))))
    return out


def validate_all(octets: Iterable[Octet] | None = None) -> list[Violation]:
    octets = builtin_octets().values() if octets is None else octets
    return [v for o in octets for v in validate_octet(o)]


def corrected(state: ParticleState) -> ParticleState:
    """A companion state with the algebra signature and spinspace made consistent with the label.

    The signature keeps p - q and takes p + q = 2(k + r); the spinspace exponent
    becomes k + r.  Other printed fields are kept.
    """
    n = state.rep.k + state.rep.r
    changes = {"spinspace_log2": n}
    if not state.is_complex:
        d = state.algebra.d
        changes["algebra"] = CliffordSignature(n + d // 2, n - d // 2)
    else:
        changes["algebra"] = 2 * n
        if state.real_form is not None:
            d = state.real_form.d
            changes["real_form"] = CliffordSignature(n + d // 2, n - d // 2)
    return dataclasses.replace(state, **changes)


def catalog_json(octets: Iterable[Octet] | None = None) -> str:
    octets = builtin_octets().values() if octets is None else octets
    return json.dumps({"octets": [o.as_dict() for o in octets]}, ensure_ascii=False, indent=2, sort_keys=True)
