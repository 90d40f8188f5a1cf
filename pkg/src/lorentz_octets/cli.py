"""Command-line entry point.

Half-integers are passed doubled: ``rep info 59 58`` means (l, l̇) = (59/2, 29).
Exit codes: 0 success, 2 usage error, 3 validation failures, 4 rank-deficient fit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from lorentz_octets import catalog, clifford_cpt, mass_model, rep_core, rwe, spin_lines, su3
from lorentz_octets.rep_core import HalfInt, RepLabel

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_RANK = 0, 2, 3, 4
DEFAULT_MU0 = 0.511
CONFIG_KEYS = ("mu0_mev", "masses_path", "matrix_cap")


class UsageError(Exception):
    pass


@dataclass
class Output:
    """Rows (a list of dicts) or a single record, plus an exit code."""

    rows: list[dict] | None = None
    record: dict | None = None
    code: int = EXIT_OK
    notes: list[str] = field(default_factory=list)


# -- formatting --------------------------------------------------------------------

def _plain(value):
    if isinstance(value, (Fraction, HalfInt)):
        return str(value)
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.10g}"
    if isinstance(value, complex):
        return f"{value.real + 0.0:.10g}{value.imag + 0.0:+.10g}j"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(_plain(value), ensure_ascii=False)
    return str(value)


def _flatten(record: dict, prefix: str = "") -> list[tuple[str, object]]:
    out = []
    for k, v in record.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.extend(_flatten(v, key + "."))
        else:
            out.append((key, v))
    return out


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        payload = _plain(out.rows if out.rows is not None else out.record)
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    if out.rows is not None:
        header = list(out.rows[0]) if out.rows else []
        for row in out.rows:
            header.extend(k for k in row if k not in header)
        table = [[_cell(row.get(k)) for k in header] for row in out.rows]
    else:
        header = ["key", "value"]
        table = [[k, _cell(v)] for k, v in _flatten(out.record or {})]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(table)
        return buf.getvalue()
    if out.record is not None:
        width = max((len(k) for k, _ in table), default=0)
        lines = [f"{k.ljust(width)}  {v}" for k, v in table]
    else:
        widths = [max([len(h)] + [len(r[i]) for r in table]) for i, h in enumerate(header)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
        lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table]
    return "\n".join(lines + out.notes) + "\n"


# -- config and inputs -----------------------------------------------------------------

def load_config(path: str | None) -> dict:
    if path is None:
        return {}
    cfg = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r} (allowed: {', '.join(CONFIG_KEYS)})")
        try:
            cfg[key] = {"mu0_mev": float, "matrix_cap": int, "masses_path": str}[key](value)
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}") from exc
    return cfg


def _rep(two_l: int, two_ldot: int) -> RepLabel:
    if two_l < 0 or two_ldot < 0:
        raise UsageError("doubled labels must be non-negative")
    return RepLabel.from_twice(two_l, two_ldot)


def _observations(args, octet: catalog.Octet) -> list[mass_model.Observation]:
    path = args.masses or args.config_values.get("masses_path")
    if path is None:
        ref = resources.files("lorentz_octets") / "data" / f"{octet.name.lower()}.csv"
        with resources.as_file(ref) as p:
            return mass_model.load_observations(p)
    try:
        return mass_model.load_observations(path)
    except OSError as exc:
        raise UsageError(f"cannot read masses {path}: {exc}") from exc


def _multiplet_observations(octet: catalog.Octet, obs: list[mass_model.Observation],
                            builtin: bool) -> list[mass_model.Observation]:
    """One observation per (I, Y) multiplet: the printed multiplet mass or the mean of the data."""
    out = []
    by_name = {o.name: o for o in obs}
    for m in octet.multiplets:
        lead = m.members[0]
        if builtin:
            mass = m.mass_exp
        else:
            masses = [by_name[s.name].mass for s in m.members if s.name in by_name]
            if not masses:
                raise UsageError(f"no masses for multiplet {m.name}")
            mass = sum(masses) / len(masses)
        out.append(mass_model.Observation(m.name, lead.qn, float(mass)))
    return out


def _octet_masses(octet: catalog.Octet, obs, builtin: bool) -> mass_model.OctetMasses:
    if builtin:
        return octet.hypercharge_masses()
    return _octet_masses_from_multiplets(octet, _multiplet_observations(octet, obs, builtin=False))


def _octet_masses_from_multiplets(octet, multiplet_obs) -> mass_model.OctetMasses:
    by = {o.name: o.mass for o in multiplet_obs}
    m = octet.multiplets
    lo, hi = sorted((m[1], m[2]), key=lambda x: x.members[0].qn.Y)
    return mass_model.OctetMasses(by[lo.name], by[hi.name], by[m[0].name], by[m[3].name], octet.quadratic)


# -- commands --------------------------------------------------------------------------

def cmd_rep_info(args) -> Output:
    rep = _rep(args.two_l, args.two_ldot)
    ts = spin_lines.tensor_structure(rep)
    gn = rep_core.to_gelfand_naimark(rep)
    return Output(record={
        "l": rep.l, "ldot": rep.ldot, "degree": rep.degree, "spin": rep.spin, "k": rep.k, "r": rep.r,
        "spins": [str(s) for s in rep_core.clebsch_gordan_spins(rep)],
        "complex_algebra_dim": ts.complex_dim, "spinspace_log2": ts.spinspace_dim_log2,
        "gelfand_naimark": {"l0": gn.l0, "l1": gn.l1},
        "effective_ratio": mass_model.effective_ratio(rep),
        "effective_mass_mev": float(mass_model.effective_ratio(rep)) * args.mu0,
        "mgy_mass_mev": mass_model.mgy_mass(rep, args.mu0),
    })


def _rep_rows(reps) -> list[dict]:
    return [{"index": i, "l": r.l, "ldot": r.ldot, "degree": r.degree, "spin": r.spin,
             "effective_ratio": mass_model.effective_ratio(r)} for i, r in enumerate(reps)]


def cmd_line(args) -> Output:
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    return Output(rows=_rep_rows(spin_lines.line(HalfInt(args.two_s), args.count, args.dual).entries))


def cmd_multiplet(args) -> Output:
    if args.shift < 0 or args.two_s < 0:
        raise UsageError("spin and shift must be non-negative")
    return Output(rows=_rep_rows(spin_lines.spin_multiplet(HalfInt(args.two_s), args.shift)))


def cmd_search(args) -> Output:
    if args.ratio <= 0 or args.top < 1 or args.spin < 0:
        raise UsageError("--ratio must be positive, --top at least 1, --spin non-negative")
    return Output(rows=mass_model.search_table(args.ratio, HalfInt(args.spin), args.top, args.mu0))


def _signature(args) -> clifford_cpt.CliffordSignature:
    if args.p < 0 or args.q < 0:
        raise UsageError("p and q must be non-negative")
    return clifford_cpt.CliffordSignature(args.p, args.q)


def cmd_clifford_classify(args) -> Output:
    sig = _signature(args)
    ring = clifford_cpt.classify(sig)
    try:
        p2 = clifford_cpt.parity_square(sig)
    except clifford_cpt.UnassignedParity:
        p2 = None
    try:
        neutral = clifford_cpt.charge_class(False, ring).value
    except ValueError:
        neutral = None
    return Output(record={"signature": str(sig), "n": sig.n, "p_minus_q_mod8": sig.d_mod8, "ring": ring.value,
                          "parity2": p2, "real_charge_class": neutral})


def cmd_clifford_pi(args) -> Output:
    sig = _signature(args)
    if sig.n % 2 or sig.n == 0:
        raise UsageError("the Π construction needs an even, positive p+q")
    if sig.n > args.cap:
        raise UsageError(f"p+q = {sig.n} exceeds the matrix cap {args.cap}")
    try:
        basis = clifford_cpt.gamma_basis(sig, args.cap)
        a, b = clifford_cpt.count_generator_kinds(basis)
        sign = clifford_cpt.pi_conj_sign(basis)
    except clifford_cpt.PiRuleError as exc:
        raise UsageError(str(exc)) from exc
    rule = clifford_cpt.counting_rule_sign(sig, a, b)
    return Output(record={"signature": str(sig), "ring": clifford_cpt.classify(sig).value,
                          "generators": [str(w) for w in basis.words], "complex_generators": a,
                          "real_generators": b, "pi_conj_pi": sign, "counting_rule": rule,
                          "agree": sign == rule})


def cmd_cpt_table(args) -> Output:
    given = [args.eta_p, args.eta_t, args.eta_c]
    phases = None
    if any(v is not None for v in given):
        try:
            phases = clifford_cpt.CptPhases(*(complex(v) if v is not None else 1 for v in given))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    table = clifford_cpt.cpt_table(phases)
    rows = []
    for r in table.elements:
        for c in table.elements:
            cell = table.cell(r, c)
            row = {"row": r, "col": c, "phase": cell.monomial(), "word": cell.word, "element": cell.element}
            if phases is not None:
                row["phase_value"] = cell.phase_value(phases)
            rows.append(row)
    notes = [f"abelian={table.is_abelian()} involutions={table.all_involutions()} "
             f"z2_cubed={table.is_z2_cubed()}"] if args.format == "text" else []
    return Output(rows=rows, notes=notes)


def cmd_bivector_metric(args) -> Output:
    m = rwe.bivector_metric()
    names = ["".join(str(i) for i in pair) for pair in rwe.BIVECTOR_ORDER]
    return Output(rows=[{"bivector": names[i], **{names[j]: int(m[i, j]) for j in range(6)}} for i in range(6)])


def cmd_lambda3(args) -> Output:
    rep = _rep(args.two_l, args.two_ldot)
    if rep.degree > args.matrix_cap:
        raise UsageError(f"degree {rep.degree} exceeds the matrix cap {args.matrix_cap}")
    blocks = rwe.lambda3_generalized(rep.l, rep.ldot)
    if args.blocks:
        try:
            wanted = [int(x) for x in args.blocks.split(",")]
        except ValueError as exc:
            raise UsageError("--blocks takes comma-separated integers") from exc
        if any(not 1 <= i <= len(blocks.blocks) for i in wanted):
            raise UsageError(f"block indices must lie in 1..{len(blocks.blocks)}")
    else:
        wanted = range(1, len(blocks.blocks) + 1)
    rows = [{"block": i, "mdot": blocks.mdots[i - 1], "length": len(blocks.block(i)),
             "entries": [str(x) for x in blocks.block(i)]} for i in wanted]
    notes = [f"dimension={blocks.dimension} zero_blocks={blocks.zero_blocks()}"] if args.format == "text" else []
    return Output(rows=rows, notes=notes)


def cmd_dirac_l(args) -> Output:
    L, Lc = rwe.dirac_l_matrices(args.c)
    rows = []
    for tag, mats in (("L", L), ("conjL", Lc)):
        for j, m in enumerate(mats, start=1):
            rows.append({"matrix": f"{tag}{j}", "entries": [complex(x) for x in m.flat]})
    return Output(rows=rows)


def cmd_su3_degrees(args) -> Output:
    if args.max < 0:
        raise UsageError("--max must be non-negative")
    grid = su3.degrees_table(args.max)
    return Output(rows=[{"p": p, **{f"q={q}": d for q, d in enumerate(row)}} for p, row in enumerate(grid)])


def cmd_su3_admissible(args) -> Output:
    degs = su3.admissible_degrees(args.max_degree)
    return Output(rows=[{"degree": d} for d in degs])


def cmd_su3_okubo(args) -> Output:
    checks = su3.okubo_commutator_check()
    emb = su3.su2_embedding()
    blocks = {k: su3.upper_block(v) for k, v in emb.items()}
    ref = su3.okubo_basis2()
    printed_mismatch = sorted(f"a^{i}_{j}" for (i, j), m in su3.OKUBO2_PRINTED.items()
                              if not su3.fequal(m, ref[(j, i)]) and not su3.fequal(m, blocks[(i, j)]))
    rec = {
        "commutators_ok": sum(checks.values()), "commutators_total": len(checks),
        "su2_embedding_closes": su3.su2_commutator_check(emb),
        "su2_blocks_equal_2x2_okubo": all(su3.fequal(blocks[k], ref[k]) for k in ref),
        "printed_2x2_mismatches": printed_mismatch,
        "adjoint_preserves_commutators": su3.adjoint_preserves_commutators(),
    }
    ok = rec["commutators_ok"] == rec["commutators_total"] and rec["su2_embedding_closes"] \
        and rec["su2_blocks_equal_2x2_okubo"] and rec["adjoint_preserves_commutators"]
    return Output(record=rec, code=EXIT_OK if ok else EXIT_VALIDATION)


def _octet(args) -> catalog.Octet:
    try:
        return catalog.get_octet(args.octet)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc


def cmd_octet(args) -> Output:
    octet = _octet(args)
    rows = []
    for m in octet.multiplets:
        for s in m.members:
            row = {"multiplet": m.label, "name": s.name, "l": s.rep.l, "ldot": s.rep.ldot,
                   "degree": s.rep.degree, "kind": s.rep_kind, "sym": f"({s.sym_space[0]},{s.sym_space[1]})",
                   "algebra": s.algebra_str(), "spinspace": f"2^{s.spinspace_log2}({s.spinspace_ring.value})",
                   "P2": s.parity2, "Q": s.charge_label, "Y": s.qn.Y, "I": s.qn.I, "U": s.qn.U,
                   "mass_mev": s.mass_exp}
            if args.quarks:
                row["quarks"] = s.quark_string
            rows.append(row)
    code = EXIT_OK
    notes = []
    if args.validate:
        violations = catalog.validate_octet(octet)
        if violations:
            code = EXIT_VALIDATION
        if args.format == "text":
            notes = [f"violation {v.particle} [{v.family}] {v.message}: expected {v.expected}, found {v.found}"
                     for v in violations] or ["no violations"]
        else:
            by_name: dict[str, list[str]] = {}
            for v in violations:
                by_name.setdefault(v.particle, []).append(v.family)
            for row in rows:
                row["violations"] = ";".join(by_name.get(row["name"], []))
    return Output(rows=rows, code=code, notes=notes)


def cmd_gmo_fit(args) -> Output:
    octet = _octet(args)
    obs = _observations(args, octet)
    builtin = args.masses is None and "masses_path" not in args.config_values
    constraints = set()
    if octet.baryon_number == 0:
        constraints.add("beta=0")
    if args.hypercharge_only:
        constraints.add("hypercharge_only")
        obs = _multiplet_observations(octet, obs, builtin)
    try:
        result = mass_model.gmo_fit(obs, quadratic=args.quadratic, constraints=constraints)
    except mass_model.RankDeficiencyError as exc:
        return Output(record={"error": "rank_deficient", "columns": list(exc.columns),
                              "null_space": exc.null_space}, code=EXIT_RANK)
    report = result.as_dict()
    masses = _octet_masses_from_multiplets(octet, obs) if args.hypercharge_only else \
        _octet_masses(octet, obs, builtin)
    report["relations"] = mass_model.closure_relations(masses).as_dict()
    report["constraints"] = sorted(constraints)
    return Output(record=report)


def cmd_gmo_relations(args) -> Output:
    octet = _octet(args)
    builtin = args.masses is None and "masses_path" not in args.config_values
    obs = _observations(args, octet)
    om = _octet_masses(octet, obs, builtin)
    rep = mass_model.closure_relations(om).as_dict()
    delta, m0_sq = mass_model.octet_spread(om)
    rep["spread"] = delta / m0_sq
    rep["regime"] = mass_model.splitting_regime(delta, m0_sq)
    return Output(record=rep)


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--mu0", type=float, default=argparse.SUPPRESS, help="minimal rest mass in MeV")
    common.add_argument("--config", default=argparse.SUPPRESS, help="key=value file")

    parser = argparse.ArgumentParser(prog="lorentz-octets", parents=[common],
                                     description="Lorentz-group representations, Clifford/CPT structure "
                                                 "and SU(3) octet mass splitting. Half-integers are doubled.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(subparsers, name, func, **kw):
        p = subparsers.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    rep = sub.add_parser("rep", parents=[common]).add_subparsers(dest="rep_cmd", required=True)
    p = add(rep, "info", cmd_rep_info, help="degree, spin, tensor structure, Gel'fand-Naimark pair")
    p.add_argument("two_l", type=int)
    p.add_argument("two_ldot", type=int)

    p = add(sub, "line", cmd_line, help="first labels of a spin line")
    p.add_argument("two_s", type=int)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--dual", action="store_true")

    p = add(sub, "multiplet", cmd_multiplet, help="spin multiplet anti-diagonal")
    p.add_argument("two_s", type=int)
    p.add_argument("--shift", type=int, default=0)

    p = add(sub, "search-mass", cmd_search, help="labels nearest a mass ratio m/μ⁰")
    p.add_argument("--ratio", type=float, required=True)
    p.add_argument("--spin", type=int, required=True, help="doubled spin")
    p.add_argument("--top", type=int, default=5)

    cl = sub.add_parser("clifford", parents=[common]).add_subparsers(dest="clifford_cmd", required=True)
    for name, func in (("classify", cmd_clifford_classify), ("pi", cmd_clifford_pi)):
        p = add(cl, name, func)
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)
        if name == "pi":
            p.add_argument("--cap", type=int, default=clifford_cpt.DEFAULT_CAP)

    cpt = sub.add_parser("cpt", parents=[common]).add_subparsers(dest="cpt_cmd", required=True)
    p = add(cpt, "table", cmd_cpt_table, help="CPT multiplication table")
    for flag in ("--eta-p", "--eta-t", "--eta-c"):
        p.add_argument(flag, default=None, help="unit phase, e.g. 1, -1, 1j")

    rw = sub.add_parser("rwe", parents=[common]).add_subparsers(dest="rwe_cmd", required=True)
    add(rw, "bivector-metric", cmd_bivector_metric)
    p = add(rw, "lambda3", cmd_lambda3)
    p.add_argument("two_l", type=int)
    p.add_argument("two_ldot", type=int)
    p.add_argument("--blocks", default=None, help="comma-separated 1-based block indices")
    p = add(rw, "dirac-l", cmd_dirac_l)
    p.add_argument("--c", type=float, default=2.0)

    s3 = sub.add_parser("su3", parents=[common]).add_subparsers(dest="su3_cmd", required=True)
    p = add(s3, "degrees", cmd_su3_degrees)
    p.add_argument("--max", type=int, default=6)
    p = add(s3, "admissible", cmd_su3_admissible)
    p.add_argument("--max-degree", type=int, default=160)
    add(s3, "okubo-check", cmd_su3_okubo)

    p = add(sub, "octet", cmd_octet, help="built-in octet state vectors")
    p.add_argument("octet", choices=catalog.OCTET_NAMES)
    p.add_argument("--validate", action="store_true")
    p.add_argument("--quarks", action="store_true")

    gmo = sub.add_parser("gmo", parents=[common]).add_subparsers(dest="gmo_cmd", required=True)
    for name, func in (("fit", cmd_gmo_fit), ("relations", cmd_gmo_relations)):
        p = add(gmo, name, func)
        p.add_argument("--octet", required=True, choices=catalog.OCTET_NAMES)
        p.add_argument("--masses", default=None, help="CSV name,Q,Y,I2,U2,B,spin2,parity,mass_mev")
        if name == "fit":
            p.add_argument("--quadratic", action="store_true")
            p.add_argument("--hypercharge-only", action="store_true")
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.config_values = load_config(getattr(args, "config", None))
        args.format = getattr(args, "format", "text")
        args.mu0 = getattr(args, "mu0", args.config_values.get("mu0_mev", DEFAULT_MU0))
        if not args.mu0 > 0:
            raise UsageError("--mu0 must be positive")
        args.matrix_cap = args.config_values.get("matrix_cap", rwe.DEFAULT_DEGREE_CAP)
        out = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    stdout.write(render(out, args.format))
    return out.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
