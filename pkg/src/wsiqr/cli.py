"""Command-line front end: ``wsiqr {spectrum,wavefunction,verify,degeneracy,appendix-check}``."""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import oracle as orc
from . import spectrum as sp
from . import wavefn as wfn
from .config import FORMATS, build_run_config, read_config
from .degeneracy import D_MAX, family_of, verify_family
from .errors import (ConfigError, DegenerateConditionError, InvalidParameterError,
                     NoBoundStateError, WsIqrError)
from .numerics import random_appendix_draws
from .params import QuantumNumbers
from .pekeris import as_dict, coefficients_for
from .report import render_table, to_json
from .verify import FAULTS, run_verification

EXIT_OK, EXIT_FAIL, EXIT_TRUST, EXIT_NO_STATE, EXIT_USAGE = 0, 1, 2, 3, 64

SPECTRUM_COLUMNS = ["n", "l", "D", "E_closed", "E_numeric_iqr", "E_oracle_pekeris",
                    "E_oracle_exact", "valid", "yA", "yB", "flags"]

# command-line override -> config key
OVERRIDES = (("--v0-mev", "v0_mev", float), ("--r0-fm", "r0_fm", float),
             ("--a-fm", "a_fm", float), ("--mass-number", "mass_number", int),
             ("--big-r0-fm", "big_r0_fm", float), ("--q", "q", float),
             ("--family", "family", str), ("--mass-term", "mass_term", float),
             ("--n-max", "n_max", int), ("--l-max", "l_max", int))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat key = value config file")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--seed", type=int)
    for flag, key, typ in OVERRIDES:
        p.add_argument(flag, dest=key, type=typ)
    p.add_argument("--dims", help="comma-separated list of dimensions D")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wsiqr", description="Bound states of deformed Woods-Saxon and "
                     "Hulthen wells in D dimensions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="level table for the configured sweep")
    _common(p)
    p.add_argument("--no-oracle", action="store_true", help="skip the finite-difference columns")

    p = sub.add_parser("wavefunction", help="sample one radial wavefunction")
    _common(p)
    p.add_argument("-n", type=int, default=0)
    p.add_argument("-l", type=int, default=0)
    p.add_argument("-D", type=int, default=3)
    p.add_argument("--samples", type=int, default=200)

    p = sub.add_parser("verify", help="run the verification suite")
    _common(p)
    p.add_argument("--only", action="append", help="criterion key or number (repeatable)")
    p.add_argument("--inject-fault", choices=FAULTS)

    p = sub.add_parser("degeneracy", help="interdimensional family table")
    _common(p)
    p.add_argument("-n", type=int, default=0)
    p.add_argument("-l", type=int, default=4)
    p.add_argument("-D", type=int, default=2)
    p.add_argument("--d-max", type=int, default=D_MAX)

    p = sub.add_parser("appendix-check", help="integral identity table")
    _common(p)
    p.add_argument("--draws", type=int, default=1000)
    return parser


def load_config(args):
    values = read_config(args.config) if args.config else {}
    for _, key, _ in OVERRIDES:
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    if args.dims is not None:
        try:
            values["dims"] = [int(x) for x in args.dims.replace(",", " ").split()]
        except ValueError as exc:
            raise ConfigError(f"bad --dims {args.dims!r}") from exc
    for key in ("format", "out", "seed"):
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    return build_run_config(values)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _spec_meta(spec) -> dict:
    return {"family": spec.family.value, "V0": spec.V0, "R0": spec.R0, "a": spec.a, "q": spec.q,
            "Q": spec.Q, "mass_term": spec.mass_term, "pekeris": as_dict(coefficients_for(spec))}


# -- spectrum ------------------------------------------------------------------

def spectrum_rows(cfg, with_oracle: bool = True) -> list[dict]:
    spec = cfg.spec
    rows = []
    for D in sorted(cfg.dims):
        for l in range(cfg.l_max + 1):
            oracles = {}
            if with_oracle:
                for mode in orc.CentrifugalMode:
                    oracles[mode] = orc.oracle_levels(spec, l, D, cfg.n_max + 1, mode).energies
            for n in range(cfg.n_max + 1):
                qn = QuantumNumbers(n, l, D)
                row = {"n": n, "l": l, "D": D, "valid": False}
                flags = list(qn.flags)
                try:
                    lv = sp.solve_energy(qn, spec)
                    row.update(E_closed=lv.E, valid=lv.valid,
                               yA=lv.diagnostics.get("yA"), yB=lv.diagnostics.get("yB"))
                    flags.extend(f for f in lv.flags if f not in flags)
                except WsIqrError as exc:
                    flags.append("closed:" + type(exc).__name__)
                try:
                    row["E_numeric_iqr"] = sp.quantize_numeric(qn, spec).E
                except WsIqrError as exc:
                    flags.append("numeric:" + type(exc).__name__)
                for mode, col in ((orc.CentrifugalMode.PEKERIS, "E_oracle_pekeris"),
                                  (orc.CentrifugalMode.EXACT, "E_oracle_exact")):
                    energies = oracles.get(mode)
                    if energies is None:
                        continue
                    if n < len(energies):
                        row[col] = float(energies[n])
                    else:
                        flags.append(f"{mode.value}-oracle:unbound")
                row["flags"] = flags
                rows.append(row)
    return rows


def cmd_spectrum(args) -> int:
    cfg = load_config(args)
    rows = spectrum_rows(cfg, with_oracle=not args.no_oracle)
    header = [f"family={cfg.spec.family.value} V0={cfg.spec.V0!r} R0={cfg.spec.R0!r} "
              f"a={cfg.spec.a!r} mass_term={cfg.spec.mass_term!r}"]
    _emit(render_table(rows, SPECTRUM_COLUMNS, cfg.format, header, {"spec": _spec_meta(cfg.spec)}),
          cfg.out)
    if any("outside-trust-region" in r["flags"] for r in rows):
        return EXIT_TRUST
    return EXIT_OK


# -- wavefunction ----------------------------------------------------------------

def cmd_wavefunction(args) -> int:
    cfg = load_config(args)
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    qn = QuantumNumbers(args.n, args.l, args.D)
    try:
        lv = sp.solve_energy(qn, cfg.spec)
    except (NoBoundStateError, DegenerateConditionError) as exc:
        sys.stderr.write(f"wsiqr: no bound state {qn}: {exc}\n")
        return EXIT_NO_STATE
    w = wfn.RadialWavefunction.from_level(lv, cfg.spec)
    wfn.normalize(w)
    r = (np.arange(args.samples) + 0.5) * (w.r_max / args.samples)
    u = w(r)
    tot = wfn.total_radial_factor(r, w)
    rows = [{"r": float(ri), "u": float(ui), "total_radial_factor": float(ti)}
            for ri, ui, ti in zip(r, u, tot)]
    meta = {"n": qn.n, "l": qn.l, "D": qn.D, "E": lv.E, "eps_tilde": w.eps_tilde, "nu": w.nu}
    header = [f"{k}={v!r}" for k, v in meta.items()]
    _emit(render_table(rows, ["r", "u", "total_radial_factor"], cfg.format, header, meta), cfg.out)
    return EXIT_TRUST if "outside-trust-region" in lv.flags else EXIT_OK


# -- verify ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    cfg = load_config(args)
    try:
        rep = run_verification(cfg.seed, args.only, args.inject_fault)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = to_json(rep.as_dict()) if cfg.format == "json" else rep.text()
    _emit(text, cfg.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- degeneracy ------------------------------------------------------------------

def cmd_degeneracy(args) -> int:
    cfg = load_config(args)
    anchor = QuantumNumbers(args.n, args.l, args.D)
    fam = family_of(anchor, D_max=args.d_max)
    rep = verify_family(fam, cfg.spec)
    rows = [{"n": m.qn.n, "l": m.qn.l, "D": m.qn.D, "Lambda": m.qn.Lambda, "delta2": m.delta2,
             "E": m.E, "flag": m.flag} for m in rep.members]
    header = [f"Lambda={fam.Lambda} bit_identical={rep.bit_identical_energies} "
              f"shared_E={rows[0]['E'] if rep.bit_identical_energies else None!r}"]
    _emit(render_table(rows, ["n", "l", "D", "Lambda", "delta2", "E", "flag"], cfg.format, header,
                       {"Lambda": fam.Lambda, "bit_identical": rep.bit_identical_energies}), cfg.out)
    if all(m.E is None for m in rep.members):
        return EXIT_NO_STATE
    return EXIT_OK if rep.bit_identical_energies else EXIT_FAIL


# -- appendix --------------------------------------------------------------------

def cmd_appendix(args) -> int:
    cfg = load_config(args)
    if args.draws < 1:
        raise UsageError("--draws must be >= 1")
    rng = np.random.default_rng([cfg.seed, 10])
    reps = list(random_appendix_draws(rng, args.draws))
    rows = [r.as_row() for r in reps]
    bad = sum(not r.abs_diff < 1e-8 for r in reps)
    header = [f"seed={cfg.seed} draws={args.draws} failures={bad}"]
    _emit(render_table(rows, ["identity", "rA", "rB", "a", "b", "closed", "numeric", "abs_diff"],
                       cfg.format, header, {"seed": cfg.seed, "failures": bad}), cfg.out)
    return EXIT_OK if bad == 0 else EXIT_FAIL


COMMANDS = {"spectrum": cmd_spectrum, "wavefunction": cmd_wavefunction, "verify": cmd_verify,
            "degeneracy": cmd_degeneracy, "appendix-check": cmd_appendix}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"wsiqr: usage error: {exc}\n")
        return EXIT_USAGE
    except (ConfigError, InvalidParameterError) as exc:
        sys.stderr.write(f"wsiqr: config error: {exc}\n")
        return EXIT_USAGE
    except WsIqrError as exc:
        sys.stderr.write(f"wsiqr: error: {exc}\n")
        return EXIT_FAIL
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
