"""Command-line front end.

Subcommands: ``spectrum``, ``table``, ``wavefunction``, ``verify`` and
``constants``.  Output is CSV (header row always present) or a JSON array;
floats are written with 9 significant digits.  Exit status is 0 on success,
1 on a domain error or a failed verification, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import ContractError, DomainError, StateNotCapturedError
from .oracle import GridSpec, verify
from .potentials import POTENTIAL_CLASSES, PotentialKind, QuantumNumbers, make_potential
from .spectra import RECORD_FIELDS, energy
from .units import CONSTANTS, UnitSystem, mass_parameter
from .wavefn import radial_wavefunction

N2_PRESET = {
    "potential": "modified-non-central",
    "params": {"D": 11.9384, "a": 1.0940, "beta": 0.0, "gamma": 0.0},
    "mu": 7.00335,
    "rows": [(0, 0, 0), (1, 0, 0), (1, 1, 1), (2, 0, 0), (2, 1, 1), (2, 2, 2),
             (3, 0, 0), (3, 1, 1), (3, 2, 2), (3, 3, 3)],
}
PRESETS = {"n2-table1": N2_PRESET}

PARAM_FLAGS = ("alpha", "beta", "gamma", "D0", "r0", "D", "a", "kappa", "omega")

VERIFY_FIELDS = ("potential", "n", "s", "m", "l2_closed", "l2_oracle", "l2_rel_dev",
                 "E_closed", "E_oracle", "E_rel_dev", "E_order", "E_as_printed", "status")


class UsageError(Exception):
    pass


def fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".9g")
    return str(x)


def _json_value(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        v = float(format(float(x), ".9g"))
        return v if np.isfinite(v) else None
    return x


def render(rows: list[dict], fields, fmt_name: str) -> str:
    if fmt_name == "json":
        payload = [{k: _json_value(row[k]) for k in fields} for row in rows]
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([fmt(row[k]) for k in fields])
    return buf.getvalue()


def parse_range(text) -> list[int]:
    """``"3"``, ``"0..2"`` (inclusive) or a comma list of either."""
    if isinstance(text, int):
        return [text]
    if isinstance(text, list):
        return [int(v) for v in text]
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def _add_potential_args(p):
    p.add_argument("--potential", choices=[k.value for k in PotentialKind])
    for name in PARAM_FLAGS:
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--M", type=float, help="mass parameter 2m/hbar^2, overrides --mu")
    p.add_argument("--mu", type=float, help="reduced mass in amu (molecular units)")
    p.add_argument("--units", choices=[u.value for u in UnitSystem])
    p.add_argument("--n", help="radial quantum numbers, e.g. 0..3")
    p.add_argument("--s", help="polar quantum numbers")
    p.add_argument("--m", help="azimuthal quantum numbers")


def _add_output_args(p):
    p.add_argument("--format", choices=["csv", "json"])
    p.add_argument("--output", help="write here instead of standard output")
    p.add_argument("--config", help="JSON file whose keys mirror the flags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncpspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="energies over quantum-number ranges")
    _add_potential_args(p)
    _add_output_args(p)

    p = sub.add_parser("table", help="preset tables")
    p.add_argument("--preset", required=True)
    _add_output_args(p)

    p = sub.add_parser("wavefunction", help="sample a normalized radial eigenfunction")
    _add_potential_args(p)
    _add_output_args(p)
    p.add_argument("--r-min", type=float, dest="r_min")
    p.add_argument("--r-max", type=float, dest="r_max")
    p.add_argument("--samples", type=int)

    p = sub.add_parser("verify", help="closed forms against finite-difference eigensolvers")
    _add_potential_args(p)
    _add_output_args(p)
    p.add_argument("--points", type=int, help="cells on the coarsest grid (default 4000)")
    p.add_argument("--levels", type=int, help="refinement levels (default 3)")
    p.add_argument("--grid-r-max", type=float, dest="grid_r_max", help="radial box size")

    p = sub.add_parser("constants", help="pinned physical constants")
    _add_output_args(p)
    return parser


def _merge_config(args):
    if not getattr(args, "config", None):
        return args
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {args.config!r}: {exc}") from exc
    if not isinstance(cfg, dict):
        raise UsageError("config file must hold a JSON object")
    for key, value in cfg.items():
        key = key.replace("-", "_")
        if key in ("command", "config"):
            continue
        if not hasattr(args, key):
            raise UsageError(f"unknown config key {key!r}")
        if getattr(args, key) is None:
            setattr(args, key, value)
    return args


def _resolve_mass(args) -> float:
    units = UnitSystem(args.units) if args.units else None
    if args.M is not None and args.mu is not None:
        raise UsageError("give either --M or --mu, not both")
    if args.M is not None:
        if not args.M > 0:
            raise DomainError(f"mass parameter M must be positive, got {args.M!r}")
        return float(args.M)
    if args.mu is not None:
        if units is UnitSystem.DIMENSIONLESS:
            raise UsageError("--mu (amu) is not allowed with --units dimensionless")
        return mass_parameter(float(args.mu), UnitSystem.MOLECULAR)
    if units is UnitSystem.MOLECULAR:
        raise UsageError("molecular units need --mu or --M")
    return mass_parameter(1.0, UnitSystem.DIMENSIONLESS)


def _resolve_potential(args):
    if not args.potential:
        raise UsageError("--potential is required")
    try:
        kind = PotentialKind(args.potential)
    except ValueError as exc:
        raise UsageError(f"unknown potential {args.potential!r}") from exc
    names = {f.name: f for f in dataclasses.fields(POTENTIAL_CLASSES[kind])}
    params = {}
    for name in PARAM_FLAGS:
        value = getattr(args, name, None)
        if value is None:
            continue
        if name not in names:
            raise UsageError(f"--{name} does not apply to {kind.value}")
        params[name] = float(value)
    try:
        return make_potential(kind, **params)
    except TypeError as exc:
        missing = [n for n, f in names.items()
                   if n not in params and f.default is dataclasses.MISSING]
        raise UsageError(f"{kind.value} needs parameters: {', '.join('--' + m for m in missing)}") from exc


def _quantum_numbers(args):
    ns = parse_range(args.n if args.n is not None else 0)
    ss = parse_range(args.s if args.s is not None else 0)
    ms = parse_range(args.m if args.m is not None else 0)
    return [QuantumNumbers(n, s, m) for n, s, m in itertools.product(ns, ss, ms)]


def _threads() -> int:
    raw = os.environ.get("NCPSPEC_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError as exc:
            raise UsageError(f"NCPSPEC_THREADS must be an integer, got {raw!r}") from exc
    return os.cpu_count() or 1


def cmd_spectrum(args):
    p = _resolve_potential(args)
    M = _resolve_mass(args)
    rows = [energy(p, M, qn).record() for qn in _quantum_numbers(args)]
    return render(rows, RECORD_FIELDS, args.format or "csv")


def cmd_table(args):
    preset = PRESETS.get(args.preset)
    if preset is None:
        raise UsageError(f"unknown preset {args.preset!r}; available: {', '.join(PRESETS)}")
    p = make_potential(preset["potential"], **preset["params"])
    M = mass_parameter(preset["mu"], UnitSystem.MOLECULAR)
    rows = [energy(p, M, QuantumNumbers(*qn)).record() for qn in preset["rows"]]
    return render(rows, RECORD_FIELDS, args.format or "csv")


def cmd_wavefunction(args):
    p = _resolve_potential(args)
    M = _resolve_mass(args)
    qns = _quantum_numbers(args)
    if len(qns) != 1:
        raise UsageError("wavefunction needs single values for --n, --s and --m")
    qn = qns[0]
    w = radial_wavefunction(p, M, qn, energy(p, M, qn))
    r_min = 0.0 if args.r_min is None else float(args.r_min)
    r_max = w.r_cut if args.r_max is None else float(args.r_max)
    samples = 201 if args.samples is None else int(args.samples)
    if samples < 2 or not r_max > r_min or r_min < 0:
        raise UsageError("need samples >= 2 and 0 <= r_min < r_max")
    r = np.linspace(r_min, r_max, samples)
    with np.errstate(divide="ignore"):
        R = np.where(r > 0, w(np.where(r > 0, r, 1.0)), 0.0)
    rows = [{"r": float(a), "R": float(b)} for a, b in zip(r, R)]
    return render(rows, ("r", "R"), args.format or "csv")


def _verify_row(report):
    return {
        "potential": report.potential, "n": report.n, "s": report.s, "m": report.m,
        "l2_closed": report.angular.closed_form, "l2_oracle": report.angular.extrapolated,
        "l2_rel_dev": report.angular.rel_deviation,
        "E_closed": report.radial.closed_form, "E_oracle": report.radial.extrapolated,
        "E_rel_dev": report.radial.rel_deviation, "E_order": report.radial.order,
        "E_as_printed": report.as_printed_E,
        "status": "PASS" if report.passed else "FAIL",
    }


def cmd_verify(args):
    p = _resolve_potential(args)
    M = _resolve_mass(args)
    qns = _quantum_numbers(args)
    points = 4000 if args.points is None else int(args.points)
    levels = 3 if args.levels is None else int(args.levels)

    grid = None
    if args.grid_r_max is not None:
        grid = GridSpec(r_max=float(args.grid_r_max), points=points, refinement_levels=levels)

    def one(qn):
        return verify(p, M, qn, grid=grid, points=points, refinement_levels=levels)

    with ThreadPoolExecutor(max_workers=min(_threads(), len(qns))) as pool:
        reports = list(pool.map(one, qns))
    rows = [_verify_row(r) for r in reports]
    out = render(rows, VERIFY_FIELDS, args.format or "csv")
    return out, all(r.passed for r in reports)


def cmd_constants(args):
    # published digits are kept in full rather than cut to 9
    rows = [{"name": n, "value": v, "unit": u, "release": rel} for n, v, u, rel in CONSTANTS.table()]
    if args.format == "json":
        return json.dumps(rows, indent=2) + "\n"
    for row in rows:
        row["value"] = repr(row["value"])
    return render(rows, ("name", "value", "unit", "release"), "csv")


COMMANDS = {
    "spectrum": cmd_spectrum,
    "table": cmd_table,
    "wavefunction": cmd_wavefunction,
    "verify": cmd_verify,
    "constants": cmd_constants,
}


def run(argv=None, stdout=None) -> int:
    """Parse ``argv``, execute one subcommand and return the exit status."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    ok = True
    try:
        args = _merge_config(args)
        result = COMMANDS[args.command](args)
        if isinstance(result, tuple):
            result, ok = result
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ContractError, StateNotCapturedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(result)
    else:
        stdout.write(result)
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
