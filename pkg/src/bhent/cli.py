"""Command-line front end.

Subcommands
-----------
geom          single-point geometry report (static or rotating)
entangle      logarithmic negativity for one mode
teleport      teleportation fidelity for one mode
sweep         grid sweep -> CSV (axes/fixed/outputs from flags or a config file)
oracle-check  closed forms vs Fock-space oracle -> comparison CSV
estimate      SI-unit estimators (coupling-time, hawking-temp, radiation-density)
tev           TeV-gravity length scales

Exit codes: 0 success, 2 invalid flags, 3 physics domain error, 4 unwritable
output path, 5 oracle contract mismatch.  The environment variable
BHE_DEFAULT_TOL overrides the default series tolerance (1e-10).
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from bhent import channels, estimates, fock_oracle, geometry, modes, reports, sweep
from bhent.errors import PhysicsDomainError, TruncationError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PHYSICS = 3
EXIT_IO = 4
EXIT_MISMATCH = 5


def default_tol() -> float:
    raw = os.environ.get("BHE_DEFAULT_TOL")
    if raw is None:
        return channels.DEFAULT_SERIES_TOL
    try:
        return float(raw)
    except ValueError:
        raise PhysicsDomainError(f"BHE_DEFAULT_TOL is not a number: {raw!r}")


def _fmt(value: float) -> str:
    return format(value, ".10g")


# ---------------------------------------------------------------- geometry


def _resolve_bh(args) -> tuple[float, float, float, dict]:
    """Returns (r_h, kappa, Omega, extras) from geom-style flags."""
    if args.d is not None:
        if args.rh is not None:
            r_h = args.rh
        elif args.mass is not None:
            r_h = geometry.horizon_from_mass(args.d, args.mass)
        else:
            raise PhysicsDomainError("static geometry needs --rh or --mass")
        kappa = geometry.surface_gravity_schw(args.d, r_h)
        extras = {"M": geometry.mass_from_horizon(args.d, r_h), "J": 0.0}
        return r_h, kappa, 0.0, extras
    if args.n is not None:
        if args.mu is None:
            raise PhysicsDomainError("rotating geometry needs --mu")
        bh = geometry.RotatingBH(args.n, args.mu, args.a or 0.0)
        extras = {"M": bh.mass, "J": bh.angular_momentum, "a_star": bh.a_star}
        return bh.r_h, bh.kappa, bh.omega_h, extras
    raise PhysicsDomainError("need --d (static) or --n (rotating)")


def cmd_geom(args) -> int:
    r_h, kappa, omega_h, extras = _resolve_bh(args)
    print(f"r_h = {_fmt(r_h)}")
    print(f"kappa = {_fmt(kappa)}")
    print(f"Omega = {_fmt(omega_h)}")
    print(f"T = {_fmt(geometry.hawking_temperature(kappa))}")
    for key, value in extras.items():
        print(f"{key} = {_fmt(value)}")
    if args.units == "si":
        if args.mstar is None:
            raise PhysicsDomainError("--units si needs --mstar <TeV>")
        scale = geometry.TEV_INV_TO_M / args.mstar  # treats lengths as multiples of 1/M_*
        print(f"r_h_si_m = {_fmt(r_h * scale)}")
    return EXIT_OK


# ------------------------------------------------------------- mode points


def _mode_quantities(args) -> tuple[float, float, modes.SqueezingParams]:
    if args.kappa is not None:
        kappa, omega_h = args.kappa, args.Omega
    else:
        _, kappa, omega_h, _ = _resolve_bh(args)
    mode = modes.ModeSpec(args.omega, args.m, args.statistics)
    omega_eff = modes.effective_frequency(mode, omega_h)
    return omega_eff, kappa, modes.squeeze(omega_eff, kappa, args.statistics)


def cmd_entangle(args) -> int:
    omega_eff, kappa, sq = _mode_quantities(args)
    if args.statistics == modes.BOSON:
        result = channels.log_negativity_boson(sq.r, args.tol)
        print(f"E_N = {_fmt(result.value)}")
        print(f"terms_used = {result.terms_used}")
        print(f"tail_bound = {_fmt(result.tail_bound)}")
    else:
        print(f"E_N = {_fmt(channels.log_negativity_fermion(sq.r))}")
    print(f"r = {_fmt(sq.r)}")
    print(f"N_occ = {_fmt(modes.occupation(omega_eff, kappa, args.statistics))}")
    return EXIT_OK


def cmd_teleport(args) -> int:
    omega_eff, kappa, sq = _mode_quantities(args)
    if args.statistics == modes.BOSON:
        print(f"F = {_fmt(channels.fidelity_boson(omega_eff, kappa))}")
    else:
        print(f"F = {_fmt(channels.fidelity_fermion(sq))}")
    print(f"r = {_fmt(sq.r)}")
    return EXIT_OK


# ------------------------------------------------------------------ sweep


def _parse_axis(text: str) -> sweep.Axis:
    parts = text.split(":")
    if len(parts) == 4:
        parts.append("linear")
    if len(parts) != 5:
        raise PhysicsDomainError(f"axis must be name:lo:hi:count[:scale], got {text!r}")
    name, lo, hi, count, scale = parts
    return sweep.Axis(name, float(lo), float(hi), int(count), scale)


def _parse_fixed(text: str) -> tuple[str, object]:
    if "=" not in text:
        raise PhysicsDomainError(f"fixed parameter must be key=value, got {text!r}")
    key, value = (s.strip() for s in text.split("=", 1))
    if key == "statistics":
        return key, value
    return key, float(value)


def read_config(path: str) -> dict[str, list[str]]:
    """Parse `key = value` lines; `#` starts a comment; repeated keys stack."""
    entries: dict[str, list[str]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise PhysicsDomainError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            entries.setdefault(key, []).append(value)
    return entries


def _build_spec(args) -> sweep.SweepSpec:
    axes = list(args.axis or [])
    fixed = dict(args.fixed or [])
    outputs = args.output
    if args.config:
        cfg = read_config(args.config)
        if not axes:
            axes = [_parse_axis(v) for v in cfg.get("axis", [])]
        if not fixed:
            fixed = dict(_parse_fixed(v) for v in cfg.get("fixed", []))
        if outputs is None and "output" in cfg:
            outputs = cfg["output"][-1]
    out_list = tuple((outputs or "E_N").replace(" ", "").split(","))
    if "tol" not in fixed:
        fixed["tol"] = default_tol()
    return sweep.SweepSpec(tuple(axes), fixed, out_list)


def cmd_sweep(args) -> int:
    spec = _build_spec(args)
    try:
        rows = sweep.run_sweep(spec, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {rows} rows to {args.out}")
    return EXIT_OK


# ------------------------------------------------------------ oracle check


def cmd_oracle_check(args) -> int:
    tanh_values = [float(v) for v in args.tanhr.split(",")]
    tol = args.tol
    try:
        rows = reports.negativity_rows(tanh_values, args.trunc, tol / 10.0)
        rng_points = [(0.1 + 0.05 * k, k % 6) for k in range(12)]
        rows += reports.eigenvalue_rows(rng_points)
        r_fermi = [0.0, 0.2, 0.4, math.pi / 4]
        rows += reports.fermion_rows(r_fermi)
        rows += reports.fidelity_boson_rows([math.log(2.0), 1.5, 3.0], args.trunc)
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    try:
        reports.write_report_csv(rows, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO

    failures = [
        row
        for row in rows
        if not row[5].startswith("informational")
        and row[0] != "F_boson_verdict"
        and not (row[4] < tol)
    ]
    for row in failures:
        print(f"MISMATCH {row[0]} {row[1]}: diff {row[4]}", file=sys.stderr)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_MISMATCH if failures else EXIT_OK


# -------------------------------------------------------------- estimators


def cmd_estimate(args) -> int:
    if args.what == "coupling-time":
        cavity = estimates.CavitySpec(args.dl, args.vc)
        mass = args.msun * estimates.SI.m_sun if args.msun is not None else None
        res = estimates.coupling_time(mass, cavity, args.tbh)
        print(f"t_s = {_fmt(res.time_s)}")
        print(f"kappa_si = {_fmt(res.kappa_si)}")
        print(f"redshift_ratio = {_fmt(res.redshift_ratio)}")
        print(f"delta_E_J = {_fmt(res.energy_change_j)}")
        print(f"T_bh_K = {_fmt(res.t_bh)}")
        print(f"universe_age_s = {_fmt(estimates.AGE_OF_UNIVERSE_S)}")
    elif args.what == "hawking-temp":
        if args.msun is None:
            raise PhysicsDomainError("hawking-temp needs --msun")
        print(f"T_bh_K = {_fmt(estimates.hawking_temperature_si(args.msun * estimates.SI.m_sun))}")
    elif args.what == "radiation-density":
        if args.temp is None:
            raise PhysicsDomainError("radiation-density needs --temp")
        print(f"rho_J_per_m3 = {_fmt(estimates.radiation_density(args.temp))}")
    return EXIT_OK


def cmd_tev(args) -> int:
    scales = geometry.tev_scales(args.n, args.mstar, args.mbh)
    for key, value in scales.items():
        print(f"{key} = {_fmt(value)}")
    return EXIT_OK


# ------------------------------------------------------------------ parser


def _add_geometry_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int, help="spacetime dimension (static hole)")
    p.add_argument("--rh", type=float, help="horizon radius")
    p.add_argument("--mass", type=float, help="black hole mass (natural units)")
    p.add_argument("--n", type=int, help="extra dimensions (rotating hole)")
    p.add_argument("--mu", type=float, help="rotating mass parameter")
    p.add_argument("--a", type=float, help="spin parameter")


def _add_mode_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--omega", type=float, required=True, help="mode frequency")
    p.add_argument("--m", type=int, default=0, help="azimuthal number")
    p.add_argument("--statistics", choices=(modes.BOSON, modes.FERMION), default=modes.BOSON)
    p.add_argument("--kappa", type=float, help="surface gravity (overrides geometry flags)")
    p.add_argument("--Omega", type=float, default=0.0, help="horizon angular velocity")
    p.add_argument("--tol", type=float, default=None, help="series tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bhent", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("geom", help="geometry report")
    _add_geometry_flags(p)
    p.add_argument("--units", choices=("natural", "si"), default="natural")
    p.add_argument("--mstar", type=float, help="fundamental scale in TeV (for --units si)")
    p.set_defaults(func=cmd_geom)

    for name, func in (("entangle", cmd_entangle), ("teleport", cmd_teleport)):
        p = sub.add_parser(name, help=f"{name} figure of merit for one mode")
        _add_geometry_flags(p)
        _add_mode_flags(p)
        p.set_defaults(func=func)

    p = sub.add_parser("sweep", help="grid sweep to CSV")
    p.add_argument("--axis", action="append", type=_parse_axis, help="name:lo:hi:count[:scale]")
    p.add_argument("--fixed", action="append", type=_parse_fixed, help="key=value")
    p.add_argument("--output", help="comma-separated outputs (kappa,Omega,r,N_occ,E_N,F)")
    p.add_argument("--config", help="key = value config file; flags override")
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle-check", help="closed forms vs Fock-space oracle")
    p.add_argument("--tanhr", default="0.1,0.3,0.5,0.7", help="comma list of tanh r points")
    p.add_argument("--trunc", type=int, default=fock_oracle.DEFAULT_TRUNC)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", required=True, help="comparison CSV path")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("estimate", help="SI-unit estimators")
    p.add_argument("what", choices=("coupling-time", "hawking-temp", "radiation-density"))
    p.add_argument("--msun", type=float, help="black hole mass in solar masses")
    p.add_argument("--dl", type=float, default=1.0, help="cavity wall thickness (m)")
    p.add_argument("--vc", type=float, default=1.0, help="cavity volume (m^3)")
    p.add_argument("--tbh", type=float, help="black hole temperature override (K)")
    p.add_argument("--temp", type=float, help="radiation temperature (K)")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("tev", help="TeV-gravity length scales")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mstar", type=float, required=True, help="fundamental scale (TeV)")
    p.add_argument("--mbh", type=float, required=True, help="black hole mass (TeV)")
    p.set_defaults(func=cmd_tev)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        if getattr(args, "tol", None) is None and hasattr(args, "tol"):
            args.tol = default_tol()
        return args.func(args)
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except PhysicsDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PHYSICS


if __name__ == "__main__":
    sys.exit(main())
