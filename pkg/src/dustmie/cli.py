"""Command-line front end.

Subcommands emit figure-ready sweep tables (CSV or JSON):

  qext         extinction efficiency vs scale parameter or frequency
  spectrum     size PDF / number-density spectrum vs radius per altitude
  attenuation  dust attenuation coefficient vs altitude or frequency
  pathloss     single-shot or Monte-Carlo link budget

Exit codes: 0 success, 2 usage/config error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import configparser
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields

import numpy as np

from .channel import (
    AltitudeProfile,
    LinkGeometry,
    dust_attenuation_coefficient,
    path_loss,
)
from .constants import CONSTANTS
from .dustfield import DustLayerModel, lognormal_params, size_pdf
from .errors import ConfigError, DustmieError, QuadratureError, \
    RecurrenceOverflowError, SingularDenominatorError
from .mie import (
    ParticleState,
    WaveSpec,
    charged_coefficient,
    collision_frequency,
    extinction_efficiency_x,
    scale_parameter,
    surface_plasma_frequency,
)
from .sweeps import SweepTable, config_hash, sweep_grid

ENV_CONFIG = "DUSTMIE_CONFIG"

# The dust refractive index is an assumption, not measured ground truth: the
# source data never specifies m for SiO2 dust at THz frequencies.
DEFAULT_M = 2.0 - 0.025j


@dataclass
class RunConfig:
    f: float = 300e9            # Hz
    r: float = 20e-6            # m
    ne: int = 10
    T: float = 300.0            # K
    m: complex = DEFAULT_M
    n0: float | None = None     # particles / m^3; no defensible default
    d: float = 1000.0           # m
    d0: float = 10.0            # m
    h0: float = 10000.0         # m
    theta_deg: float = 90.0
    scenario: str = "LoS"
    n_i: float | None = None
    sigma_i: float | None = None

    def items(self):
        return [(f.name, getattr(self, f.name)) for f in fields(self)]


_SECTIONS = {
    "wave": {"f": float},
    "particle": {"r": float, "ne": int, "t": float, "m": complex},
    "dust": {"n0": float},
    "link": {"d": float, "d0": float, "h0": float, "theta_deg": float,
             "scenario": str, "n_i": float, "sigma_i": float},
}
_KEY_ALIASES = {"t": "T"}


def load_config(path: str) -> RunConfig:
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigError(f"cannot read config file {path}")
    cfg = RunConfig()
    for section in parser.sections():
        if section not in _SECTIONS:
            raise ConfigError(f"unknown config section [{section}]")
        for key, raw in parser.items(section):
            if key not in _SECTIONS[section]:
                raise ConfigError(f"unknown config key {key!r} in [{section}]")
            conv = _SECTIONS[section][key]
            try:
                value = conv(raw)
            except ValueError as exc:
                raise ConfigError(f"bad value for {key}: {raw!r}") from exc
            setattr(cfg, _KEY_ALIASES.get(key, key), value)
    return cfg


def _float_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad numeric list {text!r}") from exc


def _base_metadata(cfg: RunConfig, args) -> dict:
    meta = {f"config.{k}": v for k, v in cfg.items()}
    meta.update({
        "command": args.command,
        "format": args.format,
        "ge_mode": args.mode,
        "units_mode": args.units,
        "seed": args.seed,
        "config_hash": config_hash(cfg.items()),
    })
    return meta


def _map_jobs(fn, values, jobs: int):
    if jobs <= 1:
        return [fn(v) for v in values]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, values))


def _apply_overrides(cfg: RunConfig, args) -> None:
    for attr in ("f", "r", "ne", "T", "n0", "d", "d0", "h0", "theta_deg",
                 "scenario", "n_i", "sigma_i"):
        value = getattr(args, attr, None)
        if value is not None:
            setattr(cfg, attr, value)
    if getattr(args, "m", None) is not None:
        try:
            cfg.m = complex(args.m)
        except ValueError as exc:
            raise ConfigError(f"bad refractive index {args.m!r}") from exc


def _particle_template(cfg: RunConfig, ne: int | None = None) -> ParticleState:
    return ParticleState(cfg.r, cfg.ne if ne is None else ne, cfg.T, cfg.m)


def cmd_qext(cfg: RunConfig, args) -> SweepTable:
    grid = sweep_grid(args.start, args.stop, args.count, args.spacing)
    gamma_s = collision_frequency(cfg.T)

    if args.sweep == "x" and args.group_r:
        raise ConfigError("grouping by radius only applies to frequency sweeps")
    if args.group_r:
        groups = [("r=%g_m" % r, ("r", r)) for r in _float_list(args.group_r)]
    else:
        ne_list = _float_list(args.group_ne) if args.group_ne else [0, 10, 100]
        groups = [("Ne=%g" % ne, ("ne", int(ne))) for ne in ne_list]

    def q_at(point: float, kind: str, value) -> float:
        if args.sweep == "x":
            w = WaveSpec.from_frequency(cfg.f)
            x = point
            r = x * w.wavelength / (2 * math.pi)
        else:
            w = WaveSpec.from_frequency(point)
            r = value if kind == "r" else cfg.r
            x = scale_parameter(r, w.wavelength)
        ne = value if kind == "ne" else cfg.ne
        omega_s = surface_plasma_frequency(ne, r)
        g_e = charged_coefficient(x, w.omega, omega_s, gamma_s, mode=args.mode)
        return extinction_efficiency_x(x, cfg.m, g_e).q_ext

    def row(point: float) -> list[float]:
        return [point] + [q_at(point, kind, value) for _, (kind, value) in groups]

    rows = _map_jobs(row, list(grid), args.jobs)
    names = [args.sweep] + [f"q_ext[{label}]" for label, _ in groups]
    units = ["1" if args.sweep == "x" else "Hz"] + ["1"] * len(groups)
    table = SweepTable(names, units, rows, _base_metadata(cfg, args))
    table.metadata.update(sweep=args.sweep, start=args.start, stop=args.stop,
                          count=args.count, spacing=args.spacing)
    return table


def cmd_spectrum(cfg: RunConfig, args) -> SweepTable:
    heights = _float_list(args.heights)
    grid = sweep_grid(args.start, args.stop, args.count, args.spacing)
    meta = _base_metadata(cfg, args)
    meta.update(sweep="r", start=args.start, stop=args.stop,
                count=args.count, spacing=args.spacing)

    names = ["r"] + [f"pdf[h={h:g}m]" for h in heights]
    units = ["mm"] + ["1/mm"] * len(heights)
    with_nd = cfg.n0 is not None
    if with_nd:
        names += [f"n_d[h={h:g}m]" for h in heights]
        units += ["1/(m^3 mm)"] * len(heights)
    else:
        meta["warning"] = "n0 unset; number-density columns omitted"

    rows = []
    for r in grid:
        pdf = [size_pdf(float(r), h) for h in heights]
        row = [float(r)] + pdf
        if with_nd:
            row += [cfg.n0 * v for v in pdf]
        rows.append(row)
    return SweepTable(names, units, rows, meta)


def cmd_attenuation(cfg: RunConfig, args) -> SweepTable:
    if cfg.n0 is None and not args.normalized:
        raise ConfigError(
            "n0 is required for absolute attenuation "
            "(pass --n0 / config [dust] n0, or use --normalized)"
        )
    n0 = 1.0 if args.normalized else cfg.n0
    layer = DustLayerModel(n0=n0)
    grid = sweep_grid(args.start, args.stop, args.count, args.spacing)
    ne_list = _float_list(args.group_ne) if args.group_ne else [0, 1e3, 1e6]
    unit_modes = ["physical", "paper"] if args.units == "both" else [args.units]

    def k_at(point: float, ne: float, units_mode: str) -> float:
        if args.sweep == "h":
            w = WaveSpec.from_frequency(cfg.f)
            h = point
        else:
            w = WaveSpec.from_frequency(point)
            h = cfg.h0
        particle = _particle_template(cfg, int(ne))
        return dust_attenuation_coefficient(
            h, w, layer, particle, units_mode=units_mode, ge_mode=args.mode)

    def row(point: float) -> list[float]:
        return [point] + [k_at(point, ne, um)
                          for um in unit_modes for ne in ne_list]

    rows = _map_jobs(row, list(grid), args.jobs)
    names = [args.sweep]
    units = ["m" if args.sweep == "h" else "Hz"]
    for um in unit_modes:
        suffix = "" if len(unit_modes) == 1 else f";{um}"
        names += [f"k_dust[Ne={ne:g}{suffix}]" for ne in ne_list]
        units += ["dB/km"] * len(ne_list)
    meta = _base_metadata(cfg, args)
    meta.update(sweep=args.sweep, start=args.start, stop=args.stop,
                count=args.count, spacing=args.spacing,
                normalized_per_n0=bool(args.normalized))
    return SweepTable(names, units, rows, meta)


def cmd_pathloss(cfg: RunConfig, args) -> SweepTable:
    if cfg.n_i is None or cfg.sigma_i is None:
        raise ConfigError("path loss requires n_i and sigma_i (no defaults exist)")
    geometry = LinkGeometry(
        h0=cfg.h0, theta=math.radians(cfg.theta_deg), d=cfg.d, d0=cfg.d0,
        scenario=cfg.scenario, n_i=cfg.n_i, sigma_i=cfg.sigma_i,
    )
    w = WaveSpec.from_frequency(cfg.f)
    layer = DustLayerModel(n0=cfg.n0 if cfg.n0 is not None else 0.0)
    particle = _particle_template(cfg)
    k_abs = (AltitudeProfile.from_file(args.kabs_profile)
             if args.kabs_profile else None)
    meta = _base_metadata(cfg, args)
    meta["trials"] = args.trials

    base = path_loss(geometry, w, layer, particle, shadow_seed=None,
                     k_abs=k_abs, units_mode=args.units, ge_mode=args.mode)
    if args.trials <= 1:
        if args.seed is None:
            chi = 0.0
        else:
            chi = float(np.random.default_rng(args.seed).normal(0.0, cfg.sigma_i))
        names = ["fspl", "distance_term", "shadow", "dust_loss", "total"]
        rows = [[base.fspl_db, base.distance_term_db, chi, base.dust_loss_db,
                 base.total_db + chi]]
        return SweepTable(names, ["dB"] * 5, rows, meta)

    rng = np.random.default_rng(args.seed)
    chi = rng.normal(0.0, cfg.sigma_i, size=args.trials)
    totals = base.total_db + chi
    names = ["trials", "mean_total", "std_total", "mean_shadow", "std_shadow"]
    units = ["1", "dB", "dB", "dB", "dB"]
    rows = [[float(args.trials), float(np.mean(totals)),
             float(np.std(totals, ddof=1)), float(np.mean(chi)),
             float(np.std(chi, ddof=1))]]
    return SweepTable(names, units, rows, meta)


def _add_sweep_args(sub, default_start, default_stop):
    sub.add_argument("--start", type=float, default=default_start)
    sub.add_argument("--stop", type=float, default=default_stop)
    sub.add_argument("--count", type=int, default=100)
    sub.add_argument("--spacing", choices=["linear", "log"], default="linear")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help=f"config file (or ${ENV_CONFIG})")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--mode", choices=["full", "approx"], default="full",
                        help="charge-coefficient evaluation mode")
    common.add_argument("--units", choices=["physical", "paper", "both"],
                        default="physical")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--kabs-profile", dest="kabs_profile", default=None,
                        help="two-column text profile: altitude_m dB_per_km")
    for name, conv in [("--f", float), ("--r", float), ("--ne", int),
                       ("--T", float), ("--m", str), ("--n0", float),
                       ("--d", float), ("--d0", float), ("--h0", float),
                       ("--theta-deg", float), ("--scenario", str),
                       ("--n-i", float), ("--sigma-i", float)]:
        common.add_argument(name, type=conv, default=None,
                            dest=name.lstrip("-").replace("-", "_"))

    parser = argparse.ArgumentParser(
        prog="dustmie",
        description="THz attenuation by charged dust: Mie sweeps and link budgets",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    q = subs.add_parser("qext", parents=[common], help="extinction efficiency sweep")
    q.add_argument("--sweep", choices=["x", "f"], default="x")
    _add_sweep_args(q, 0.02, 2.0)
    q.add_argument("--group-ne", default=None, help="comma list of electron counts")
    q.add_argument("--group-r", default=None, help="comma list of radii in m")

    s = subs.add_parser("spectrum", parents=[common], help="size PDF / number density sweep")
    _add_sweep_args(s, 0.005, 1.0)
    s.add_argument("--heights", default="100,150,200", help="comma list, m")

    a = subs.add_parser("attenuation", parents=[common], help="dust attenuation coefficient sweep")
    a.add_argument("--sweep", choices=["h", "f"], default="h")
    _add_sweep_args(a, 100.0, 200.0)
    a.add_argument("--group-ne", default=None, help="comma list of electron counts")
    a.add_argument("--normalized", action="store_true",
                   help="emit per-(N0) attenuation when n0 is unknown")

    p = subs.add_parser("pathloss", parents=[common], help="link budget evaluation")
    p.add_argument("--trials", type=int, default=1,
                   help=">1 runs a Monte-Carlo shadow-fading summary")

    return parser


_COMMANDS = {
    "qext": cmd_qext,
    "spectrum": cmd_spectrum,
    "attenuation": cmd_attenuation,
    "pathloss": cmd_pathloss,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config_path = args.config or os.environ.get(ENV_CONFIG)
        cfg = load_config(config_path) if config_path else RunConfig()
        _apply_overrides(cfg, args)
        table = _COMMANDS[args.command](cfg, args)
    except ConfigError as exc:
        print(f"dustmie: config error: {exc}", file=sys.stderr)
        return 2
    except (QuadratureError, RecurrenceOverflowError,
            SingularDenominatorError) as exc:
        print(f"dustmie: numerical failure: {exc}", file=sys.stderr)
        return 3
    except DustmieError as exc:
        print(f"dustmie: error: {exc}", file=sys.stderr)
        return 2

    if args.out:
        table.write(args.out, fmt=args.format)
    else:
        sys.stdout.write(table.to_csv() if args.format == "csv" else table.to_json())
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
