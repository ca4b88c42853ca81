"""Command-line front end.

Subcommands::

    stenoflow geometry  [--samples N]            wall shape z, eta
    stenoflow profile   --z Z [--samples N]      radial velocity profile
    stenoflow sweep     [--z-from --z-to --steps] axial observables
    stenoflow validate  [--n N]                  series vs finite-difference
    stenoflow figures   [--preset figN|all]      figure-reproduction CSVs

Every physical parameter is a global flag (--alpha, --hematocrit, --beta,
--m, --hartmann, --permeability, --l, --d, --length, --severity, --tol,
--n-max); ``--config FILE`` reads the same keys from a flat key = value file
with flags taking precedence.  Exit codes: 2 bad configuration, 3 series
non-convergence, 4 invalid geometry.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .artery import geometry_for
from .config import RunConfig, parse_config_text, resolve
from .csvio import format_value, params_metadata, write_csv
from .errors import ConfigError, GeometryInvalid, NoConvergence, StenoflowError, SweepError
from .hemodynamics import axial_sweep, velocity_profile
from .plotting import emit_plot
from .presets import select_presets, write_preset_csv

EXIT_CONFIG = 2
EXIT_NO_CONVERGENCE = 3
EXIT_BAD_GEOMETRY = 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    phys = common.add_argument_group("physical parameters")
    phys.add_argument("--alpha", type=float, help="taper angle [rad]")
    phys.add_argument("--hematocrit", type=float, help="axis hematocrit fraction H")
    phys.add_argument("--beta", type=float, help="viscosity-hematocrit coefficient")
    phys.add_argument("--m", type=int, help="hematocrit profile exponent (>= 2)")
    phys.add_argument("--hartmann", type=float, help="magnetic/viscous force ratio M")
    phys.add_argument("--permeability", type=float, help="porous permeability k")
    phys.add_argument("--l", type=float, help="throat-to-throat distance [R0]")
    phys.add_argument("--d", type=float, help="narrowing onset position [R0]")
    phys.add_argument("--length", type=float, help="segment length [R0]")
    phys.add_argument("--severity", type=float, help="narrowing scale (1 = standard)")
    num = common.add_argument_group("numerics and output")
    num.add_argument("--tol", type=float, help="series tail tolerance")
    num.add_argument("--n-max", type=int, dest="n_max", help="series order cap")
    num.add_argument("--config", type=Path, help="key = value config file")
    num.add_argument("--out", type=str, help="output directory (default $STENOFLOW_OUT or .)")
    num.add_argument("--format", type=str, choices=["csv", "csv+plot"],
                     help="emit CSV only or CSV plus SVG")
    num.add_argument("--workers", type=int, help="threads for axial sweeps")

    parser = argparse.ArgumentParser(
        prog="stenoflow",
        description="Steady MHD blood flow through a tapered overlapping-stenosed artery.",
    )
    parser.add_argument("--version", action="version", version=f"stenoflow {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("geometry", parents=[common], help="tabulate the wall shape")
    p.add_argument("--samples", type=int, help="number of z stations (default 351)")

    p = sub.add_parser("profile", parents=[common], help="radial velocity profile")
    p.add_argument("--z", type=float, help="axial station")
    p.add_argument("--samples", type=int, help="number of radial points (default 101)")

    p = sub.add_parser("sweep", parents=[common], help="axial observable sweep")
    p.add_argument("--z-from", type=float, dest="z_from")
    p.add_argument("--z-to", type=float, dest="z_to")
    p.add_argument("--steps", type=int)

    p = sub.add_parser("validate", parents=[common],
                       help="cross-check the series against the finite-difference solver")
    p.add_argument("--n", type=int, help="finite-difference grid size (odd, default 801)")

    p = sub.add_parser("figures", parents=[common], help="figure-reproduction presets")
    p.add_argument("--preset", type=str, help="fig3..fig14 or all (default)")

    return parser


def _run_geometry(config: RunConfig):
    samples = config.samples or 351
    geom = geometry_for(config.params)
    z = np.linspace(0.0, config.params.length, samples)
    eta = geom.radius_ratio(z)
    metadata = [
        ("command", "geometry"),
        ("samples", str(samples)),
        *params_metadata(config.params),
        ("plot_x", "z"),
        ("plot_y", "eta"),
    ]
    return [write_csv(config.out / "geometry.csv", ["z", "eta"], zip(z, eta), metadata)]


def _run_profile(config: RunConfig):
    samples = config.samples or 101
    profile = velocity_profile(config.params, config.z, samples)
    metadata = [
        ("command", "profile"),
        ("z", format_value(config.z)),
        ("eta", format_value(profile.eta)),
        ("samples", str(samples)),
        *params_metadata(config.params),
        ("plot_x", "xi"),
        ("plot_y", "u_bar"),
    ]
    return [
        write_csv(
            config.out / "profile.csv",
            ["xi", "u_bar"],
            zip(profile.xi, profile.u_bar),
            metadata,
        )
    ]


def _run_sweep(config: RunConfig):
    z = np.linspace(config.z_from, config.z_to, config.steps)
    records = axial_sweep(config.params, z, workers=config.workers)
    rows = [(r.z, r.eta, r.dpdz_bar, r.tau_bar, r.u_center) for r in records]
    metadata = [
        ("command", "sweep"),
        ("z_from", format_value(config.z_from)),
        ("z_to", format_value(config.z_to)),
        ("steps", str(config.steps)),
        *params_metadata(config.params),
        ("plot_x", "z"),
        ("plot_y", "dpdz_bar,tau_bar,u_center"),
    ]
    return [
        write_csv(
            config.out / "sweep.csv",
            ["z", "eta", "dpdz_bar", "tau_bar", "u_center"],
            rows,
            metadata,
        )
    ]


def _run_validate(config: RunConfig):
    # deferred import: scipy only needed on this path
    from dataclasses import replace

    from .fdsolver import self_convergence_order, series_fd_gap

    params = config.params
    threshold = 1e-4
    rows = []
    worst = 0.0
    for hartmann in (0.0, 2.5, 5.0):
        for hematocrit in (0.0, 0.2, 0.4):
            for permeability in (0.1, 0.25, 1.0):
                for m in (2, 4):
                    p = replace(
                        params, hematocrit=hematocrit, m=m,
                        hartmann=hartmann, permeability=permeability,
                    )
                    for eta in (0.375, 1.0):
                        gap = series_fd_gap(p, eta, config.oracle_n)
                        worst = max(worst, gap)
                        rows.append(
                            (hartmann, hematocrit, permeability, m, eta, config.oracle_n, gap)
                        )
    orders = [
        self_convergence_order(params, 0.625),
        self_convergence_order(params, 1.0),
    ]
    print(f"series vs finite-difference, n={config.oracle_n}, {len(rows)} cases")
    print("     M     H     k   m    eta    rel_err")
    for hartmann, hematocrit, permeability, m, eta, _, gap in rows:
        print(
            f"  {hartmann:4.1f}  {hematocrit:4.1f}  {permeability:4.2f}  {m}  "
            f"{eta:5.3f}  {gap:.3e}"
        )
    print(f"worst relative error: {worst:.3e} (threshold {threshold:g})")
    print(f"grid self-convergence orders: {orders[0]:.3f}, {orders[1]:.3f} (expect ~2)")
    metadata = [
        ("command", "validate"),
        ("threshold", format_value(threshold)),
        ("order_eta_0.625", format_value(orders[0])),
        ("order_eta_1.0", format_value(orders[1])),
        *params_metadata(params),
    ]
    path = write_csv(
        config.out / "validate.csv",
        ["hartmann", "hematocrit", "permeability", "m", "eta", "n", "rel_err"],
        rows,
        metadata,
    )
    if worst >= threshold:
        raise StenoflowError(
            f"series vs finite-difference mismatch: {worst:.3e} >= {threshold:g}"
        )
    return [path]


def _run_figures(config: RunConfig):
    paths = []
    try:
        presets = select_presets(config.preset)
    except KeyError as exc:
        raise ConfigError(f"bad value for key preset: {exc.args[0]}") from exc
    for preset in presets:
        paths.append(write_preset_csv(preset, config))
    return paths


_RUNNERS = {
    "geometry": _run_geometry,
    "profile": _run_profile,
    "sweep": _run_sweep,
    "validate": _run_validate,
    "figures": _run_figures,
}


def run(config: RunConfig) -> list[Path]:
    """Execute one resolved configuration; returns the files written."""
    config.out.mkdir(parents=True, exist_ok=True)
    written = _RUNNERS[config.command](config)
    if config.fmt == "csv+plot":
        for path in list(written):
            if path.name == "validate.csv":
                continue
            written.append(emit_plot(path))
    return written


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    flag_values = vars(args).copy()
    command = flag_values.pop("command")
    config_path = flag_values.pop("config", None)

    try:
        file_values = {}
        if config_path is not None:
            try:
                text = Path(config_path).read_text(encoding="utf-8")
            except OSError as exc:
                raise ConfigError(f"cannot read config file {config_path}: {exc}") from exc
            file_values = parse_config_text(text, source=str(config_path))
        config = resolve(command, file_values, flag_values)
        written = run(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NoConvergence, SweepError) as exc:
        if isinstance(exc, SweepError) and not any(
            isinstance(e, NoConvergence) for _, _, e in exc.failures
        ):
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except GeometryInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_GEOMETRY
    except StenoflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
