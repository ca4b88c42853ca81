"""Figure-reproduction presets.

Each preset regenerates one of the standard result figures as a long-format
CSV: the varied parameter is the first column, followed by the sampled
coordinate and observables.  Radial presets sample the velocity profile at a
fixed station; axial presets sweep the constricted region z in [0, 3.5].

Where a caption only says "different values", the sets below are
representative choices recorded in the CSV metadata.  The hematocrit sets
differ between the radial and axial presets on purpose: the series solution
converges only while the wall radius stays below the viscosity-vanishing
radius (a1/a2)^(1/m), and the tapered wall at the downstream end of the
axial range (eta ~ 1.316) caps the usable hematocrit near 0.3.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .artery import FlowParams
from .config import KEY_TO_FIELD, RunConfig
from .csvio import format_value, params_metadata, write_csv
from .hemodynamics import axial_sweep, velocity_profile

AXIAL_Z_SPAN = (0.0, 3.5)
AXIAL_STATIONS = 351
RADIAL_SAMPLES = 101


@dataclass(frozen=True)
class FigurePreset:
    name: str
    kind: str  # "radial" | "axial"
    varied: str  # config key, or "z" for multi-station profiles
    values: tuple
    z: float | None = None  # radial station, ignored for varied == "z"
    focus: str | None = None  # observable highlighted by the plot (axial)


PRESETS: dict[str, FigurePreset] = {
    "fig3": FigurePreset("fig3", "radial", "z", (0.5, 1.0, 2.0, 3.0, 3.5)),
    "fig4": FigurePreset("fig4", "axial", "l", (1.0, 1.5, 2.0), focus="u_center"),
    "fig5": FigurePreset("fig5", "radial", "alpha", (0.0, 0.05, 0.09), z=2.0),
    "fig6": FigurePreset("fig6", "radial", "hartmann", (0.0, 2.5, 5.0), z=2.0),
    "fig7": FigurePreset("fig7", "radial", "permeability", (0.1, 0.25, 1.0), z=2.0),
    "fig8": FigurePreset("fig8", "radial", "hematocrit", (0.2, 0.4, 0.6), z=2.0),
    "fig9": FigurePreset("fig9", "axial", "hartmann", (0.0, 2.5, 5.0), focus="dpdz_bar"),
    "fig10": FigurePreset("fig10", "axial", "permeability", (0.1, 0.25, 1.0), focus="dpdz_bar"),
    "fig11": FigurePreset("fig11", "axial", "hematocrit", (0.1, 0.2, 0.3), focus="dpdz_bar"),
    "fig12": FigurePreset("fig12", "axial", "alpha", (0.0, 0.05, 0.09), focus="dpdz_bar"),
    "fig13": FigurePreset("fig13", "axial", "hematocrit", (0.1, 0.2, 0.3), focus="tau_bar"),
    "fig14": FigurePreset("fig14", "axial", "alpha", (0.0, 0.05, 0.09), focus="tau_bar"),
}


def _vary(params: FlowParams, key: str, value) -> FlowParams:
    if key == "m":
        return replace(params, m=int(value))
    return replace(params, **{KEY_TO_FIELD.get(key, key): value})


def preset_rows(preset: FigurePreset, params: FlowParams, workers=None):
    """Compute (columns, rows) for one preset with ``params`` as the base."""
    if preset.kind == "radial":
        columns = [preset.varied, "xi", "u_bar"]
        rows = []
        for value in preset.values:
            if preset.varied == "z":
                p, z = params, float(value)
            else:
                p, z = _vary(params, preset.varied, value), preset.z
            profile = velocity_profile(p, z, RADIAL_SAMPLES)
            rows.extend(
                (value, xi, u) for xi, u in zip(profile.xi, profile.u_bar)
            )
        return columns, rows

    columns = [preset.varied, "z", "eta", "dpdz_bar", "tau_bar", "u_center"]
    z_grid = np.linspace(*AXIAL_Z_SPAN, AXIAL_STATIONS)
    rows = []
    for value in preset.values:
        p = _vary(params, preset.varied, value)
        for rec in axial_sweep(p, z_grid, workers=workers):
            rows.append((value, rec.z, rec.eta, rec.dpdz_bar, rec.tau_bar, rec.u_center))
    return columns, rows


def write_preset_csv(preset: FigurePreset, config: RunConfig):
    """Emit <name>.csv into the configured output directory."""
    columns, rows = preset_rows(preset, config.params, workers=config.workers)
    if preset.kind == "radial":
        plot = [("plot_x", "xi"), ("plot_y", "u_bar"), ("plot_series", preset.varied)]
        station = [] if preset.varied == "z" else [("z", format_value(preset.z))]
    else:
        plot = [("plot_x", "z"), ("plot_y", preset.focus), ("plot_series", preset.varied)]
        station = [
            ("z_from", format_value(AXIAL_Z_SPAN[0])),
            ("z_to", format_value(AXIAL_Z_SPAN[1])),
            ("steps", str(AXIAL_STATIONS)),
        ]
    metadata = [
        ("command", "figures"),
        ("preset", preset.name),
        ("varied", preset.varied),
        ("values", " ".join(format_value(v) for v in preset.values)),
        *station,
        *params_metadata(config.params),
        *plot,
    ]
    return write_csv(config.out / f"{preset.name}.csv", columns, rows, metadata)


def select_presets(name: str) -> list[FigurePreset]:
    if name == "all":
        return [PRESETS[k] for k in sorted(PRESETS, key=lambda s: int(s[3:]))]
    if name not in PRESETS:
        valid = ", ".join(sorted(PRESETS, key=lambda s: int(s[3:])))
        raise KeyError(f"unknown preset {name!r} (expected one of {valid}, or all)")
    return [PRESETS[name]]
