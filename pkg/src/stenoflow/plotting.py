"""Vector-graphics rendering of stenoflow CSV files.

Rendering is a pure function of the CSV content: the file's ``plot_x``,
``plot_y`` and optional ``plot_series`` metadata select the columns, and the
data rows supply every point.  Output is SVG next to the CSV unless an
explicit path is given.
"""

from __future__ import annotations

from pathlib import Path

from .errors import StenoflowError

AXIS_LABELS = {
    "xi": r"$\xi = r/R_0$",
    "u_bar": r"$\bar{u}$",
    "z": r"$z$",
    "eta": r"$\eta = R(z)/R_0$",
    "dpdz_bar": r"$\overline{dp/dz}$",
    "tau_bar": r"$\bar{\tau}$",
    "u_center": r"$\bar{u}(0)$",
    "rel_err": "relative error",
}

SERIES_LABELS = {
    "alpha": r"$\alpha$",
    "hematocrit": "H",
    "hartmann": "M",
    "permeability": "k",
    "l": "l",
    "z": "z",
    "m": "m",
}


def emit_plot(csv_path, out_path=None) -> Path:
    """Render one CSV to SVG; raises without writing if there is no data."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    from .csvio import read_csv

    csv_path = Path(csv_path)
    metadata, columns, data = read_csv(csv_path)
    if data.shape[0] == 0:
        raise StenoflowError(f"{csv_path}: no data rows, nothing to plot")
    x_col = metadata.get("plot_x")
    y_cols = metadata.get("plot_y", "").split(",")
    if x_col not in columns or not all(y in columns for y in y_cols):
        raise StenoflowError(
            f"{csv_path}: plot_x/plot_y metadata missing or not among columns {columns}"
        )
    series_col = metadata.get("plot_series")

    out_path = Path(out_path) if out_path else csv_path.with_suffix(".svg")
    fig, axes = plt.subplots(
        len(y_cols), 1, figsize=(7.0, 2.8 * len(y_cols)), sharex=True, squeeze=False
    )
    x_idx = columns.index(x_col)
    for ax, y_col in zip(axes[:, 0], y_cols):
        y_idx = columns.index(y_col)
        if series_col and series_col in columns and series_col != x_col:
            s_idx = columns.index(series_col)
            for value in dict.fromkeys(data[:, s_idx]):  # preserves file order
                mask = data[:, s_idx] == value
                label = f"{SERIES_LABELS.get(series_col, series_col)} = {value:g}"
                ax.plot(data[mask, x_idx], data[mask, y_idx], label=label)
            ax.legend()
        else:
            ax.plot(data[:, x_idx], data[:, y_idx])
        ax.set_ylabel(AXIS_LABELS.get(y_col, y_col))
        ax.grid(True, alpha=0.3)
    axes[-1, 0].set_xlabel(AXIS_LABELS.get(x_col, x_col))
    title = metadata.get("preset") or metadata.get("command") or csv_path.stem
    axes[0, 0].set_title(title)
    fig.tight_layout()
    fig.savefig(out_path, format="svg")
    plt.close(fig)
    return out_path
