#!/usr/bin/env python3
"""Walk through the artery geometry: landmarks, taper, constriction depth.

Prints the named stations of the double constriction and shows how the
linear taper reshapes the wall, then saves wall-shape plots.

Usage: python3 demos/geometry_tour.py [output-dir]
"""

import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from stenoflow import ArteryGeometry, FlowParams

OUT = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    print("=" * 64)
    print("Artery geometry tour")
    print("=" * 64)

    straight = ArteryGeometry(FlowParams(alpha=0.0))
    tapered = ArteryGeometry(FlowParams())  # alpha = 0.09 rad

    print("\nNamed stations (l = 2, d = 0.5):")
    for label, z in straight.landmarks():
        eta0 = straight.radius_ratio(z)
        eta9 = tapered.radius_ratio(z)
        print(f"  {label:17s} z = {z:4.1f}   eta = {eta0:.4f} (straight)"
              f"   {eta9:.4f} (tapered)")

    print("\nThe quartic's exact interior extrema sit slightly off the")
    print("conventional quarter-spacing throats:")
    for z in straight.constriction_extrema():
        print(f"  stationary point at z = {z:.6f}  (eta = {straight.radius_ratio(z):.6f})")

    print("\nMilder constrictions via the severity scale:")
    for severity in (1.0, 0.5, 0.25):
        g = ArteryGeometry(FlowParams(alpha=0.0, severity=severity))
        print(f"  severity = {severity:4.2f} -> throat radius {g.radius_ratio(1.0):.4f}")

    z = np.linspace(0.0, 5.0, 701)
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(z, straight.radius_ratio(z), label="alpha = 0 (straight)")
    ax.plot(z, tapered.radius_ratio(z), label="alpha = 0.09 (diverging)")
    ax.plot(z, -straight.radius_ratio(z), color="C0", alpha=0.4)
    ax.plot(z, -tapered.radius_ratio(z), color="C1", alpha=0.4)
    for label, zl in straight.landmarks():
        ax.axvline(zl, color="gray", lw=0.5, ls=":")
    ax.set_xlabel("z")
    ax.set_ylabel(r"$\pm\,R(z)/R_0$")
    ax.set_title("Overlapping double constriction with and without taper")
    ax.legend()
    fig.tight_layout()
    path = OUT / "geometry_wall_shape.svg"
    fig.savefig(path)
    print(f"\nWall-shape plot saved to {path}")


if __name__ == "__main__":
    main()
