"""Artery model: wall geometry, taper, hematocrit profile and blood viscosity.

All axial lengths (``z``, ``onset``, ``spacing``, ``length``) are measured in
units of the unobstructed wall radius R0, and the radial coordinate is
``xi = r/R0``.  The segment carries two merged constrictions: a quartic
narrowing starts at ``z = onset``, extends over ``1.5 * spacing`` and is
superimposed on a linear taper ``a(z) = 1 + z*tan(alpha)``:

    R(z)/R0 = a(z) * (1 - severity * P(z - onset))        inside the narrowing
            = a(z)                                        elsewhere

with the narrowing polynomial (``s`` measured from the onset, ``l`` the
throat-to-throat distance)

    P(s) = (11/32) l^3 s - (47/48) l^2 s^2 + l s^3 - (1/3) s^4.

``P`` vanishes at both ends and is mirror-symmetric about ``s = 3l/4``; for
``l = 2`` it reaches 0.625 at ``s = l/4`` and ``s = 5l/4``, the conventional
throat stations.  (The exact interior extrema of the quartic sit slightly
outside those stations; see :meth:`ArteryGeometry.constriction_extrema`.)

Blood is a Newtonian fluid whose viscosity varies with the local red-cell
fraction h(xi):

    h(xi)  = hematocrit * (1 - xi**m)
    mu/mu0 = 1 + beta * h(xi)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import GeometryInvalid

#: Interior extrema of the narrowing polynomial sit at s/l = 3/4 +- this.
_EXTREMUM_OFFSET = math.sqrt(7.0 / 32.0)


@dataclass(frozen=True)
class FlowParams:
    """Physical and numerical inputs for one artery configuration.

    Attributes
    ----------
    alpha : float
        Taper angle in radians; positive widens the vessel downstream.
    hematocrit : float
        Maximum red-cell volume fraction, reached on the axis.
    beta : float
        Viscosity-hematocrit coefficient (2.5 for blood).
    m : int
        Hematocrit profile exponent, >= 2.
    hartmann : float
        Ratio of magnetic to viscous forces (squared in the momentum balance).
    permeability : float
        Dimensionless permeability of the porous medium, k_bar / R0**2.
    spacing : float
        Distance between the two constriction throats, in R0 units.
    onset : float
        Axial position where the narrowing begins.
    length : float
        Length of the modelled artery segment.
    severity : float
        Scale factor on the narrowing polynomial; 1.0 is the standard shape,
        smaller values model milder constrictions.
    tol : float
        Relative tail tolerance for series truncation.
    n_max : int
        Hard cap on the series order.
    """

    alpha: float = 0.09
    hematocrit: float = 0.2
    beta: float = 2.5
    m: int = 2
    hartmann: float = 2.5
    permeability: float = 0.25
    spacing: float = 2.0
    onset: float = 0.5
    length: float = 5.0
    severity: float = 1.0
    tol: float = 1e-12
    n_max: int = 256

    def __post_init__(self):
        if not 0.0 <= self.hematocrit < 1.0:
            raise ValueError(f"hematocrit must satisfy 0 <= hematocrit < 1, got {self.hematocrit}")
        if self.beta <= 0.0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if not isinstance(self.m, (int, np.integer)) or self.m < 2:
            raise ValueError(f"m must be an integer >= 2, got {self.m!r}")
        if self.hartmann < 0.0:
            raise ValueError(f"hartmann must be non-negative, got {self.hartmann}")
        if self.permeability <= 0.0:
            raise ValueError(f"permeability must be positive, got {self.permeability}")
        if self.spacing <= 0.0:
            raise ValueError(f"l (spacing) must be positive, got {self.spacing}")
        if self.onset < 0.0:
            raise ValueError(f"d (onset) must be non-negative, got {self.onset}")
        if self.onset + 1.5 * self.spacing > self.length:
            raise ValueError(
                f"narrowing must fit in the segment: d + 3l/2 = "
                f"{self.onset + 1.5 * self.spacing:g} exceeds length {self.length:g}"
            )
        if self.severity < 0.0:
            raise ValueError(f"severity must be non-negative, got {self.severity}")
        if self.tol <= 0.0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.n_max < 8:
            raise ValueError(f"n_max must be at least 8, got {self.n_max}")

    @property
    def axis_viscosity(self) -> float:
        """Viscosity ratio mu/mu0 on the centerline: 1 + beta*hematocrit."""
        return 1.0 + self.beta * self.hematocrit

    @property
    def viscosity_drop(self) -> float:
        """Fall of mu/mu0 between axis and nominal wall: beta*hematocrit."""
        return self.beta * self.hematocrit

    def hematocrit_at(self, xi):
        """Red-cell fraction at radius xi = r/R0.

        Evaluates hematocrit * (1 - xi**m).  For xi > 1 (tapered sections
        where the wall lies beyond the nominal radius) the formula is applied
        as written and may return negative values, meaning the local
        viscosity drops below the plasma value.
        """
        return self.hematocrit * (1.0 - np.asarray(xi, dtype=float) ** self.m)

    def viscosity_factor(self, xi):
        """Dimensionless viscosity mu(r)/mu0 = 1 + beta*h(xi) at radius xi."""
        return 1.0 + self.beta * self.hematocrit_at(xi)


@dataclass(frozen=True)
class ArteryGeometry:
    """Pure evaluator of the wall shape for a fixed parameter set.

    Construction fails with :class:`GeometryInvalid` if the wall radius is
    not strictly positive anywhere on [0, length].  The check samples 4096
    uniform stations plus every landmark and interior extremum; since the
    narrowing is a quartic this is exhaustive in practice.
    """

    params: FlowParams

    def __post_init__(self):
        p = self.params
        zs = np.concatenate(
            [
                np.linspace(0.0, p.length, 4096),
                [z for _, z in self.landmarks()],
                self.constriction_extrema(),
            ]
        )
        taper = self.taper_factor(zs)
        if taper.min() <= 0.0:
            z_bad = zs[int(np.argmin(taper))]
            raise GeometryInvalid(
                f"taper factor is non-positive at z={z_bad:.4f} (alpha={p.alpha:g})"
            )
        narrowing = self.constriction(zs - p.onset)
        if narrowing.max() >= 1.0:
            z_bad = zs[int(np.argmax(narrowing))]
            raise GeometryInvalid(
                f"constriction reaches the axis near z={z_bad:.4f} "
                f"(depth {narrowing.max():.4g}; reduce severity or spacing)"
            )

    def taper_factor(self, z):
        """Linear taper a(z) = 1 + z*tan(alpha)."""
        return 1.0 + np.asarray(z, dtype=float) * math.tan(self.params.alpha)

    def constriction(self, s):
        """Fractional narrowing 1 - R/(R0*a) at distance s past the onset.

        Zero outside [0, 1.5*spacing].
        """
        p = self.params
        s = np.asarray(s, dtype=float)
        l = p.spacing
        inside = (s >= 0.0) & (s <= 1.5 * l)
        sm = np.where(inside, s, 0.0)
        poly = (
            (11.0 / 32.0) * l**3 * sm
            - (47.0 / 48.0) * l**2 * sm**2
            + l * sm**3
            - sm**4 / 3.0
        )
        return np.where(inside, p.severity * poly, 0.0)

    def radius_ratio(self, z):
        """Dimensionless wall radius eta(z) = R(z)/R0."""
        z = np.asarray(z, dtype=float)
        out = self.taper_factor(z) * (1.0 - self.constriction(z - self.params.onset))
        return out if out.ndim else float(out)

    def landmarks(self):
        """Named stations of the narrowing: onset, throats, overlap, outset.

        Throat labels follow the conventional quarter-spacing stations; the
        quartic's exact interior extrema sit slightly outside them (see
        :meth:`constriction_extrema`).
        """
        d, l = self.params.onset, self.params.spacing
        return [
            ("onset", d),
            ("primary_throat", d + 0.25 * l),
            ("overlap", d + 0.75 * l),
            ("secondary_throat", d + 1.25 * l),
            ("outset", d + 1.5 * l),
        ]

    def constriction_extrema(self):
        """Axial positions where the narrowing polynomial is stationary.

        The two maxima (deepest wall points) lie at s/l = 3/4 -+ sqrt(7/32),
        about 0.282 and 1.218; the local minimum between them is at s = 3l/4.
        """
        d, l = self.params.onset, self.params.spacing
        return [
            d + (0.75 - _EXTREMUM_OFFSET) * l,
            d + 0.75 * l,
            d + (0.75 + _EXTREMUM_OFFSET) * l,
        ]


@lru_cache(maxsize=64)
def geometry_for(params: FlowParams) -> ArteryGeometry:
    """Validated geometry for a parameter set, cached across calls."""
    return ArteryGeometry(params)
