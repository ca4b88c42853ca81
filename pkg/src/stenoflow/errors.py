"""Exception types shared across the solver stack."""


class StenoflowError(Exception):
    """Base class for all stenoflow errors."""


class GeometryInvalid(StenoflowError):
    """Wall radius is non-positive somewhere on the artery segment."""


class NoConvergence(StenoflowError):
    """Series truncation failed to meet the tail tolerance within n_max terms."""


class DomainError(StenoflowError):
    """Radial coordinate lies outside the station's lumen [0, eta]."""


class DegenerateFlow(StenoflowError):
    """Flux-closure denominator is non-positive; signals numerical pathology."""


class SingularMatrix(StenoflowError):
    """Finite-difference operator could not be factorized."""


class SweepError(StenoflowError):
    """One or more stations of an axial sweep failed."""

    def __init__(self, failures):
        # failures: list of (station_index, z, exception)
        self.failures = list(failures)
        summary = "; ".join(
            f"station {i} (z={z:g}): {exc}" for i, z, exc in self.failures
        )
        super().__init__(f"{len(self.failures)} station(s) failed: {summary}")


class ConfigError(StenoflowError):
    """Bad or mutually inconsistent run configuration."""
