"""Exception types shared across the toolkit.

Exit-code mapping used by the CLI: ConfigError -> 2, CapacityError -> 3,
NumericalDiagnosticError -> 4.
"""


class ConfigError(Exception):
    """Invalid or inconsistent configuration (flags, files, receiver setup)."""


class CapacityError(Exception):
    """Requested computation exceeds the backend's feasible size."""


class NumericalDiagnosticError(Exception):
    """A numerical sanity check failed (e.g. grid too coarse)."""
