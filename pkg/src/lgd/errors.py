"""Exception types shared across the package.

The CLI maps these onto exit codes: input problems exit 2, an
infeasible calibration exits 3 and numerical failures exit 4.
"""


class LgdError(Exception):
    """Base class for package errors."""


class InputError(LgdError):
    """Malformed or insufficient input data / configuration."""

    exit_code = 2


class CalibrationInfeasibleError(LgdError):
    """No parameter choice satisfies the calibration constraints."""

    exit_code = 3


class NumericalError(LgdError):
    """A numerical routine failed (inversion, truncation, horizon...)."""

    exit_code = 4


class HorizonError(NumericalError):
    """Simulation horizon too short to pin down last-passage times."""
