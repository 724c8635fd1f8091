"""Exception types raised by the channel machinery.

The CLI maps these onto stable exit codes: format errors are exit 1,
non-CPTP inputs exit 2, missing real logarithms exit 3, singular or
degenerate channels exit 4.
"""


class ChannelError(ValueError):
    """Base class for all channel-related failures."""


class ChannelFormatError(ChannelError):
    """Input does not parse or violates a representation invariant."""


class NotCompletelyPositiveError(ChannelError):
    """A CPTP channel was required; carries the Choi min-eigenvalue witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DefectiveMatrixError(ChannelError):
    """Matrix is not diagonalizable within conditioning tolerance."""

    def __init__(self, message, condition_number=None):
        super().__init__(message)
        self.condition_number = condition_number


class NoRealLogarithmError(ChannelError):
    """Spectrum violates the real-logarithm existence conditions."""


class SingularChannelError(ChannelError):
    """Operation undefined for singular (non-invertible) channels."""


class DegenerateLorentzError(ChannelError):
    """Lorentz normal form unavailable (singular or non-physical R matrix)."""


class TruncationError(ChannelError):
    """Fock-space truncation too small for the requested simulation."""
