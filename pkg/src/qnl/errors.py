"""Exception types shared across the package."""


class QnlError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QnlError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RangeError(QnlError, ValueError):
    """A frequency falls outside a tabulated grid."""


class LosslessProbeError(QnlError, ArithmeticError):
    """The probe has no dissipation at this frequency: the back-action
    threshold is infinite and only the power-limited (QCRB) branch exists."""


class FdtViolationError(QnlError, ValueError):
    """Back-action PSD below hbar*|Im K|, which no stationary meter can
    realize (its own fluctuation-dissipation bound)."""


class SamplerError(QnlError, RuntimeError):
    """The saturating-triad sampler exhausted its retry budget."""


class EmptyFeasibleRegionError(QnlError, RuntimeError):
    """No feasible point found in the oracle search box.  Cannot occur for
    inputs that satisfy the FDT precondition; raised defensively."""


class ConfigError(QnlError, ValueError):
    """A sweep configuration failed to parse or validate."""
