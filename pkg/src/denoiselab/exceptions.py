"""Shared exception types.

The library distinguishes argument errors (plain ``ValueError``), violations
of construction-time invariants, evaluation outside a backend's trusted
domain, and runtime failures of the positivity/training contracts.  The CLI
maps these onto process exit codes.
"""


class InvariantError(ValueError):
    """A model or map violates one of its construction-time invariants."""


class DomainError(ValueError):
    """A query falls outside the region where a numeric backend is trusted."""


class AssumptionViolationError(RuntimeError):
    """A runtime positivity check failed (non-invertible denoiser Jacobian)."""


class TrainingDivergedError(RuntimeError):
    """Score-matching training produced a non-finite loss."""

    def __init__(self, epoch: int, loss: float):
        self.epoch = epoch
        self.loss = loss
        super().__init__(f"non-finite training loss {loss!r} at epoch {epoch}")


class ConfigError(ValueError):
    """An experiment configuration is malformed or inconsistent."""
