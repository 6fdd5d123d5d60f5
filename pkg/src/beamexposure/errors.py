"""Exceptions shared across the package."""


class ConfigurationError(ValueError):
    """Invalid scenario, simulation or output configuration.

    The message names the offending key so the CLI can print a single-line
    diagnostic and exit with status 1.
    """


class EigenSolverError(RuntimeError):
    """Power iteration failed to converge within its iteration budget."""

    def __init__(self, message, residual=None, batch_index=None):
        super().__init__(message)
        self.residual = residual
        self.batch_index = batch_index
