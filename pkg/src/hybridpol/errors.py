"""Exception hierarchy shared across the package.

Two families matter for the CLI exit codes: input problems (bad config,
invalid parameters) and numerical failures (non-convergence, degenerate
poles, divergent integrals).
"""


class HybridPolError(Exception):
    pass


class InputError(HybridPolError):
    """Bad user input: config parse failures, invalid parameter values."""


class InvalidParams(InputError):
    pass


class ConfigError(InputError):
    pass


class NumericalError(HybridPolError):
    """A numerical procedure could not produce a trustworthy result."""


class ConvergenceError(NumericalError):
    def __init__(self, message, best=None, residual=None):
        super().__init__(message)
        self.best = best
        self.residual = residual


class DegeneratePoleError(NumericalError):
    pass


class UndampedSpectrumError(NumericalError):
    pass
