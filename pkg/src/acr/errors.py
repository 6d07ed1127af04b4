"""Exception types shared across the package.

The CLI maps these onto exit codes: configuration problems exit 2,
file problems exit 3, oversized exact-solver requests exit 4.
"""


class AcrError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(AcrError, ValueError):
    """An argument violates an operation's precondition."""


class ConfigError(AcrError):
    """A run or experiment configuration is inconsistent."""


class InstanceFormatError(AcrError):
    """An instance file could not be parsed; message names the line."""

    def __init__(self, path, line_no, message):
        self.path = path
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: {message}")


class UnsupportedSizeError(AcrError):
    """The exact solver was asked for more cities than it supports."""
