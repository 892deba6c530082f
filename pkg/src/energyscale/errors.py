"""Exception hierarchy shared by all energyscale modules.

Every error carries a stable machine-readable ``code`` and, where one input is
to blame, the name of the offending ``parameter``. The command-line front end
serializes these three fields verbatim.
"""

from __future__ import annotations


class EnergyScaleError(ValueError):
    code = "ERROR"

    def __init__(self, message: str, parameter: str | None = None):
        super().__init__(message)
        self.message = message
        self.parameter = parameter

    def as_dict(self) -> dict:
        return {"code": self.code, "message": self.message, "parameter": self.parameter}


class ParameterDomainError(EnergyScaleError):
    """An input lies outside the domain of the quantity being computed."""

    code = "PARAMETER_DOMAIN"


class RangeOverflowError(EnergyScaleError):
    """A result (usually an exponential) is not representable as a double."""

    code = "RANGE_OVERFLOW"


class InputParseError(EnergyScaleError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int | None = None, parameter: str | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, parameter)
        self.line = line


class EmptyGraphError(EnergyScaleError):
    code = "EMPTY_GRAPH"


class DisconnectedGraphError(EnergyScaleError):
    code = "DISCONNECTED"


class DegenerateGraphError(EnergyScaleError):
    code = "DEGENERATE_GRAPH"


class EntropyUndefinedError(EnergyScaleError):
    """Network entropy needs a logarithm base (path length) strictly above 1."""

    code = "ENTROPY_UNDEFINED"
