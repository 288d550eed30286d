#!/usr/bin/env python3
"""
Error hierarchy for orbitspec.

Every error raised on bad input is a ValueError, so callers that only know
about ValueError keep working. The CLI maps each family to an exit code.
"""

from typing import Optional


class OrbitSpecError(ValueError):
    """Root of all orbitspec errors"""


class SymbolSyntaxError(OrbitSpecError):
    """Symbol text could not be parsed"""

    def __init__(self, offset: int, message: str):
        self.offset = offset
        self.message = message
        super().__init__(f"{message} at offset {offset}")


class UnknownIdentifierError(SymbolSyntaxError):
    """Identifier is neither a variable, a constant nor a function"""


class ArityError(SymbolSyntaxError):
    """Function called with the wrong number of arguments"""


class SymbolDomainError(OrbitSpecError):
    """Evaluation left the domain of a subexpression (division by zero, ...)"""

    def __init__(self, subexpression: str, message: str):
        self.subexpression = subexpression
        self.message = message
        super().__init__(f"{message} in '{subexpression}'")


class GridError(OrbitSpecError):
    """Invalid grid or Planck parameter"""


class DimensionError(OrbitSpecError):
    """Phase-space dimensions do not match"""


class ActionError(OrbitSpecError):
    """Unknown action, foreign boundary tag, or a request the quasi-orbit table cannot answer"""


class ConfigError(OrbitSpecError):
    """Scenario config could not be parsed or validated"""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        self.message = message
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class NumericalError(OrbitSpecError):
    """A numerical contract failed (solver residual, non-Hermitian input, unbounded samples)"""


class AcceptanceError(OrbitSpecError):
    """An acceptance threshold checked under --check failed"""

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))
