"""
Exception hierarchy for the hypergeometric package.
"""

from constants import ERROR_MESSAGES


class HypergeometricError(Exception):
    """Base class for every error raised by the numeric modules."""


class PoleError(HypergeometricError):
    """A Gamma function or algebraic map was evaluated at a pole."""

    def __init__(self, what: str, x: float):
        super().__init__(ERROR_MESSAGES['POLE'].format(what=what, x=x))
        self.what = what
        self.x = x


class DomainError(HypergeometricError, ValueError):
    """Argument outside the domain of an operation."""

    def __init__(self, what: str, x, domain: str):
        super().__init__(ERROR_MESSAGES['DOMAIN'].format(what=what, x=x, domain=domain))
        self.what = what
        self.x = x
        self.domain = domain


class ParameterError(HypergeometricError, ValueError):
    """Forbidden hypergeometric parameters (c a non-positive integer)."""

    def __init__(self, c: float):
        super().__init__(ERROR_MESSAGES['FORBIDDEN_C'].format(c=c))
        self.c = c


class ConvergenceError(HypergeometricError):
    """A series or iteration hit its cap before reaching the tolerance."""


class DivergenceError(ConvergenceError):
    """The series diverges at the requested point."""


class UnsupportedArgumentError(HypergeometricError, ValueError):
    """Real continuation beyond what the engine implements (z >= 1)."""

    def __init__(self, z: float):
        super().__init__(ERROR_MESSAGES['UNSUPPORTED_Z'].format(z=z))
        self.z = z


class UnknownEntryError(HypergeometricError, KeyError):
    """Catalog id not registered."""

    def __init__(self, entry_id: str):
        super().__init__(ERROR_MESSAGES['UNKNOWN_ID'].format(id=entry_id))
        self.entry_id = entry_id

    def __str__(self) -> str:
        return self.args[0]


class EntryParameterError(HypergeometricError, ValueError):
    """Free parameter a missing for a parametric entry, or given to a fixed one."""

    def __init__(self, entry_id: str, message: str):
        super().__init__(message)
        self.entry_id = entry_id
