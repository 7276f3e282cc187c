"""
Record types shared by the numeric modules.
"""

import math
from dataclasses import dataclass
from enum import Enum

from constants import MODULUS_TOL
from hypergeometric.errors import DomainError, ParameterError
from hypergeometric.special import is_nonpositive_integer


@dataclass(frozen=True)
class Hyp2F1Params:
    """Parameter triple (a, b; c) of a Gauss hypergeometric function."""
    a: float
    b: float
    c: float

    def __post_init__(self):
        if is_nonpositive_integer(self.c):
            raise ParameterError(self.c)

    @property
    def s(self) -> float:
        """Parametric excess c - a - b."""
        return self.c - self.a - self.b

    @property
    def is_terminating(self) -> bool:
        return is_nonpositive_integer(self.a) or is_nonpositive_integer(self.b)

    def __str__(self) -> str:
        return f"({self.a:g},{self.b:g};{self.c:g})"


class ConvergenceClass(Enum):
    TERMINATING = 'Terminating'
    ABSOLUTELY_CONVERGENT = 'AbsolutelyConvergent'
    CONDITIONALLY_CONVERGENT = 'ConditionallyConvergent'
    DIVERGENT = 'Divergent'


class Route(Enum):
    """Evaluation path recorded on every EvalResult."""
    DIRECT_SERIES = 'DirectSeries'
    PFAFF_CONTINUATION = 'PfaffContinuation'
    NEAR_UNIT_CONNECTION = 'NearUnitConnection'
    CLOSED_FORM = 'ClosedForm'
    AGM = 'AGM'


@dataclass(frozen=True)
class EvalResult:
    """Value of an evaluation together with its error estimate and route."""
    value: float
    err_estimate: float
    route: Route
    terms: int = 0

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus k with its complement k' = sqrt(1 - k^2)."""
    k: float
    k_prime: float

    def __post_init__(self):
        if not 0.0 <= self.k < 1.0:
            raise DomainError('Modulus', self.k, '[0, 1)')
        if abs(self.k * self.k + self.k_prime * self.k_prime - 1.0) > MODULUS_TOL:
            raise DomainError('Modulus', (self.k, self.k_prime), 'k^2 + k\'^2 = 1')

    @classmethod
    def from_k(cls, k: float) -> 'Modulus':
        return cls(k, math.sqrt((1.0 - k) * (1.0 + k)))

    @classmethod
    def from_parameter(cls, x: float, complement: float = None) -> 'Modulus':
        """Build from the parameter x = k^2; `complement` is 1 - x if known exactly."""
        if complement is None:
            complement = 1.0 - x
        return cls(math.sqrt(x), math.sqrt(complement))


@dataclass(frozen=True)
class SingularValue:
    """Singular modulus of order n, stored as x_n = k_n^2."""
    n: int
    x_n: float
    residual: float = 0.0
    iterations: int = 0
