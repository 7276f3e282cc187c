"""
Complete elliptic integral of the first kind and singular moduli.
"""

import math
from typing import Callable, Optional, Tuple, Union

from constants import (
    AGM_MAX_ITERATIONS,
    AGM_RELATIVE_TOL,
    ERROR_MESSAGES,
    SINGULAR_DEFAULT_TOL,
    SINGULAR_LOWER_BRACKET,
    SINGULAR_MAX_ITERATIONS,
    SINGULAR_MIN_TOL,
    SQRT2,
    SQRT3,
)
from hypergeometric.errors import ConvergenceError, DivergenceError, DomainError
from hypergeometric.records import EvalResult, Modulus, Route, SingularValue
from log_setup import get_logger

logger = get_logger('ELLIPTIC')


def agm(a0: float, b0: float) -> float:
    """Arithmetic-geometric mean of two positive numbers.

    Raises:
        DomainError: a0 or b0 not positive
        ConvergenceError: AGM_MAX_ITERATIONS exceeded
    """
    if a0 <= 0.0 or b0 <= 0.0:
        raise DomainError('agm', (a0, b0), 'a0, b0 > 0')

    a, b = float(a0), float(b0)
    for _ in range(AGM_MAX_ITERATIONS):
        if abs(a - b) <= AGM_RELATIVE_TOL * max(a, b):
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)

    raise ConvergenceError(ERROR_MESSAGES['ITERATION_CAP'].format(what='agm', cap=AGM_MAX_ITERATIONS))


def ellipK(k: Union[Modulus, float]) -> float:
    """K(k) = pi / (2 agm(1, k')).

    Raises:
        DivergenceError: k' = 0 (K has a logarithmic singularity at k = 1)
    """
    if not isinstance(k, Modulus):
        if k >= 1.0:
            raise DivergenceError(f"K(k) diverges at k={k!r}")
        k = Modulus.from_k(k)
    if k.k_prime == 0.0:
        raise DivergenceError(f"K(k) diverges at k={k.k!r}")
    return math.pi / (2.0 * agm(1.0, k.k_prime))


def agm_hyp2f1_half(x: float, complement: Optional[float] = None) -> EvalResult:
    """2F1(1/2, 1/2; 1; x) = (2/pi) K(sqrt(x)) for 0 <= x < 1, by AGM.

    Args:
        x: Parameter k^2
        complement: Exact 1 - x when known
    """
    if not 0.0 <= x < 1.0:
        raise DomainError('agm_hyp2f1_half', x, '[0, 1)')
    modulus = Modulus.from_parameter(x, complement)
    value = 1.0 / agm(1.0, modulus.k_prime)
    return EvalResult(value, 4.0 * AGM_RELATIVE_TOL * value, Route.AGM)


def modular_ratio(x: float, complement: Optional[float] = None) -> float:
    """K(k')/K(k) for k^2 = x, computed as agm(1, k')/agm(1, k)."""
    modulus = Modulus.from_parameter(x, complement)
    return agm(1.0, modulus.k_prime) / agm(1.0, modulus.k)


# ---------------------------------------------------------------------
# Singular moduli
# ---------------------------------------------------------------------

def _bisect(f: Callable[[float], float], lo: float, hi: float,
            tol: float, iterations: int) -> Tuple[float, float, int]:
    """Root of a decreasing f on [lo, hi]; returns (x, f(x), iterations used).

    Midpoints are geometric while the bracket spans more than a factor of 4,
    so tiny roots are reached in a few dozen steps.
    """
    f_lo = f(lo)
    if abs(f_lo) <= tol:
        return lo, f_lo, 0
    f_hi = f(hi)
    if abs(f_hi) <= tol:
        return hi, f_hi, 0
    if f_lo < 0.0 or f_hi > 0.0:
        raise DomainError('singular_modulus bracket', (lo, hi), 'f(lo) > 0 > f(hi)')

    best, best_f = (lo, f_lo) if abs(f_lo) < abs(f_hi) else (hi, f_hi)
    for i in range(1, iterations + 1):
        mid = math.sqrt(lo * hi) if hi > 4.0 * lo else 0.5 * (lo + hi)
        if not lo < mid < hi:
            # bracket exhausted at double precision
            return best, best_f, i
        f_mid = f(mid)
        if abs(f_mid) < abs(best_f):
            best, best_f = mid, f_mid
        if abs(f_mid) <= tol:
            return mid, f_mid, i
        if f_mid > 0.0:
            lo = mid
        else:
            hi = mid

    return best, best_f, iterations


def singular_modulus(n: int, tol: float = SINGULAR_DEFAULT_TOL) -> SingularValue:
    """Solve K(k'_n)/K(k_n) = sqrt(n) for x_n = k_n^2 by bisection.

    Args:
        n: Positive integer order
        tol: Residual tolerance on the ratio, at least SINGULAR_MIN_TOL

    Returns:
        SingularValue with the residual actually reached

    Raises:
        DomainError: n not a positive integer, or tol below SINGULAR_MIN_TOL
        ConvergenceError: bracket or iteration budget exhausted above tol
    """
    if n < 1 or int(n) != n:
        raise DomainError('singular_modulus', n, 'positive integers')
    if tol < SINGULAR_MIN_TOL:
        raise DomainError('singular_modulus tol', tol, f'tol >= {SINGULAR_MIN_TOL:g}')

    target = math.sqrt(n)

    def residual(x: float) -> float:
        return modular_ratio(x) - target

    # the ratio is 1 at x = 1/2 and decreasing, so x_n <= 1/2
    x_n, f_n, iterations = _bisect(residual, SINGULAR_LOWER_BRACKET, 0.5,
                                   tol, SINGULAR_MAX_ITERATIONS)
    logger.debug(f"Singular modulus n={n}: x_n={x_n!r} residual={f_n:.3e} "
                 f"after {iterations} steps")
    if abs(f_n) > tol:
        raise ConvergenceError(ERROR_MESSAGES['SINGULAR_TOL'].format(n=n, residual=abs(f_n), tol=tol))
    return SingularValue(int(n), x_n, abs(f_n), iterations)


def x9_closed_form() -> float:
    """x_9 = ((sqrt(2) - 3^(1/4)) / (1 + sqrt(3)))^2."""
    return ((SQRT2 - 3.0 ** 0.25) / (1.0 + SQRT3)) ** 2
