"""
Algebraic argument maps of the cubic-to-quadratic transformation.

    alpha(p) = p^3 (2+p) / (1+2p)
    beta(p)  = 27 p^2 (1+p)^2 / (4 (1+p+p^2)^3)
    gamma(p) = (1+p+p^2) / sqrt(1+2p)

together with the Pfaff-modified pair (alpha_ell, gamma_ell), the companion
pair (beta_tilde, gamma_tilde), exact complements 1 - map(p), derivatives,
and the escape constants. All maps are evaluated from factored forms.
"""

import math
from dataclasses import dataclass
from typing import Tuple

from constants import SQRT3
from hypergeometric.errors import DomainError, HypergeometricError, PoleError
from log_setup import get_logger

logger = get_logger('MAPS')


# ---------------------------------------------------------------------
# Principal maps
# ---------------------------------------------------------------------

def alpha(p: float) -> float:
    if p == -0.5:
        raise PoleError('alpha', p)
    return p ** 3 * (2.0 + p) / (1.0 + 2.0 * p)


def alpha_complement(p: float) -> float:
    """1 - alpha(p) = (1-p)(1+p)^3 / (1+2p)."""
    if p == -0.5:
        raise PoleError('alpha', p)
    return (1.0 - p) * (1.0 + p) ** 3 / (1.0 + 2.0 * p)


def beta(p: float) -> float:
    return 27.0 * p * p * (1.0 + p) ** 2 / (4.0 * (1.0 + p + p * p) ** 3)


def beta_complement(p: float) -> float:
    """1 - beta(p) = (1-p)^2 (2+p)^2 (1+2p)^2 / (4 (1+p+p^2)^3)."""
    return ((1.0 - p) * (2.0 + p) * (1.0 + 2.0 * p)) ** 2 / (4.0 * (1.0 + p + p * p) ** 3)


def gamma_coef(p: float) -> float:
    if p <= -0.5:
        raise DomainError('gamma_coef', p, 'p > -1/2')
    return (1.0 + p + p * p) / math.sqrt(1.0 + 2.0 * p)


# ---------------------------------------------------------------------
# Pfaff-modified maps, valid on (-1, 1)
# ---------------------------------------------------------------------

def _check_open_unit(what: str, p: float) -> None:
    if not -1.0 < p < 1.0:
        raise DomainError(what, p, '(-1, 1)')


def alpha_ell(p: float) -> float:
    """alpha(p) / (alpha(p) - 1) = -p^3 (2+p) / ((1-p^2)(1+p)^2)."""
    _check_open_unit('alpha_ell', p)
    return -p ** 3 * (2.0 + p) / ((1.0 - p * p) * (1.0 + p) ** 2)


def alpha_ell_complement(p: float) -> float:
    """1 - alpha_ell(p) = (1+2p) / ((1-p)(1+p)^3)."""
    _check_open_unit('alpha_ell', p)
    return (1.0 + 2.0 * p) / ((1.0 - p) * (1.0 + p) ** 3)


def gamma_ell(p: float) -> float:
    """gamma(p) / sqrt(1 - alpha(p)) = (1+p+p^2) / sqrt((1-p)(1+p)^3)."""
    _check_open_unit('gamma_ell', p)
    return (1.0 + p + p * p) / math.sqrt((1.0 - p) * (1.0 + p) ** 3)


# ---------------------------------------------------------------------
# Companion maps
# ---------------------------------------------------------------------

def _companion_denominator(p: float) -> float:
    q = 1.0 + 4.0 * p + p * p
    if q == 0.0:
        raise PoleError('beta_tilde', p)
    return q


def beta_tilde(p: float) -> float:
    q = _companion_denominator(p)
    return 27.0 * p * (1.0 + p) ** 4 / (2.0 * q ** 3)


def beta_tilde_complement(p: float) -> float:
    """1 - beta_tilde(p) = (1-p)^4 (1+2p)(2+p) / (2 (1+4p+p^2)^3)."""
    q = _companion_denominator(p)
    return (1.0 - p) ** 4 * (1.0 + 2.0 * p) * (2.0 + p) / (2.0 * q ** 3)


def gamma_tilde(p: float) -> float:
    if p <= -0.5:
        raise DomainError('gamma_tilde', p, 'p > -1/2')
    return _companion_denominator(p) / math.sqrt(1.0 + 2.0 * p)


# ---------------------------------------------------------------------
# Derivatives
# ---------------------------------------------------------------------

def dalpha_dp(p: float) -> float:
    if p == -0.5:
        raise PoleError('dalpha_dp', p)
    return 6.0 * p * p * (1.0 + p) ** 2 / (1.0 + 2.0 * p) ** 2


def dbeta_dp(p: float) -> float:
    return (27.0 * p * (1.0 - p * p) * (1.0 + 2.0 * p) * (2.0 + p)
            / (4.0 * (1.0 + p + p * p) ** 4))


# ---------------------------------------------------------------------
# Cubic transformation argument
# ---------------------------------------------------------------------

def cubic_arg_map(x: float) -> Tuple[float, float]:
    """Return (1 - ((1-x)/(1+2x))^3, 1 + 2x) for x in [0, 1)."""
    if not 0.0 <= x < 1.0:
        raise DomainError('cubic_arg_map', x, '[0, 1)')
    return 1.0 - cubic_arg_complement(x), 1.0 + 2.0 * x


def cubic_arg_complement(x: float) -> float:
    """((1-x)/(1+2x))^3, the exact complement of the cubic argument."""
    return ((1.0 - x) / (1.0 + 2.0 * x)) ** 3


# ---------------------------------------------------------------------
# Escape constants
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class EscapeConstants:
    """Parameter values where a map argument reaches a notable point.

    p_star:     alpha(p_star) = -1
    p_star_ell: alpha_ell(p_star_ell) = -1
    p_nine:     alpha(p_nine) is the singular value x_9
    """
    p_star: float
    p_star_ell: float
    p_nine: float


def _build_escape_points() -> EscapeConstants:
    points = EscapeConstants(
        p_star=(-1.0 - SQRT3 + math.sqrt(2.0 * SQRT3)) / 2.0,
        p_star_ell=(math.sqrt(3.0 + 2.0 * SQRT3) - 1.0) / 2.0,
        p_nine=(math.sqrt(6.0 * SQRT3 - 9.0) - 1.0) / 2.0,
    )

    p_nine_alt = (math.sqrt(1.5 * SQRT3) * (SQRT3 - 1.0) - 1.0) / 2.0
    checks = {
        'alpha(p_star) + 1': alpha(points.p_star) + 1.0,
        'alpha_ell(p_star_ell) + 1': alpha_ell(points.p_star_ell) + 1.0,
        'p_nine radical forms': points.p_nine - p_nine_alt,
    }
    for name, deviation in checks.items():
        if abs(deviation) > 1e-13:
            raise HypergeometricError(f"Escape constant check failed: {name} = {deviation!r}")

    if not -0.5 < points.p_star < 0.0 < points.p_nine < points.p_star_ell < 1.0:
        raise HypergeometricError(f"Escape constants out of order: {points}")

    logger.debug(f"Escape constants {points}")
    return points


ESCAPE_POINTS = _build_escape_points()


def escape_points() -> EscapeConstants:
    return ESCAPE_POINTS
