"""
Registry of the verifiable identities, closed-form evaluations and ratio
laws built around the cubic-to-quadratic 2F1 transformation

    2F1(1/3, 2/3; 1; beta(p)) = gamma(p) 2F1(1/2, 1/2; 1; alpha(p)),  -1/2 < p < 1

Three kinds of entries share one id namespace:

    IdentityEntry    - two sides in a free variable p (or x) over a domain
    ClosedFormEntry  - a 2F1 value (or quotient of two) against an exact
                       Gamma/radical expression, optionally depending on a
    RatioFamily      - quotient of two 2F1 in a parameter a against a
                       closed cosine law

The table is built once at import time and never mutated.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple, Union

from constants import DEFAULT_ENGINE_TOL, ERROR_MESSAGES, SQRT2, SQRT3, SQRT_PI
from hypergeometric import maps
from hypergeometric.engine import eval_auto
from hypergeometric.errors import (
    DomainError,
    EntryParameterError,
    HypergeometricError,
    UnknownEntryError,
)
from hypergeometric.records import EvalResult, Hyp2F1Params, Route
from hypergeometric.special import gamma, pochhammer
from log_setup import get_logger

logger = get_logger('CATALOG')

# Default tolerance of every catalog entry (relative)
CATALOG_TOL = 1e-9

THIRD = 1.0 / 3.0
CUBIC = Hyp2F1Params(THIRD, 2.0 * THIRD, 1.0)        # 2F1(1/3, 2/3; 1; .)
QUADRATIC = Hyp2F1Params(0.5, 0.5, 1.0)              # 2F1(1/2, 1/2; 1; .)
EQUAL_THIRDS = Hyp2F1Params(THIRD, THIRD, 1.0)       # 2F1(1/3, 1/3; 1; .)

GAMMA_QUARTER = gamma(0.25)
GAMMA_THREE_QUARTERS = gamma(0.75)


# ---------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogConstants:
    """Special arguments of the closed-form evaluations.

    y0 and y1 are the Pfaff images z0/(z0-1) and z1/(z1-1).
    """
    z0: float
    z1: float
    y0: float
    y1: float

    @property
    def one_minus_y1(self) -> float:
        return 0.75 * SQRT3 * (SQRT3 - 1.0)


def _build_constants() -> CatalogConstants:
    constants = CatalogConstants(
        z0=(SQRT3 + 2.0) / (3.0 * SQRT3),
        z1=(SQRT3 - 2.0) / (3.0 * SQRT3),
        y0=-((SQRT3 + 1.0) / 2.0) ** 3,
        y1=((SQRT3 - 1.0) / 2.0) ** 3,
    )
    checks = {
        'y0 = z0/(z0-1)': constants.y0 - constants.z0 / (constants.z0 - 1.0),
        'y1 = z1/(z1-1)': constants.y1 - constants.z1 / (constants.z1 - 1.0),
        '1 - y1': constants.one_minus_y1 - (1.0 - constants.y1),
    }
    for name, deviation in checks.items():
        if abs(deviation) > 1e-14:
            raise HypergeometricError(f"Catalog constant check failed: {name} = {deviation!r}")
    return constants


CONSTANTS = _build_constants()


# ---------------------------------------------------------------------
# Entry types
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False

    def contains(self, x: float) -> bool:
        above = x > self.lo if self.lo_open else x >= self.lo
        below = x < self.hi if self.hi_open else x <= self.hi
        return above and below

    def __str__(self) -> str:
        left = '(' if self.lo_open else '['
        right = ')' if self.hi_open else ']'
        return f"{left}{self.lo:.6g}, {self.hi:.6g}{right}"


@dataclass(frozen=True)
class Hyp2F1Instance:
    """A concrete 2F1(a, b; c; z), with the exact 1 - z when it is known."""
    params: Hyp2F1Params
    argument: float
    complement: Optional[float] = None

    def evaluate(self, tol: float = DEFAULT_ENGINE_TOL) -> EvalResult:
        return eval_auto(self.params, self.argument, tol, complement=self.complement)


@dataclass(frozen=True)
class IdentityEntry:
    """Equation lhs(p) = rhs(p) checked over `domain`."""
    id: str
    description: str
    variable: str
    domain: Interval
    sides: Callable[[float, float], Tuple[float, float]]
    default_tol: float = CATALOG_TOL


@dataclass(frozen=True)
class ClosedFormEntry:
    """2F1 instance (or a quotient of two) paired with its exact value.

    Parametric entries take the free parameter a in every callable.
    """
    id: str
    description: str
    instance: Callable[..., Hyp2F1Instance]
    closed_form: Callable[..., float]
    denominator: Optional[Callable[..., Hyp2F1Instance]] = None
    parametric: bool = False
    a_domain: Optional[Interval] = None
    required_route: Optional[Route] = None
    default_tol: float = CATALOG_TOL


@dataclass(frozen=True)
class RatioFamily:
    """numerator(a) / denominator(a) against a closed law in a."""
    id: str
    description: str
    numerator: Callable[[float], Hyp2F1Instance]
    denominator: Callable[[float], Hyp2F1Instance]
    law: Callable[[float], float]
    a_domain: Interval = field(default_factory=lambda: Interval(-1.0, 1.0))
    default_tol: float = CATALOG_TOL


CatalogEntry = Union[IdentityEntry, ClosedFormEntry, RatioFamily]


# ---------------------------------------------------------------------
# Shared closed expressions
# ---------------------------------------------------------------------

def C1(t: float) -> float:
    """(2/3)_t (7/6)_t / ((3/4)_t (13/12)_t)."""
    return (pochhammer(2.0 / 3.0, t) * pochhammer(7.0 / 6.0, t)
            / (pochhammer(0.75, t) * pochhammer(13.0 / 12.0, t)))


def _cos_plus(a: float) -> float:
    return math.cos(0.5 * math.pi * (a + 1.0 / 6.0))


def _cos_minus(a: float) -> float:
    return math.cos(0.5 * math.pi * (a - 1.0 / 6.0))


def _exponential_prefactor(a: float) -> float:
    return 2.0 * ((SQRT3 + 1.0) / SQRT2) ** (2.0 * a - 1.0)


# (81 sqrt(3) / 128): common base of the evaluations at y0 and y1
Y_BASE = 81.0 * SQRT3 / 128.0
R3_AMPLITUDE = SQRT2 * (SQRT3 - 1.0)


def relative_residual(value: float, reference: float) -> float:
    """|value - reference| / |reference|, or the absolute residual when reference = 0."""
    diff = abs(value - reference)
    return diff / abs(reference) if reference != 0.0 else diff


# ---------------------------------------------------------------------
# Identity sides
# ---------------------------------------------------------------------

def _check_domain(what: str, x: float, domain: Interval) -> None:
    if not domain.contains(x):
        raise DomainError(what, x, str(domain))


RBBG_DOMAIN = Interval(-0.5, 1.0, lo_open=True, hi_open=True)
COR_DOMAIN = Interval(0.0, 1.0, lo_open=True, hi_open=True)
COMPANION_DOMAIN = Interval(0.0, 1.0, hi_open=True)
CUBIC_DOMAIN = Interval(0.0, 0.95)
BRANCH_DOMAIN = Interval(maps.ESCAPE_POINTS.p_star, maps.ESCAPE_POINTS.p_star_ell)


def _rbbg_lhs(p: float, tol: float) -> float:
    return eval_auto(CUBIC, maps.beta(p), tol, complement=maps.beta_complement(p)).value


def direct_branch(p: float, tol: float) -> EvalResult:
    """gamma(p) 2F1(1/2,1/2;1;alpha(p)); eval_auto continues alpha < -0.95 itself."""
    inner = eval_auto(QUADRATIC, maps.alpha(p), tol, complement=maps.alpha_complement(p))
    coefficient = maps.gamma_coef(p)
    return EvalResult(coefficient * inner.value, coefficient * inner.err_estimate,
                      inner.route, inner.terms)


def pfaff_branch(p: float, tol: float) -> EvalResult:
    """gamma_ell(p) 2F1(1/2,1/2;1;alpha_ell(p)), the modified right side."""
    inner = eval_auto(QUADRATIC, maps.alpha_ell(p), tol,
                      complement=maps.alpha_ell_complement(p))
    coefficient = maps.gamma_ell(p)
    return EvalResult(coefficient * inner.value, coefficient * inner.err_estimate,
                      Route.PFAFF_CONTINUATION, inner.terms)


def rbbg_rhs(p: float, tol: float = DEFAULT_ENGINE_TOL) -> EvalResult:
    """Right side over the extended domain: direct branch from p_star on, Pfaff branch below."""
    if p >= maps.ESCAPE_POINTS.p_star:
        return direct_branch(p, tol)
    return pfaff_branch(p, tol)


def _rbbg_sides(p: float, tol: float) -> Tuple[float, float]:
    _check_domain('RBBG', p, RBBG_DOMAIN)
    return _rbbg_lhs(p, tol), rbbg_rhs(p, tol).value


def _branch_sides(p: float, tol: float) -> Tuple[float, float]:
    _check_domain('BRR1', p, BRANCH_DOMAIN)
    return direct_branch(p, tol).value, pfaff_branch(p, tol).value


def _corollary_sides(p: float, tol: float) -> Tuple[float, float]:
    _check_domain('COR', p, COR_DOMAIN)
    lhs = SQRT3 * eval_auto(CUBIC, maps.beta_complement(p), tol,
                            complement=maps.beta(p)).value
    rhs = maps.gamma_coef(p) * eval_auto(QUADRATIC, maps.alpha_complement(p), tol,
                                         complement=maps.alpha(p)).value
    return lhs, rhs


def _companion_sides(p: float, tol: float) -> Tuple[float, float]:
    _check_domain('COMPANION', p, COMPANION_DOMAIN)
    lhs = eval_auto(CUBIC, maps.beta_tilde(p), tol,
                    complement=maps.beta_tilde_complement(p)).value
    rhs = maps.gamma_tilde(p) * eval_auto(QUADRATIC, maps.alpha(p), tol,
                                          complement=maps.alpha_complement(p)).value
    return lhs, rhs


def _cubic_sides(x: float, tol: float) -> Tuple[float, float]:
    _check_domain('CUBIC', x, CUBIC_DOMAIN)
    argument, multiplier = maps.cubic_arg_map(x)
    lhs = eval_auto(CUBIC, argument, tol, complement=maps.cubic_arg_complement(x)).value
    rhs = multiplier * eval_auto(CUBIC, x ** 3, tol).value
    return lhs, rhs


def residual_rbbg(p: float, tol: float = DEFAULT_ENGINE_TOL) -> float:
    lhs, rhs = _rbbg_sides(p, tol)
    return abs(lhs - rhs)


def residual_corollary(p: float, tol: float = DEFAULT_ENGINE_TOL) -> float:
    lhs, rhs = _corollary_sides(p, tol)
    return abs(lhs - rhs)


def residual_companion(p: float, tol: float = DEFAULT_ENGINE_TOL) -> float:
    lhs, rhs = _companion_sides(p, tol)
    return abs(lhs - rhs)


def residual_cubic(x: float, tol: float = DEFAULT_ENGINE_TOL) -> float:
    lhs, rhs = _cubic_sides(x, tol)
    return abs(lhs - rhs)


# ---------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------

def _fixed(params: Hyp2F1Params, argument: float,
           complement: Optional[float] = None) -> Callable[[], Hyp2F1Instance]:
    instance = Hyp2F1Instance(params, argument, complement)
    return lambda: instance


def _x9() -> float:
    return maps.alpha(maps.ESCAPE_POINTS.p_nine)


def _bf1_params(a: float) -> Hyp2F1Params:
    return Hyp2F1Params(a, 1.0 - 2.0 * a, 4.0 / 3.0 - a)


def _ff3_params(a: float) -> Hyp2F1Params:
    return Hyp2F1Params(a, a + THIRD, 4.0 / 3.0 - a)


def _br2() -> float:
    return (1.0 + SQRT3) * GAMMA_QUARTER ** 2 / (2.0 * SQRT3 * math.pi) ** 1.5


def _br1() -> float:
    return SQRT_PI / (2.0 ** 0.25 * 3.0 ** 0.125 * math.sqrt(SQRT3 - 1.0)
                      * GAMMA_THREE_QUARTERS ** 2)


def _br3() -> float:
    return ((2.0 * SQRT3) ** -0.25 * math.sqrt(SQRT3 + 1.0)
            * GAMMA_QUARTER ** 2 / (2.0 * math.pi) ** 1.5)


def _rs3() -> float:
    return ((2.0 * SQRT3) ** -0.25 * math.sqrt(SQRT3 - 1.0)
            * GAMMA_QUARTER ** 2 / (2.0 * math.pi ** 1.5))


def _b33() -> float:
    return (3.0 ** 0.375 * (SQRT3 + 1.0) ** (1.0 / 6.0) * GAMMA_QUARTER ** 2
            / (2.0 ** (1.0 / 12.0) * 4.0 * math.pi ** 1.5))


def _r33() -> float:
    return (3.0 ** 0.375 * (SQRT3 - 1.0) ** (1.0 / 6.0) * GAMMA_QUARTER ** 2
            / (2.0 ** (1.0 / 12.0) * (2.0 * math.pi) ** 1.5))


def _comm() -> float:
    return ((1.5 * SQRT3) ** 0.25 * math.sqrt(SQRT3 + 1.0)
            * GAMMA_QUARTER ** 2 / (2.0 * math.pi) ** 1.5)


def _kummer() -> float:
    return GAMMA_QUARTER ** 2 / (2.0 * math.pi) ** 1.5


def _bf1(a: float) -> float:
    return ((-27.0 * CONSTANTS.z1 / 16.0) ** (-0.5 * a)
            * _cos_plus(a) / math.cos(math.pi / 12.0) * C1(-0.5 * a))


def _bf1a(a: float) -> float:
    return (27.0 * CONSTANTS.z0 / 16.0) ** (-0.5 * a) * C1(-0.5 * a)


def _ff3(a: float) -> float:
    return Y_BASE ** (-0.5 * a) * C1(-0.5 * a)


def _las(a: float) -> float:
    return Y_BASE ** (-0.5 * a) * R3_AMPLITUDE * _cos_plus(a) * C1(-0.5 * a)


PARAMETRIC_A_DOMAIN = Interval(-0.9, 0.9)

_CLOSED_FORMS = (
    ClosedFormEntry(
        'BR2', '2F1(1/2,1/2;1;x9) at the singular value of order 9',
        _fixed(QUADRATIC, _x9()), _br2),
    ClosedFormEntry(
        'BR1', '2F1(1/3,2/3;1;beta(p9)) in terms of Gamma(3/4)',
        _fixed(CUBIC, maps.beta(maps.ESCAPE_POINTS.p_nine),
               maps.beta_complement(maps.ESCAPE_POINTS.p_nine)), _br1),
    ClosedFormEntry(
        'BR3', '2F1(1/3,2/3;1;y1) in terms of Gamma(1/4)',
        _fixed(CUBIC, CONSTANTS.y1, CONSTANTS.one_minus_y1), _br3),
    ClosedFormEntry(
        'RS3', '2F1(1/3,2/3;1;y0), argument below -1',
        _fixed(CUBIC, CONSTANTS.y0), _rs3, required_route=Route.PFAFF_CONTINUATION),
    ClosedFormEntry(
        'B33', '2F1(1/3,1/3;1;z1)',
        _fixed(EQUAL_THIRDS, CONSTANTS.z1), _b33),
    ClosedFormEntry(
        'R33', '2F1(1/3,1/3;1;z0)',
        _fixed(EQUAL_THIRDS, CONSTANTS.z0), _r33),
    ClosedFormEntry(
        'COMM', '2F1(1/3,2/3;1;1-y1), the common value at both escape points',
        _fixed(CUBIC, CONSTANTS.one_minus_y1, CONSTANTS.y1), _comm),
    ClosedFormEntry(
        'KUMMER', '2F1(1/2,1/2;1;-1)',
        _fixed(QUADRATIC, -1.0), _kummer),
    ClosedFormEntry(
        'SQRT3', '2F1(1/3,2/3;1;1-y1) / 2F1(1/3,2/3;1;y1) from the cubic transformation',
        _fixed(CUBIC, CONSTANTS.one_minus_y1, CONSTANTS.y1), lambda: SQRT3,
        denominator=_fixed(CUBIC, CONSTANTS.y1, CONSTANTS.one_minus_y1)),
    ClosedFormEntry(
        'BRR_A', '2F1(1/3,2/3;1;y0) / 2F1(1/3,2/3;1;y1)',
        _fixed(CUBIC, CONSTANTS.y0), lambda: SQRT3 - 1.0,
        denominator=_fixed(CUBIC, CONSTANTS.y1, CONSTANTS.one_minus_y1),
        required_route=Route.PFAFF_CONTINUATION),
    ClosedFormEntry(
        'BRR_B', '2F1(1/3,1/3;1;z0) / 2F1(1/3,1/3;1;z1)',
        _fixed(EQUAL_THIRDS, CONSTANTS.z0), lambda: (2.0 * (SQRT3 - 1.0)) ** THIRD,
        denominator=_fixed(EQUAL_THIRDS, CONSTANTS.z1)),
    ClosedFormEntry(
        'BF1', '2F1(a,1-2a;4/3-a;z0)',
        lambda a: Hyp2F1Instance(_bf1_params(a), CONSTANTS.z0), _bf1,
        parametric=True, a_domain=PARAMETRIC_A_DOMAIN),
    ClosedFormEntry(
        'BF1A', '2F1(a,1-2a;4/3-a;z1)',
        lambda a: Hyp2F1Instance(_bf1_params(a), CONSTANTS.z1), _bf1a,
        parametric=True, a_domain=PARAMETRIC_A_DOMAIN),
    ClosedFormEntry(
        'FF3', '2F1(a,a+1/3;4/3-a;y1)',
        lambda a: Hyp2F1Instance(_ff3_params(a), CONSTANTS.y1, CONSTANTS.one_minus_y1), _ff3,
        parametric=True, a_domain=PARAMETRIC_A_DOMAIN),
    ClosedFormEntry(
        'LAS', '2F1(a,a+1/3;4/3-a;y0), argument below -1',
        lambda a: Hyp2F1Instance(_ff3_params(a), CONSTANTS.y0), _las,
        parametric=True, a_domain=PARAMETRIC_A_DOMAIN,
        required_route=Route.PFAFF_CONTINUATION),
)


# ---------------------------------------------------------------------
# Ratio laws
# ---------------------------------------------------------------------

def _r1(a: float) -> float:
    return _exponential_prefactor(a) * _cos_plus(a)


def _r2(a: float) -> float:
    return _exponential_prefactor(a) * _cos_minus(a)


def _r3(a: float) -> float:
    return R3_AMPLITUDE * _cos_plus(a)


def ratio_law_trig(a: float) -> float:
    """R1 written as 4^a cos(pi/12)^(2a-1) cos(pi/2 (a + 1/6))."""
    return 4.0 ** a * math.cos(math.pi / 12.0) ** (2.0 * a - 1.0) * _cos_plus(a)


def _r2_params(a: float) -> Hyp2F1Params:
    return Hyp2F1Params(a, 2.0 - 2.0 * a, 5.0 / 3.0 - a)


_RATIO_FAMILIES = (
    RatioFamily(
        'R1', '2F1(a,1-2a;4/3-a;z0) / 2F1(a,1-2a;4/3-a;z1)',
        lambda a: Hyp2F1Instance(_bf1_params(a), CONSTANTS.z0),
        lambda a: Hyp2F1Instance(_bf1_params(a), CONSTANTS.z1),
        _r1),
    RatioFamily(
        'R2', '2F1(a,2-2a;5/3-a;z0) / 2F1(a,2-2a;5/3-a;z1)',
        lambda a: Hyp2F1Instance(_r2_params(a), CONSTANTS.z0),
        lambda a: Hyp2F1Instance(_r2_params(a), CONSTANTS.z1),
        _r2),
    RatioFamily(
        'R3', '2F1(a,a+1/3;4/3-a;y0) / 2F1(a,a+1/3;4/3-a;y1)',
        lambda a: Hyp2F1Instance(_ff3_params(a), CONSTANTS.y0),
        lambda a: Hyp2F1Instance(_ff3_params(a), CONSTANTS.y1, CONSTANTS.one_minus_y1),
        _r3),
)


_IDENTITIES = (
    IdentityEntry(
        'RBBG', '2F1(1/3,2/3;1;beta(p)) = gamma(p) 2F1(1/2,1/2;1;alpha(p)), extended range',
        'p', RBBG_DOMAIN, _rbbg_sides),
    IdentityEntry(
        'BRR1', 'direct and Pfaff-modified right sides agree where both converge',
        'p', BRANCH_DOMAIN, _branch_sides),
    IdentityEntry(
        'COR', 'sqrt(3) 2F1(1/3,2/3;1;1-beta(p)) = gamma(p) 2F1(1/2,1/2;1;1-alpha(p))',
        'p', COR_DOMAIN, _corollary_sides),
    IdentityEntry(
        'COMPANION', '2F1(1/3,2/3;1;beta~(p)) = gamma~(p) 2F1(1/2,1/2;1;alpha(p))',
        'p', COMPANION_DOMAIN, _companion_sides),
    IdentityEntry(
        'CUBIC', '2F1(1/3,2/3;1;1-((1-x)/(1+2x))^3) = (1+2x) 2F1(1/3,2/3;1;x^3)',
        'x', CUBIC_DOMAIN, _cubic_sides),
)


# ---------------------------------------------------------------------
# Registry access
# ---------------------------------------------------------------------

CATALOG: Dict[str, CatalogEntry] = {
    entry.id: entry for entry in (*_IDENTITIES, *_CLOSED_FORMS, *_RATIO_FAMILIES)
}


def catalog_ids() -> List[str]:
    return list(CATALOG)


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return CATALOG[entry_id]
    except KeyError:
        raise UnknownEntryError(entry_id) from None


def _quotient(numerator: EvalResult, denominator: EvalResult) -> EvalResult:
    value = numerator.value / denominator.value
    err = (numerator.err_estimate + abs(value) * denominator.err_estimate) / abs(denominator.value)
    return EvalResult(value, err, numerator.route, numerator.terms + denominator.terms)


def _closed_form_entry(entry_id: str) -> ClosedFormEntry:
    entry = get_entry(entry_id)
    if not isinstance(entry, ClosedFormEntry):
        raise UnknownEntryError(entry_id)
    return entry


def _ratio_family(entry_id: str) -> RatioFamily:
    entry = get_entry(entry_id)
    if not isinstance(entry, RatioFamily):
        raise UnknownEntryError(entry_id)
    return entry


def _entry_args(entry: ClosedFormEntry, a: Optional[float]) -> tuple:
    if entry.parametric:
        if a is None:
            raise EntryParameterError(entry.id, ERROR_MESSAGES['NEEDS_A'].format(id=entry.id))
        return (a,)
    if a is not None:
        raise EntryParameterError(entry.id, ERROR_MESSAGES['TAKES_NO_A'].format(id=entry.id))
    return ()


def closed_form_value(entry_id: str, a: Optional[float] = None) -> float:
    """Exact right-hand side of a closed-form entry.

    Raises:
        UnknownEntryError: id not a closed-form entry
        EntryParameterError: a missing for a parametric entry, or given for a fixed one
        PoleError: a hits a pole of the Gamma factors
    """
    entry = _closed_form_entry(entry_id)
    return entry.closed_form(*_entry_args(entry, a))


def engine_value(entry_id: str, a: Optional[float] = None,
                 tol: float = DEFAULT_ENGINE_TOL) -> EvalResult:
    """Engine evaluation of a closed-form entry's 2F1 side.

    Quotient entries divide by the denominator instance; the route reported
    is the numerator's.
    """
    entry = _closed_form_entry(entry_id)
    args = _entry_args(entry, a)
    numerator = entry.instance(*args).evaluate(tol)
    if entry.denominator is None:
        return numerator

    return _quotient(numerator, entry.denominator(*args).evaluate(tol))


def ratio_law(entry_id: str, a: float) -> float:
    return _ratio_family(entry_id).law(a)


def ratio_numeric_result(entry_id: str, a: float,
                         tol: float = DEFAULT_ENGINE_TOL) -> EvalResult:
    """Quotient of the two engine values, reported with the numerator's route."""
    family = _ratio_family(entry_id)
    return _quotient(family.numerator(a).evaluate(tol), family.denominator(a).evaluate(tol))


def ratio_numeric(entry_id: str, a: float, tol: float = DEFAULT_ENGINE_TOL) -> float:
    return ratio_numeric_result(entry_id, a, tol).value


def identity_sides(entry_id: str, x: float,
                   tol: float = DEFAULT_ENGINE_TOL) -> Tuple[float, float]:
    """(lhs, rhs) of an identity entry at its free variable x."""
    entry = get_entry(entry_id)
    if not isinstance(entry, IdentityEntry):
        raise UnknownEntryError(entry_id)
    return entry.sides(x, tol)


logger.debug(f"Catalog loaded with {len(CATALOG)} entries")
