"""
Gauss hypergeometric function 2F1(a, b; c; z) on the real axis z < 1.

Routes:
    DirectSeries        - compensated partial sums, |z| <= 0.95 (and |z| = 1)
    NearUnitConnection  - expansions in powers of 1 - z for 0.95 < z < 1
    PfaffContinuation   - z -> z/(z-1) for z < -0.95, then one of the above
    ClosedForm          - Gauss (z = 1) and Kummer (z = -1) theorems
"""

import math
import sys
from typing import Iterator, Optional, Tuple

from constants import (
    BOUNDARY_AVERAGING_DEPTH,
    BOUNDARY_START_TERMS,
    DEFAULT_ENGINE_TOL,
    DIRECT_SERIES_RADIUS,
    ERROR_MESSAGES,
    GAUSS_EXTRAPOLATION_LEVELS,
    GAUSS_EXTRAPOLATION_START,
    INTEGER_EXCESS_GAP,
    KUMMER_MATCH_TOL,
    MAX_CONTINUATION_DEPTH,
    NEAR_UNIT_MIN_Z,
    SQRT_PI,
    TERM_CAP,
    ZERO_BALANCED_TOL,
)
from hypergeometric.errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    UnsupportedArgumentError,
)
from hypergeometric.records import ConvergenceClass, EvalResult, Hyp2F1Params, Route
from hypergeometric.special import (
    SeriesAccumulator,
    digamma,
    gamma,
    rgamma,
)
from log_setup import get_logger

logger = get_logger('ENGINE')

EPS = sys.float_info.epsilon


def _closed_form_result(value: float) -> EvalResult:
    return EvalResult(value, 8.0 * EPS * abs(value), Route.CLOSED_FORM)


# ---------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------

def classify(params: Hyp2F1Params, z: float) -> ConvergenceClass:
    """Convergence verdict of the hypergeometric series at real z.

    Rules, in order:
        a or b in {0, -1, -2, ...}        -> Terminating
        |z| < 1                           -> AbsolutelyConvergent
        |z| = 1, s > 0                    -> AbsolutelyConvergent
        z = -1, -1 < s <= 0               -> ConditionallyConvergent
        otherwise                         -> Divergent
    """
    if params.is_terminating:
        return ConvergenceClass.TERMINATING

    r = abs(z)
    if r < 1.0:
        return ConvergenceClass.ABSOLUTELY_CONVERGENT
    if r > 1.0:
        return ConvergenceClass.DIVERGENT

    s = params.s
    if s > 0.0:
        return ConvergenceClass.ABSOLUTELY_CONVERGENT
    if z != 1.0 and s > -1.0:
        return ConvergenceClass.CONDITIONALLY_CONVERGENT
    return ConvergenceClass.DIVERGENT


# ---------------------------------------------------------------------
# Closed theorems
# ---------------------------------------------------------------------

def gauss_theorem(params: Hyp2F1Params) -> float:
    """2F1(a, b; c; 1) = Gamma(c) Gamma(s) / (Gamma(c-a) Gamma(c-b)), s > 0.

    Raises:
        DomainError: s <= 0 (the series diverges at z = 1)
    """
    s = params.s
    if s <= 0.0:
        raise DomainError('gauss_theorem', s, 's > 0')
    a, b, c = params.a, params.b, params.c
    return gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b)


def kummer_theorem(a: float, b: float) -> float:
    """2F1(a, b; a - b + 1; -1) in closed form.

    Raises:
        PoleError: Gamma(a - b + 1) is at a pole
    """
    return (2.0 ** (-a) * SQRT_PI * gamma(a - b + 1.0)
            * rgamma(0.5 * (1.0 + a)) * rgamma(1.0 + 0.5 * a - b))


# ---------------------------------------------------------------------
# Direct series
# ---------------------------------------------------------------------

def series_terms(params: Hyp2F1Params, z: float) -> Iterator[float]:
    """Yield the raw series terms t_0 = 1, t_1, t_2, ...

    A terminating series stops after its last non-zero term.
    """
    a, b, c = params.a, params.b, params.c
    term = 1.0
    n = 0
    while True:
        yield term
        factor = (a + n) * (b + n)
        if factor == 0.0:
            return
        term *= factor / ((c + n) * (n + 1)) * z
        n += 1


def gauss_extrapolated(params: Hyp2F1Params, levels: int = GAUSS_EXTRAPOLATION_LEVELS,
                       start: int = GAUSS_EXTRAPOLATION_START) -> EvalResult:
    """Series value at z = 1 by Richardson extrapolation of its partial sums.

    Independent of the Gamma function, so it cross-checks gauss_theorem.
    The partial sums S_N at N = start * 2^k satisfy

        S_N = F(1) + c_0 N^(-s) + c_1 N^(-s-1) + ...

    and each table column removes the next power.

    Raises:
        DomainError: s <= 0, or fewer than two levels
    """
    s = params.s
    if s <= 0.0:
        raise DomainError('gauss_extrapolated', s, 's > 0')
    if levels < 2:
        raise DomainError('gauss_extrapolated levels', levels, 'levels >= 2')

    lengths = [start * 2 ** k for k in range(levels)]
    partial_sums = []
    acc = SeriesAccumulator()
    count = 0
    for term in series_terms(params, 1.0):
        acc.add(term)
        count += 1
        if count == lengths[len(partial_sums)]:
            partial_sums.append(acc.value)
            if len(partial_sums) == levels:
                break
    else:
        return EvalResult(acc.value, 8.0 * EPS * abs(acc.value), Route.DIRECT_SERIES, count)

    row = partial_sums
    for j in range(levels - 1):
        factor = 2.0 ** (s + j)
        previous = row[-1]
        row = [(factor * finer - coarser) / (factor - 1.0)
               for coarser, finer in zip(row, row[1:])]

    value = row[-1]
    logger.debug(f"Extrapolated {params} at z=1 from {count} terms: {value!r}")
    return EvalResult(value, abs(value - previous), Route.DIRECT_SERIES, count)


def _sum_terminating(params: Hyp2F1Params, z: float) -> EvalResult:
    acc = SeriesAccumulator()
    magnitude = 0.0
    count = 0
    for term in series_terms(params, z):
        acc.add(term)
        magnitude = max(magnitude, abs(term))
        count += 1
    return EvalResult(acc.value, 4.0 * EPS * count * magnitude, Route.DIRECT_SERIES, count)


def _sum_direct(params: Hyp2F1Params, z: float, tol: float) -> EvalResult:
    """Partial sums until the geometric tail bound |t| q / (1 - q) is within tol."""
    a, b, c = params.a, params.b, params.c
    r = abs(z)
    # past this index every Pochhammer factor keeps its sign
    n_regular = int(max(0.0, -a, -b, -c)) + 2

    acc = SeriesAccumulator(1.0)
    term = 1.0
    for n in range(TERM_CAP):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        term *= ratio
        acc.add(term)

        if n >= n_regular:
            q = max(abs(ratio), r)
            if q < 1.0:
                tail = abs(term) * q / (1.0 - q)
                if tail <= tol:
                    return EvalResult(acc.value, tail, Route.DIRECT_SERIES, n + 2)

    raise ConvergenceError(ERROR_MESSAGES['TERM_CAP'].format(tol=tol, cap=TERM_CAP, z=z))


def _sum_boundary_averaged(params: Hyp2F1Params, z: float, tol: float) -> EvalResult:
    """Sum at |z| = 1 by repeated averaging of the trailing partial sums.

    Each averaging pass replaces neighbouring partial sums by their mean;
    after `BOUNDARY_AVERAGING_DEPTH` passes over the last depth+1 sums
    the oscillation of a slowly convergent series is removed. The term count
    is doubled until two successive depths agree to within tol.
    """
    depth = BOUNDARY_AVERAGING_DEPTH
    n_terms = BOUNDARY_START_TERMS
    terms = series_terms(params, z)

    acc = SeriesAccumulator()
    partial_sums = []
    while True:
        while len(partial_sums) < n_terms + depth + 1:
            acc.add(next(terms))
            partial_sums.append(acc.value)

        window = partial_sums[n_terms:n_terms + depth + 1]
        previous = window[0]
        for _ in range(depth):
            previous = window[0]
            window = [0.5 * (u + v) for u, v in zip(window, window[1:])]
        current = window[0]
        err = abs(current - previous)

        effective_tol = max(tol, 4.0 * EPS * abs(current))
        if err <= effective_tol:
            logger.debug(f"Boundary sum z={z} converged with {len(partial_sums)} terms")
            return EvalResult(current, err, Route.DIRECT_SERIES, len(partial_sums))

        if 2 * n_terms > TERM_CAP:
            raise ConvergenceError(
                ERROR_MESSAGES['TERM_CAP'].format(tol=tol, cap=TERM_CAP, z=z)
            )
        n_terms *= 2


def eval_series(params: Hyp2F1Params, z: float, tol: float = DEFAULT_ENGINE_TOL,
                *, closed_forms: bool = True) -> EvalResult:
    """Evaluate 2F1 from its defining series.

    Args:
        params: Parameter triple
        z: Real argument with a non-divergent series
        tol: Absolute tolerance on the omitted tail
        closed_forms: Use the Kummer theorem at z = -1 when it applies

    Returns:
        EvalResult with route DirectSeries, or ClosedForm on the boundary

    Raises:
        DivergenceError: the series diverges at z
        ConvergenceError: TERM_CAP reached before tol
    """
    verdict = classify(params, z)
    if verdict is ConvergenceClass.DIVERGENT:
        raise DivergenceError(
            ERROR_MESSAGES['DIVERGENT'].format(a=params.a, b=params.b, c=params.c, z=z)
        )

    if z == 0.0:
        return EvalResult(1.0, 0.0, Route.DIRECT_SERIES, 1)

    if verdict is ConvergenceClass.TERMINATING:
        return _sum_terminating(params, z)

    if abs(z) < 1.0:
        return _sum_direct(params, z, tol)

    # Boundary |z| = 1
    if z == 1.0:
        return _closed_form_result(gauss_theorem(params))

    a, b, c = params.a, params.b, params.c
    if closed_forms:
        if abs(c - (a - b + 1.0)) <= KUMMER_MATCH_TOL:
            logger.debug(f"Kummer theorem for {params} at z=-1")
            return _closed_form_result(kummer_theorem(a, b))
        if abs(c - (b - a + 1.0)) <= KUMMER_MATCH_TOL:
            logger.debug(f"Kummer theorem for {params} at z=-1")
            return _closed_form_result(kummer_theorem(b, a))

    return _sum_boundary_averaged(params, z, tol)


# ---------------------------------------------------------------------
# Near z = 1
# ---------------------------------------------------------------------

def _check_near_unit(what: str, z: float, complement: Optional[float]) -> float:
    if not NEAR_UNIT_MIN_Z < z < 1.0:
        raise DomainError(what, z, f'({NEAR_UNIT_MIN_Z}, 1)')
    w = (1.0 - z) if complement is None else complement
    if w <= 0.0:
        raise DomainError(what, w, '1 - z > 0')
    return w


def eval_near_unit_zero_balanced(params: Hyp2F1Params, z: float,
                                 tol: float = DEFAULT_ENGINE_TOL,
                                 *, complement: Optional[float] = None) -> EvalResult:
    """Zero-balanced (c = a + b) 2F1 via the logarithmic expansion in w = 1 - z.

        F = Gamma(a+b) / (Gamma(a) Gamma(b))
            * sum_n (a)_n (b)_n / (n!)^2 [2 psi(n+1) - psi(a+n) - psi(b+n) - ln w] w^n

    Args:
        params: Parameters with s = 0 (within ZERO_BALANCED_TOL)
        z: Argument in (0.5, 1)
        tol: Absolute tolerance
        complement: Exact value of 1 - z when the caller has it

    Raises:
        DomainError: s != 0 or z outside (0.5, 1)
    """
    if abs(params.s) > ZERO_BALANCED_TOL:
        raise DomainError('eval_near_unit_zero_balanced', params.s, 's = 0')
    w = _check_near_unit('eval_near_unit_zero_balanced', z, complement)

    if params.is_terminating:
        return eval_series(params, z, tol)

    a, b = params.a, params.b
    prefactor = gamma(a + b) * rgamma(a) * rgamma(b)
    log_w = math.log(w)

    psi_one = digamma(1.0)
    psi_a = digamma(a)
    psi_b = digamma(b)

    acc = SeriesAccumulator()
    coefficient = 1.0
    scaled_tol = tol / max(1.0, abs(prefactor))
    for n in range(TERM_CAP):
        term = coefficient * (2.0 * psi_one - psi_a - psi_b - log_w)
        acc.add(term)

        ratio = (a + n) * (b + n) / ((n + 1.0) * (n + 1.0)) * w
        coefficient *= ratio
        psi_one += 1.0 / (n + 1.0)
        psi_a += 1.0 / (a + n)
        psi_b += 1.0 / (b + n)

        if n >= int(max(0.0, -a, -b)) + 2:
            q = max(abs(ratio), w)
            bracket = abs(2.0 * psi_one - psi_a - psi_b - log_w)
            tail = abs(coefficient) * bracket / (1.0 - q)
            if tail <= scaled_tol:
                value = prefactor * acc.value
                return EvalResult(value, abs(prefactor) * tail,
                                  Route.NEAR_UNIT_CONNECTION, n + 1)

    raise ConvergenceError(ERROR_MESSAGES['TERM_CAP'].format(tol=tol, cap=TERM_CAP, z=z))


def eval_near_unit_connection(params: Hyp2F1Params, z: float,
                              tol: float = DEFAULT_ENGINE_TOL,
                              *, complement: Optional[float] = None) -> EvalResult:
    """Non-zero-balanced 2F1 near z = 1 from the 1 - z connection formula.

        F = A1 F(a, b; 1-s; w) + A2 w^s F(c-a, c-b; 1+s; w),   w = 1 - z
        A1 = Gamma(c) Gamma(s)  / (Gamma(c-a) Gamma(c-b))
        A2 = Gamma(c) Gamma(-s) / (Gamma(a) Gamma(b))

    Raises:
        DomainError: s within INTEGER_EXCESS_GAP of an integer, or z outside (0.5, 1)
    """
    s = params.s
    if abs(s - round(s)) < INTEGER_EXCESS_GAP:
        raise DomainError('eval_near_unit_connection', s, 's away from the integers')
    w = _check_near_unit('eval_near_unit_connection', z, complement)

    a, b, c = params.a, params.b, params.c
    gamma_c = gamma(c)
    a1 = gamma_c * gamma(s) * rgamma(c - a) * rgamma(c - b)
    a2 = gamma_c * gamma(-s) * rgamma(a) * rgamma(b) * w ** s

    scale = max(1.0, abs(a1), abs(a2))
    first = eval_series(Hyp2F1Params(a, b, 1.0 - s), w, tol / scale)
    second = eval_series(Hyp2F1Params(c - a, c - b, 1.0 + s), w, tol / scale)

    value = a1 * first.value + a2 * second.value
    err = abs(a1) * first.err_estimate + abs(a2) * second.err_estimate
    return EvalResult(value, err, Route.NEAR_UNIT_CONNECTION, first.terms + second.terms)


# ---------------------------------------------------------------------
# Continuation and dispatch
# ---------------------------------------------------------------------

def pfaff(params: Hyp2F1Params, z: float) -> Tuple[Hyp2F1Params, float, float]:
    """Linear Pfaff transformation.

        2F1(a, b; c; z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))

    Returns:
        (transformed params, zeta = z/(z-1), prefactor (1-z)^(-a))

    Raises:
        DomainError: z >= 1
    """
    if z >= 1.0:
        raise DomainError('pfaff', z, 'z < 1')
    zeta = z / (z - 1.0)
    prefactor = (1.0 - z) ** (-params.a)
    return Hyp2F1Params(params.a, params.c - params.b, params.c), zeta, prefactor


def eval_auto(params: Hyp2F1Params, z: float, tol: float = DEFAULT_ENGINE_TOL,
              *, complement: Optional[float] = None, _depth: int = 0) -> EvalResult:
    """Evaluate 2F1(a, b; c; z) for any real z < 1, choosing the route.

    Args:
        params: Parameter triple
        z: Real argument, z < 1
        tol: Absolute tolerance on the returned value
        complement: Exact 1 - z, used by the near-unit routes. A positive
            complement wins over a z that rounded up to 1.

    Raises:
        UnsupportedArgumentError: z >= 1 without a positive complement
        ConvergenceError: propagated from the chosen route
    """
    if complement is not None:
        if complement <= 0.0:
            raise UnsupportedArgumentError(z)
        if z >= 1.0:
            z = min(1.0 - complement, math.nextafter(1.0, 0.0))
            logger.debug(f"Argument rebuilt from complement {complement!r}: z={z!r}")
    elif z >= 1.0:
        raise UnsupportedArgumentError(z)

    if params.is_terminating or abs(z) <= DIRECT_SERIES_RADIUS:
        return eval_series(params, z, tol)

    if z > DIRECT_SERIES_RADIUS:
        s = params.s
        if abs(s) <= ZERO_BALANCED_TOL:
            logger.debug(f"Near-unit zero-balanced route for {params} at z={z}")
            return eval_near_unit_zero_balanced(params, z, tol, complement=complement)
        if abs(s - round(s)) >= INTEGER_EXCESS_GAP:
            logger.debug(f"Near-unit connection route for {params} at z={z}")
            return eval_near_unit_connection(params, z, tol, complement=complement)
        logger.debug(f"Integer excess s={s}; direct series for {params} at z={z}")
        return eval_series(params, z, tol)

    # z < -DIRECT_SERIES_RADIUS
    if _depth + 1 >= MAX_CONTINUATION_DEPTH:
        return eval_series(params, z, tol)

    new_params, zeta, prefactor = pfaff(params, z)
    logger.debug(f"Pfaff hop z={z:.6g} -> zeta={zeta:.6g}, prefactor={prefactor:.6g}")
    inner_tol = tol / prefactor if prefactor > 1.0 else tol
    inner = eval_auto(new_params, zeta, inner_tol,
                      complement=1.0 / (1.0 - z), _depth=_depth + 1)
    return EvalResult(prefactor * inner.value, prefactor * inner.err_estimate,
                      Route.PFAFF_CONTINUATION, inner.terms)
