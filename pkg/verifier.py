"""
Verification coordinator: identity sweeps, closed-form spot checks and the
singular-modulus solver, driven by the configuration.
"""

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Optional, Tuple

import numpy as np

from config_manager import ConfigManager
from constants import ERROR_MESSAGES, REPORT_FORMATS
from hypergeometric import catalog
from hypergeometric.catalog import ClosedFormEntry, IdentityEntry, Interval, RatioFamily
from hypergeometric.elliptic import modular_ratio, singular_modulus, x9_closed_form
from hypergeometric.errors import (
    ConvergenceError,
    DomainError,
    EntryParameterError,
    HypergeometricError,
)
from hypergeometric.records import Route
from log_setup import get_logger
from sweep_state import SweepReport, SweepState

logger = get_logger('SWEEP')


class UsageError(Exception):
    """Bad command-line input: unknown id, bad range, bad sample count."""


# (point) -> (abs residual, rel residual, route ok)
PointCheck = Callable[[float], Tuple[float, float, bool]]


@dataclass
class EvalRecord:
    """Closed form against engine value for one catalog entry."""
    entry_id: str
    a: Optional[float]
    closed_form: float
    engine: float
    abs_residual: float
    rel_residual: float
    err_estimate: float
    route: str
    required_route: Optional[str]
    tol: float

    @property
    def route_ok(self) -> bool:
        return self.required_route is None or self.route == self.required_route

    @property
    def passed(self) -> bool:
        return self.rel_residual <= self.tol and self.route_ok


@dataclass
class SingularRecord:
    n: int
    x_n: float
    ratio_residual: float
    iterations: int
    closed_form_deviation: Optional[float] = None


class Verifier:
    """Runs catalog checks with the settings of a ConfigManager."""

    # ---------------------------------------------------------------------
    # Initialization
    # ---------------------------------------------------------------------

    def __init__(self, config: Optional[ConfigManager] = None, workers: Optional[int] = None):
        """Initialize the verifier.

        Args:
            config: Loaded configuration; defaults apply when None
            workers: Thread count override for sweeps
        """
        self.config = config or ConfigManager()
        self.workers = workers or self.config.WORKERS

    # ---------------------------------------------------------------------
    # Sweeps
    # ---------------------------------------------------------------------

    def sweep_bounds(self, domain: Interval, lo: Optional[float],
                     hi: Optional[float]) -> Tuple[float, float]:
        """Resolve the sampled range inside `domain`.

        Open endpoints, whether defaulted or given explicitly, are pulled
        inwards by the configured epsilon.
        """
        eps = self.config.ENDPOINT_EPSILON
        lo = domain.lo if lo is None else lo
        hi = domain.hi if hi is None else hi

        if domain.lo_open and lo == domain.lo:
            lo = domain.lo + eps
        if domain.hi_open and hi == domain.hi:
            hi = domain.hi - eps

        for value in (lo, hi):
            if not domain.contains(value):
                raise UsageError(f"{value!r} is outside the domain {domain}")
        if not lo < hi:
            raise UsageError(f"--min must be below --max (got {lo!r} >= {hi!r})")
        return lo, hi

    def _point_check(self, entry) -> Tuple[PointCheck, Interval, str]:
        tol = self.config.ENGINE_TOL

        if isinstance(entry, IdentityEntry):
            def check(x: float):
                lhs, rhs = entry.sides(x, tol)
                return abs(lhs - rhs), catalog.relative_residual(rhs, lhs), True
            return check, entry.domain, entry.variable

        if isinstance(entry, RatioFamily):
            # the laws vanish at a = 5/6, so residuals are measured against max(1, |law|)
            def check(a: float):
                numeric = catalog.ratio_numeric(entry.id, a, tol)
                law = entry.law(a)
                diff = abs(numeric - law)
                return diff, diff / max(1.0, abs(law)), True
            return check, entry.a_domain, 'a'

        if isinstance(entry, ClosedFormEntry) and entry.parametric:
            def check(a: float):
                result = catalog.engine_value(entry.id, a, tol)
                exact = entry.closed_form(a)
                route_ok = _route_ok(entry, result.route, a)
                return (abs(result.value - exact),
                        catalog.relative_residual(result.value, exact), route_ok)
            return check, entry.a_domain, 'a'

        raise UsageError(f"{entry.id} is a fixed closed form; use `eval {entry.id}`")

    def run_verify(self, identity_id: str, lo: Optional[float] = None,
                   hi: Optional[float] = None, samples: Optional[int] = None,
                   tol: Optional[float] = None) -> SweepReport:
        """Sweep a uniform grid and reduce the residuals to a SweepReport.

        Raises:
            UsageError: unknown id, bad range or sample count
            ConvergenceError: the engine failed at a grid point
        """
        entry = self._lookup(identity_id)
        check, domain, variable = self._point_check(entry)
        samples = self.config.SWEEP_SAMPLES if samples is None else samples
        tol = self.config.SWEEP_TOL if tol is None else tol
        if samples < 2:
            raise UsageError(f"--samples must be >= 2 (got {samples})")
        lo, hi = self.sweep_bounds(domain, lo, hi)

        grid = np.linspace(lo, hi, samples)
        state = SweepState(identity_id, (lo, hi), variable)
        route_violations = []

        def evaluate(x: float):
            try:
                abs_res, rel_res, route_ok = check(x)
            except ConvergenceError:
                raise
            except HypergeometricError as e:
                # grid points lie inside the domain, so this is a numerical failure
                raise ConvergenceError(ERROR_MESSAGES['SWEEP_POINT'].format(
                    id=identity_id, variable=variable, x=x, error=e)) from e
            state.record(x, abs_res, rel_res)
            if not route_ok:
                route_violations.append(x)

        state.start()
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                # list() re-raises the first worker exception
                list(pool.map(evaluate, (float(x) for x in grid)))
        else:
            for x in grid:
                evaluate(float(x))
        state.finish()

        report = state.report(tol)
        if route_violations:
            logger.warning(f"{identity_id}: required route not taken at "
                           f"{len(route_violations)} grid points")
            report.passed = False
        return report

    # ---------------------------------------------------------------------
    # Spot checks
    # ---------------------------------------------------------------------

    def run_eval(self, entry_id: str, a: Optional[float] = None) -> EvalRecord:
        """Closed form and engine value of a closed-form entry or ratio family.

        Raises:
            UsageError: unknown id, identity id, or a missing/superfluous
        """
        entry = self._lookup(entry_id)
        tol = self.config.ENGINE_TOL

        if isinstance(entry, RatioFamily):
            if a is None:
                raise UsageError(ERROR_MESSAGES['NEEDS_A'].format(id=entry_id))
            result = catalog.ratio_numeric_result(entry_id, a, tol)
            exact = entry.law(a)
            required = None
        elif isinstance(entry, ClosedFormEntry):
            try:
                exact = catalog.closed_form_value(entry_id, a)
                result = catalog.engine_value(entry_id, a, tol)
            except EntryParameterError as e:
                raise UsageError(str(e)) from None
            required = _required_route(entry, a)
        else:
            raise UsageError(f"{entry_id} is an identity; use `verify {entry_id}`")

        record = EvalRecord(
            entry_id=entry_id,
            a=a,
            closed_form=exact,
            engine=result.value,
            abs_residual=abs(result.value - exact),
            rel_residual=catalog.relative_residual(result.value, exact),
            err_estimate=result.err_estimate,
            route=result.route.value,
            required_route=required,
            tol=entry.default_tol,
        )
        logger.info(f"eval {entry_id}: rel residual {record.rel_residual:.3e} via {record.route}")
        return record

    def run_singular(self, n: int, tol: Optional[float] = None) -> SingularRecord:
        """Solve for x_n and report the ratio residual (and x_9 deviation)."""
        tol = self.config.SINGULAR_TOL if tol is None else tol
        try:
            value = singular_modulus(n, tol)
        except DomainError as e:
            raise UsageError(str(e)) from None

        record = SingularRecord(
            n=value.n,
            x_n=value.x_n,
            ratio_residual=abs(modular_ratio(value.x_n) - n ** 0.5),
            iterations=value.iterations,
        )
        if n == 9:
            record.closed_form_deviation = abs(value.x_n - x9_closed_form())
        return record

    # ---------------------------------------------------------------------
    # Helpers
    # ---------------------------------------------------------------------

    @staticmethod
    def _lookup(entry_id: str):
        try:
            return catalog.get_entry(entry_id)
        except KeyError as e:
            raise UsageError(str(e)) from None


def _required_route(entry: ClosedFormEntry, a: Optional[float]) -> Optional[str]:
    """Route an entry must take at a; a terminating instance needs none."""
    if entry.required_route is None:
        return None
    instance = entry.instance(a) if entry.parametric else entry.instance()
    if instance.params.is_terminating:
        return None
    return entry.required_route.value


def _route_ok(entry: ClosedFormEntry, route: Route, a: Optional[float]) -> bool:
    required = _required_route(entry, a)
    return required is None or route.value == required


# ---------------------------------------------------------------------
# Report rendering
# ---------------------------------------------------------------------

def render_report(report: SweepReport, fmt: str) -> str:
    """Render a SweepReport as JSON or as a one-row CSV with header."""
    if fmt not in REPORT_FORMATS:
        raise UsageError(f"Unknown report format {fmt!r}")
    data = report.to_dict()

    if fmt == 'json':
        return json.dumps(data, indent=2) + '\n'

    data['domain_min'], data['domain_max'] = data.pop('domain')
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(data), lineterminator='\n')
    writer.writeheader()
    writer.writerow({k: repr(v) if isinstance(v, float) else v for k, v in data.items()})
    return buffer.getvalue()


def write_report(report: SweepReport, path: Path, fmt: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_report(report, fmt))
    logger.info(f"Report written to {path}")
    return path


def eval_record_dict(record: EvalRecord) -> dict:
    data = asdict(record)
    data['pass'] = record.passed
    return data
