"""
Sweep State for the Ramanujan transformation verifier.
Accumulates residuals of a grid sweep into a report.
"""

import math
import threading
import time
from dataclasses import asdict, dataclass
from typing import Optional, Tuple

from log_setup import get_logger

logger = get_logger('SWEEP')


@dataclass
class SweepReport:
    """Outcome of one identity sweep."""
    identity_id: str
    samples: int
    domain: Tuple[float, float]
    max_abs_residual: float
    max_rel_residual: float
    worst_point: float
    passed: bool
    elapsed_ms: int
    tol: float
    variable: str = 'p'

    def to_dict(self) -> dict:
        """Lower-snake-case mapping for the JSON report."""
        data = asdict(self)
        data['pass'] = data.pop('passed')
        data['domain'] = list(self.domain)
        return data


class SweepState:
    """Thread-safe max reduction over the residuals of a sweep.

    Grid points may be recorded in any order; the result only depends on
    the set of points recorded. Ties in the relative residual go to the
    smaller point.
    """

    # ---------------------------------------------------------------------
    # Initialization
    # ---------------------------------------------------------------------

    def __init__(self, identity_id: str, domain: Tuple[float, float], variable: str = 'p'):
        """Initialize an empty sweep.

        Args:
            identity_id: Catalog id being swept
            domain: (min, max) of the grid actually sampled
            variable: Name of the free variable (p, x or a)
        """
        self.identity_id = identity_id
        self.domain = domain
        self.variable = variable
        self._lock = threading.Lock()
        self.samples = 0
        self.max_abs_residual = 0.0
        self.max_rel_residual = 0.0
        self.worst_point: Optional[float] = None
        self.started_at: Optional[float] = None
        self.finished_at: Optional[float] = None

    # ---------------------------------------------------------------------
    # State Management
    # ---------------------------------------------------------------------

    def start(self):
        """Mark the sweep as started."""
        self.started_at = time.perf_counter()
        logger.info(f"Sweep {self.identity_id} started on {self.variable} in "
                    f"[{self.domain[0]:.6g}, {self.domain[1]:.6g}]")

    def record(self, point: float, abs_residual: float, rel_residual: float):
        """Fold one grid point into the running maxima.

        A non-finite residual counts as infinitely bad.
        """
        if not math.isfinite(abs_residual):
            abs_residual = math.inf
        if not math.isfinite(rel_residual):
            rel_residual = math.inf
        with self._lock:
            self.samples += 1
            self.max_abs_residual = max(self.max_abs_residual, abs_residual)

            if (self.worst_point is None
                    or rel_residual > self.max_rel_residual
                    or (rel_residual == self.max_rel_residual and point < self.worst_point)):
                self.max_rel_residual = rel_residual
                self.worst_point = point

    def finish(self):
        """Mark the sweep as finished."""
        self.finished_at = time.perf_counter()
        logger.info(f"Sweep {self.identity_id} finished: {self.samples} points, "
                    f"max rel residual {self.max_rel_residual:.3e}")

    # ---------------------------------------------------------------------
    # State Queries
    # ---------------------------------------------------------------------

    @property
    def elapsed_ms(self) -> int:
        if self.started_at is None:
            return 0
        end = self.finished_at if self.finished_at is not None else time.perf_counter()
        return int(round((end - self.started_at) * 1000.0))

    def report(self, tol: float) -> SweepReport:
        """Build the report; the sweep passes when max_rel_residual <= tol."""
        worst = self.worst_point if self.worst_point is not None else self.domain[0]
        return SweepReport(
            identity_id=self.identity_id,
            samples=self.samples,
            domain=self.domain,
            max_abs_residual=self.max_abs_residual,
            max_rel_residual=self.max_rel_residual,
            worst_point=worst,
            passed=self.max_rel_residual <= tol,
            elapsed_ms=self.elapsed_ms,
            tol=tol,
            variable=self.variable,
        )
