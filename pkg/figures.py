"""
CSV data series behind the map and identity plots.

    1L  p, beta(p), beta(1/p)               on [-4, 4], p != 0
    1R  p, alpha(p), 1/alpha(1/p)           on [-3, 3]
    2L  p, beta(p), alpha(p)                on [p_star - 0.05, 0.99]
    2R  p, lhs, rhs (direct right side)     on [p_star, 0.99]
    3L  p, beta(p), alpha(p), alpha_ell(p)  on (-1/2, 1)
    3R  p, lhs, rhs (extended right side)   on (-1/2, 1)
    4   a, numerator, denominator, R3 numeric, R3 law  on [-1, 1]
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from constants import DEFAULT_ENDPOINT_EPSILON, DEFAULT_ENGINE_TOL, FIGURE_IDS
from hypergeometric import catalog, maps
from hypergeometric.errors import HypergeometricError
from log_setup import get_logger

logger = get_logger('FIGURE')


@dataclass
class FigureSeries:
    """Named columns; the first column is the strictly increasing abscissa."""
    figure_id: str
    columns: List[str]
    rows: List[Tuple[float, ...]] = field(default_factory=list)

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=float).reshape(-1, len(self.columns))


# ---------------------------------------------------------------------
# Row builders
# ---------------------------------------------------------------------

def _inverse_alpha_of_inverse(p: float) -> float:
    return 1.0 / maps.alpha(1.0 / p)


def _direct_sides(p: float) -> Tuple[float, float]:
    lhs = catalog.identity_sides('RBBG', p, DEFAULT_ENGINE_TOL)[0]
    rhs = catalog.direct_branch(p, DEFAULT_ENGINE_TOL).value
    return lhs, rhs


def _r3_row(a: float) -> Tuple[float, ...]:
    family = catalog.get_entry('R3')
    numerator = family.numerator(a).evaluate(DEFAULT_ENGINE_TOL).value
    denominator = family.denominator(a).evaluate(DEFAULT_ENGINE_TOL).value
    return numerator, denominator, numerator / denominator, family.law(a)


# figure id -> (columns, (lo, hi), row function of the abscissa)
FigureSpec = Tuple[Sequence[str], Tuple[float, float], Callable[[float], Tuple[float, ...]]]


def _figure_specs(eps: float) -> Dict[str, FigureSpec]:
    p_star = maps.ESCAPE_POINTS.p_star
    return {
        '1L': (('p', 'beta', 'beta_inv'), (-4.0, 4.0),
               lambda p: (maps.beta(p), maps.beta(1.0 / p))),
        '1R': (('p', 'alpha', 'inv_alpha_inv'), (-3.0, 3.0),
               lambda p: (maps.alpha(p), _inverse_alpha_of_inverse(p))),
        '2L': (('p', 'beta', 'alpha'), (p_star - 0.05, 0.99),
               lambda p: (maps.beta(p), maps.alpha(p))),
        '2R': (('p', 'lhs', 'rhs'), (p_star, 0.99), _direct_sides),
        '3L': (('p', 'beta', 'alpha', 'alpha_ell'), (-0.5 + eps, 1.0 - eps),
               lambda p: (maps.beta(p), maps.alpha(p), maps.alpha_ell(p))),
        '3R': (('p', 'lhs', 'rhs'), (-0.5 + eps, 1.0 - eps),
               lambda p: catalog.identity_sides('RBBG', p, DEFAULT_ENGINE_TOL)),
        '4': (('a', 'numerator', 'denominator', 'r3_numeric', 'r3_law'), (-1.0, 1.0), _r3_row),
    }


# ---------------------------------------------------------------------
# Building and writing
# ---------------------------------------------------------------------

def build_figure(figure_id: str, samples: int,
                 eps: float = DEFAULT_ENDPOINT_EPSILON) -> FigureSeries:
    """Evaluate a figure's rows on a uniform grid.

    Points where a map has a pole, or where any column is not finite, are
    skipped.

    Raises:
        KeyError: unknown figure id
        ValueError: samples < 2
    """
    if figure_id not in FIGURE_IDS:
        raise KeyError(f"Unknown figure id {figure_id!r}; expected one of {', '.join(FIGURE_IDS)}")
    if samples < 2:
        raise ValueError(f"samples must be >= 2 (got {samples})")

    columns, (lo, hi), row = _figure_specs(eps)[figure_id]
    series = FigureSeries(figure_id, list(columns))

    skipped = 0
    for x in np.linspace(lo, hi, samples):
        x = float(x)
        try:
            values = (x, *row(x))
        except (HypergeometricError, ZeroDivisionError):
            skipped += 1
            continue
        if not np.all(np.isfinite(values)):
            skipped += 1
            continue
        series.rows.append(values)

    abscissa = series.as_array()[:, 0]
    if not np.all(np.diff(abscissa) > 0):
        raise ValueError(f"Figure {figure_id}: abscissa not strictly increasing")

    logger.debug(f"Figure {figure_id}: {len(series.rows)} rows, {skipped} skipped")
    return series


def write_csv(series: FigureSeries, out_path: Path) -> Path:
    """Write a header row then one row per point, floats in round-trip repr."""
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(series.columns)
        for row in series.rows:
            writer.writerow([repr(v) for v in row])
    return out_path


def emit_figure(figure_id: str, out_path: Path, samples: int,
                eps: Optional[float] = None) -> FigureSeries:
    series = build_figure(figure_id, samples, DEFAULT_ENDPOINT_EPSILON if eps is None else eps)
    write_csv(series, out_path)
    logger.info(f"Figure {figure_id} written to {out_path} ({len(series.rows)} rows)")
    return series
