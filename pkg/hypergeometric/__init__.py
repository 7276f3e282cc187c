"""
Gauss hypergeometric engine and the transformation catalog it verifies.
"""

from .errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    EntryParameterError,
    HypergeometricError,
    ParameterError,
    PoleError,
    UnknownEntryError,
    UnsupportedArgumentError,
)
from .records import ConvergenceClass, EvalResult, Hyp2F1Params, Modulus, Route, SingularValue
from .special import SeriesAccumulator, digamma, gamma, log_abs_gamma, log_gamma, pochhammer, rgamma
from .engine import (
    classify,
    eval_auto,
    eval_near_unit_connection,
    eval_near_unit_zero_balanced,
    eval_series,
    gauss_extrapolated,
    gauss_theorem,
    kummer_theorem,
    pfaff,
    series_terms,
)
from .maps import EscapeConstants, escape_points
from .elliptic import agm, agm_hyp2f1_half, ellipK, singular_modulus, x9_closed_form
from .catalog import (
    CATALOG,
    CONSTANTS,
    C1,
    CatalogConstants,
    ClosedFormEntry,
    IdentityEntry,
    RatioFamily,
    catalog_ids,
    closed_form_value,
    engine_value,
    get_entry,
    identity_sides,
    ratio_law,
    ratio_law_trig,
    ratio_numeric,
    ratio_numeric_result,
    residual_companion,
    residual_corollary,
    residual_cubic,
    residual_rbbg,
)

__all__ = [
    'HypergeometricError',
    'PoleError',
    'DomainError',
    'ParameterError',
    'ConvergenceError',
    'DivergenceError',
    'UnsupportedArgumentError',
    'UnknownEntryError',
    'EntryParameterError',
    'Hyp2F1Params',
    'ConvergenceClass',
    'Route',
    'EvalResult',
    'Modulus',
    'SingularValue',
    'SeriesAccumulator',
    'gamma',
    'log_gamma',
    'log_abs_gamma',
    'rgamma',
    'digamma',
    'pochhammer',
    'classify',
    'eval_series',
    'eval_near_unit_zero_balanced',
    'eval_near_unit_connection',
    'eval_auto',
    'pfaff',
    'gauss_extrapolated',
    'gauss_theorem',
    'kummer_theorem',
    'series_terms',
    'EscapeConstants',
    'escape_points',
    'agm',
    'agm_hyp2f1_half',
    'ellipK',
    'singular_modulus',
    'x9_closed_form',
    'CATALOG',
    'CONSTANTS',
    'C1',
    'CatalogConstants',
    'ClosedFormEntry',
    'IdentityEntry',
    'RatioFamily',
    'catalog_ids',
    'closed_form_value',
    'engine_value',
    'get_entry',
    'identity_sides',
    'ratio_law',
    'ratio_law_trig',
    'ratio_numeric',
    'ratio_numeric_result',
    'residual_rbbg',
    'residual_corollary',
    'residual_companion',
    'residual_cubic',
]
