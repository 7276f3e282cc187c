"""
Application-wide constants for the Ramanujan transformation verifier.
"""

import math

# ============================================================================
# MATHEMATICAL CONSTANTS
# ============================================================================

# Euler-Mascheroni constant to 20 digits (digamma anchor, used by special.py)
EULER_GAMMA = 0.57721566490153286061

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT_PI = math.sqrt(math.pi)
LOG_SQRT_2PI = 0.91893853320467274178  # ln(sqrt(2*pi))

# Lanczos approximation, g = 7, n = 9 (used by special.gamma)
LANCZOS_G = 7.0
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Lanczos approximation for ln(Gamma), g = 671/128, 14 terms (used by special.log_gamma)
LOG_GAMMA_SHIFT = 5.24218750000000000
LOG_GAMMA_SERIES_BASE = 0.999999999999997092
LOG_GAMMA_COEFFICIENTS = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)

# Digamma: shift the argument above this before the asymptotic expansion
DIGAMMA_ASYMPTOTIC_START = 10.0

# B_2k / (2k) for the digamma asymptotic expansion, k = 1..7
DIGAMMA_BERNOULLI_TERMS = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

# ============================================================================
# HYPERGEOMETRIC ENGINE CONSTANTS
# ============================================================================

DIRECT_SERIES_RADIUS = 0.95        # Used by engine.eval_auto
NEAR_UNIT_MIN_Z = 0.5              # Used by engine.eval_near_unit_zero_balanced
TERM_CAP = 1_000_000               # Used by every series loop in engine.py
ZERO_BALANCED_TOL = 1e-14          # |s| below this counts as zero-balanced
INTEGER_EXCESS_GAP = 1e-3          # connection formula needs s this far from an integer
KUMMER_MATCH_TOL = 1e-14           # c == a - b + 1 detection
MAX_CONTINUATION_DEPTH = 2         # eval_auto recursion depth (one Pfaff hop)
DEFAULT_ENGINE_TOL = 1e-15         # absolute tail bound

# Averaging of partial sums on the boundary z = -1
BOUNDARY_START_TERMS = 256
BOUNDARY_AVERAGING_DEPTH = 24

# Richardson extrapolation of partial sums at z = 1 (engine.gauss_extrapolated)
GAUSS_EXTRAPOLATION_START = 64    # first partial-sum length, doubled per level
GAUSS_EXTRAPOLATION_LEVELS = 8

# ============================================================================
# ELLIPTIC / SINGULAR VALUE CONSTANTS
# ============================================================================

AGM_RELATIVE_TOL = 1e-15
AGM_MAX_ITERATIONS = 100
SINGULAR_DEFAULT_TOL = 1e-14
SINGULAR_MIN_TOL = 1e-14
SINGULAR_MAX_ITERATIONS = 400
SINGULAR_LOWER_BRACKET = 1e-300    # x_n lower bracket for the bisection
MODULUS_TOL = 1e-15                # k^2 + k'^2 == 1

# ============================================================================
# SWEEP / CLI DEFAULTS
# ============================================================================

DEFAULT_SWEEP_SAMPLES = 200        # Used by ConfigManager and verifier
DEFAULT_SWEEP_TOL = 1e-9
DEFAULT_ENDPOINT_EPSILON = 1e-6    # open endpoints are pulled in by this much
DEFAULT_SWEEP_WORKERS = 1
DEFAULT_FIGURE_SAMPLES = 400
DEFAULT_DIGITS = 17
DEFAULT_REPORT_FORMAT = 'json'
REPORT_FORMATS = ('json', 'csv')
DEFAULT_LOG_LEVEL = 'WARNING'

# Default configuration paths
DEFAULT_CONFIG_NAME = 'hypverify.ini'
HOME_CONFIG_NAME = '.hypverify.ini'

FIGURE_IDS = ('1L', '1R', '2L', '2R', '3L', '3R', '4')

# ============================================================================
# EXIT CODES
# ============================================================================

EXIT_CODES = {
    'PASS': 0,
    'FAIL': 1,
    'USAGE': 2,
    'NUMERICAL': 3,
}

# ============================================================================
# LOGGING PREFIXES (for consistent console output)
# ============================================================================

LOG_PREFIXES = {
    'APP': '[APP]',
    'CONFIG': '[CONFIG]',
    'SPECIAL': '[SPECIAL]',
    'ENGINE': '[ENGINE]',
    'MAPS': '[MAPS]',
    'ELLIPTIC': '[ELLIPTIC]',
    'CATALOG': '[CATALOG]',
    'SWEEP': '[SWEEP]',
    'FIGURE': '[FIGURE]',
    'SINGULAR': '[SINGULAR]',
}

# ============================================================================
# DEFAULT CONFIGURATION VALUES (used by ConfigManager)
# ============================================================================

DEFAULT_CONFIG_VALUES = {
    'Engine': {
        'default_tol': repr(DEFAULT_ENGINE_TOL),
    },
    'Sweep': {
        'default_samples': str(DEFAULT_SWEEP_SAMPLES),
        'default_tol': repr(DEFAULT_SWEEP_TOL),
        'endpoint_epsilon': repr(DEFAULT_ENDPOINT_EPSILON),
        'workers': str(DEFAULT_SWEEP_WORKERS),
    },
    'Singular': {
        'default_tol': repr(SINGULAR_DEFAULT_TOL),
    },
    'Figures': {
        'default_samples': str(DEFAULT_FIGURE_SAMPLES),
    },
    'Output': {
        'digits': str(DEFAULT_DIGITS),
        'report_format': DEFAULT_REPORT_FORMAT,
    },
    'Logging': {
        'level': DEFAULT_LOG_LEVEL,
    },
}

# ============================================================================
# ERROR MESSAGES (for consistent error handling)
# ============================================================================

ERROR_MESSAGES = {
    'POLE': 'Pole of {what} at {x!r}',
    'DOMAIN': '{what}: argument {x!r} outside {domain}',
    'FORBIDDEN_C': 'Denominator parameter c={c!r} is zero or a negative integer',
    'TERM_CAP': 'Series did not reach tol={tol:g} within {cap} terms (z={z!r})',
    'DIVERGENT': 'Series diverges for a={a!r}, b={b!r}, c={c!r}, z={z!r}',
    'UNSUPPORTED_Z': 'Real continuation for z >= 1 is not supported (z={z!r})',
    'ITERATION_CAP': '{what} did not converge within {cap} iterations',
    'UNKNOWN_ID': 'Unknown catalog id {id!r}; run `list` to see the available ids',
    'NEEDS_A': 'Catalog entry {id!r} is parametric and needs --a',
    'TAKES_NO_A': 'Catalog entry {id!r} takes no parameter a',
    'CONFIG_LOAD_FAILED': 'Failed to load configuration',
    'SWEEP_POINT': '{id} failed at {variable}={x!r}: {error}',
    'SINGULAR_TOL': 'Bisection for n={n} stopped at residual {residual:.3e} > tol={tol:g}',
}
