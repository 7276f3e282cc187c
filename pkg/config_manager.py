"""
Configuration Manager for the Ramanujan transformation verifier.
Handles loading, saving, and accessing configuration settings.
"""

import configparser
from pathlib import Path
from typing import Any, Dict, List, Optional

from constants import (
    DEFAULT_CONFIG_NAME,
    DEFAULT_CONFIG_VALUES,
    DEFAULT_DIGITS,
    DEFAULT_ENDPOINT_EPSILON,
    DEFAULT_ENGINE_TOL,
    DEFAULT_FIGURE_SAMPLES,
    DEFAULT_LOG_LEVEL,
    DEFAULT_REPORT_FORMAT,
    DEFAULT_SWEEP_SAMPLES,
    DEFAULT_SWEEP_TOL,
    DEFAULT_SWEEP_WORKERS,
    HOME_CONFIG_NAME,
    REPORT_FORMATS,
    SINGULAR_DEFAULT_TOL,
    SINGULAR_MIN_TOL,
)
from log_setup import get_logger

logger = get_logger('CONFIG')

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


class ConfigManager:
    """Manages application configuration from INI files."""

    # ---------------------------------------------------------------------
    # Constants and Defaults
    # ---------------------------------------------------------------------

    DEFAULT_CONFIG = DEFAULT_CONFIG_VALUES

    # ---------------------------------------------------------------------
    # Initialization
    # ---------------------------------------------------------------------

    def __init__(self, config_path: Optional[Path] = None):
        """Initialize configuration manager.

        Args:
            config_path: Optional path to config file. If None, uses default location.
        """
        self.config_path = Path(config_path) if config_path else self._get_default_config_path()
        self.config = configparser.ConfigParser(interpolation=None)
        self.loaded_from: Optional[Path] = None
        self._load_configuration()

    # ---------------------------------------------------------------------
    # Configuration Loading and Saving
    # ---------------------------------------------------------------------

    def _get_default_config_path(self) -> Path:
        """Get default configuration file path."""
        # Try user's home directory first
        home_config = Path.home() / HOME_CONFIG_NAME
        if home_config.exists():
            return home_config

        # Fall back to current directory
        return Path.cwd() / DEFAULT_CONFIG_NAME

    def _load_configuration(self):
        """Load configuration from file layered over the defaults.

        A missing file is not an error; the defaults apply.
        """
        self.config.read_dict(self.DEFAULT_CONFIG)

        if not self.config_path.exists():
            logger.debug(f"No configuration file at {self.config_path}; using defaults")
            return

        try:
            self.config.read(self.config_path)
            self.loaded_from = self.config_path
            logger.info(f"Loaded configuration from: {self.config_path}")
        except configparser.Error as e:
            logger.warning(f"Error parsing config file {self.config_path}: {e}; using defaults")
            self.config = configparser.ConfigParser(interpolation=None)
            self.config.read_dict(self.DEFAULT_CONFIG)

    def create_default_config(self) -> Path:
        """Write a commented default configuration file and return its path."""
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.config_path, 'w') as f:
            f.write(self._generate_default_config_content())
        logger.info(f"Created default configuration at: {self.config_path}")
        return self.config_path

    def _generate_default_config_content(self) -> str:
        """Generate content for default configuration file."""
        return f"""# Ramanujan Transformation Verifier Configuration
# ============================================
# Values here are defaults for the command line; options given on the
# command line always win.

[Engine]
# Absolute tolerance of a single 2F1 evaluation
default_tol = {DEFAULT_ENGINE_TOL!r}

[Sweep]
# Grid size and relative tolerance of `verify`
default_samples = {DEFAULT_SWEEP_SAMPLES}
default_tol = {DEFAULT_SWEEP_TOL!r}

# Open domain endpoints are pulled inwards by this much
endpoint_epsilon = {DEFAULT_ENDPOINT_EPSILON!r}

# Number of worker threads evaluating grid points
workers = {DEFAULT_SWEEP_WORKERS}

[Singular]
# Residual tolerance of the singular-modulus solver (>= {SINGULAR_MIN_TOL:g})
default_tol = {SINGULAR_DEFAULT_TOL!r}

[Figures]
default_samples = {DEFAULT_FIGURE_SAMPLES}

[Output]
# Significant digits printed by `eval`
digits = {DEFAULT_DIGITS}

# Report format of `verify --out`: json or csv
report_format = {DEFAULT_REPORT_FORMAT}

[Logging]
# DEBUG, INFO, WARNING or ERROR
level = {DEFAULT_LOG_LEVEL}
"""

    # ---------------------------------------------------------------------
    # Configuration Access (Properties)
    # ---------------------------------------------------------------------

    def _getfloat(self, section: str, key: str, fallback: float) -> float:
        try:
            return self.config.getfloat(section, key, fallback=fallback)
        except ValueError:
            return float('nan')

    def _getint(self, section: str, key: str, fallback: int) -> int:
        try:
            return self.config.getint(section, key, fallback=fallback)
        except ValueError:
            return -1

    # Engine settings
    @property
    def ENGINE_TOL(self) -> float:
        """Get absolute tolerance of single evaluations."""
        return self._getfloat('Engine', 'default_tol', DEFAULT_ENGINE_TOL)

    # Sweep settings
    @property
    def SWEEP_SAMPLES(self) -> int:
        return self._getint('Sweep', 'default_samples', DEFAULT_SWEEP_SAMPLES)

    @property
    def SWEEP_TOL(self) -> float:
        return self._getfloat('Sweep', 'default_tol', DEFAULT_SWEEP_TOL)

    @property
    def ENDPOINT_EPSILON(self) -> float:
        """Get the inward offset applied to open domain endpoints."""
        return self._getfloat('Sweep', 'endpoint_epsilon', DEFAULT_ENDPOINT_EPSILON)

    @property
    def WORKERS(self) -> int:
        return self._getint('Sweep', 'workers', DEFAULT_SWEEP_WORKERS)

    # Singular settings
    @property
    def SINGULAR_TOL(self) -> float:
        return self._getfloat('Singular', 'default_tol', SINGULAR_DEFAULT_TOL)

    # Figure settings
    @property
    def FIGURE_SAMPLES(self) -> int:
        return self._getint('Figures', 'default_samples', DEFAULT_FIGURE_SAMPLES)

    # Output settings
    @property
    def DIGITS(self) -> int:
        return self._getint('Output', 'digits', DEFAULT_DIGITS)

    @property
    def REPORT_FORMAT(self) -> str:
        return self.config.get('Output', 'report_format',
                               fallback=DEFAULT_REPORT_FORMAT, raw=True).strip().lower()

    # Logging settings
    @property
    def LOG_LEVEL(self) -> str:
        return self.config.get('Logging', 'level', fallback=DEFAULT_LOG_LEVEL, raw=True).strip().upper()

    # ---------------------------------------------------------------------
    # Utility Methods
    # ---------------------------------------------------------------------

    def get(self, section: str, key: str, fallback: Any = None) -> Any:
        """Generic getter for configuration values."""
        try:
            return self.config.get(section, key, fallback=fallback, raw=True)
        except (configparser.NoSectionError, configparser.NoOptionError):
            return fallback

    def validate(self) -> Dict[str, List[str]]:
        """Validate configuration and return any errors."""
        errors = {}

        if not self.ENGINE_TOL > 0.0:
            errors.setdefault('Engine', []).append(f"default_tol must be > 0: {self.ENGINE_TOL}")

        if self.SWEEP_SAMPLES < 2:
            errors.setdefault('Sweep', []).append(
                f"default_samples must be an integer >= 2: {self.get('Sweep', 'default_samples')}"
            )
        if not self.SWEEP_TOL > 0.0:
            errors.setdefault('Sweep', []).append(f"default_tol must be > 0: {self.SWEEP_TOL}")
        if not 0.0 < self.ENDPOINT_EPSILON < 0.1:
            errors.setdefault('Sweep', []).append(
                f"endpoint_epsilon must lie in (0, 0.1): {self.ENDPOINT_EPSILON}"
            )
        if self.WORKERS < 1:
            errors.setdefault('Sweep', []).append(
                f"workers must be an integer >= 1: {self.get('Sweep', 'workers')}"
            )

        if not self.SINGULAR_TOL >= SINGULAR_MIN_TOL:
            errors.setdefault('Singular', []).append(
                f"default_tol must be >= {SINGULAR_MIN_TOL:g}: {self.SINGULAR_TOL}"
            )

        if self.FIGURE_SAMPLES < 2:
            errors.setdefault('Figures', []).append(
                f"default_samples must be an integer >= 2: {self.get('Figures', 'default_samples')}"
            )

        if not 1 <= self.DIGITS <= 17:
            errors.setdefault('Output', []).append(f"digits must lie in [1, 17]: {self.get('Output', 'digits')}")
        if self.REPORT_FORMAT not in REPORT_FORMATS:
            errors.setdefault('Output', []).append(
                f"report_format must be one of {', '.join(REPORT_FORMATS)}: {self.REPORT_FORMAT}"
            )

        if self.LOG_LEVEL not in LOG_LEVELS:
            errors.setdefault('Logging', []).append(f"Unknown log level: {self.LOG_LEVEL}")

        return errors

    def print_summary(self):
        """Print configuration summary."""
        print("\n" + "=" * 60)
        print("Configuration Summary")
        print("=" * 60)
        source = self.loaded_from if self.loaded_from else "built-in defaults"
        print(f"  Source: {source}")

        for section in self.config.sections():
            print(f"\n[{section}]")
            for key, value in self.config.items(section, raw=True):
                print(f"  {key} = {value}")

        print("=" * 60)
