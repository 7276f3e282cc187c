"""
Logging setup for the Ramanujan transformation verifier.
Keeps the bracketed component prefixes on every record.
"""

import logging
import sys
from typing import Optional

from constants import DEFAULT_LOG_LEVEL, LOG_PREFIXES

ROOT_LOGGER_NAME = 'hypverify'


class PrefixFormatter(logging.Formatter):
    """Render records as '<[COMPONENT]> message'."""

    def format(self, record: logging.LogRecord) -> str:
        component = record.name.rsplit('.', 1)[-1].upper()
        prefix = LOG_PREFIXES.get(component, f'[{component}]')
        message = super().format(record)
        if record.levelno >= logging.WARNING:
            return f"{prefix} {record.levelname}: {message}"
        return f"{prefix} {message}"


def get_logger(component: str) -> logging.Logger:
    """Get the logger of a component listed in LOG_PREFIXES."""
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{component.lower()}")


def configure_logging(level: Optional[str] = None, stream=None) -> logging.Logger:
    """Attach a single prefixed stderr handler to the application logger.

    Safe to call more than once; the handler is replaced, not duplicated.
    """
    root = logging.getLogger(ROOT_LOGGER_NAME)
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(PrefixFormatter('%(message)s'))
    root.addHandler(handler)

    name = (level or DEFAULT_LOG_LEVEL).upper()
    root.setLevel(getattr(logging, name, logging.WARNING))
    root.propagate = False
    return root
