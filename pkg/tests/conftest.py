"""
Shared fixtures. The application modules live flat at the repository root.
"""

import sys
from pathlib import Path

import mpmath
import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


@pytest.fixture
def mp():
    """mpmath at 30 digits, restored afterwards."""
    with mpmath.workdps(30):
        yield mpmath


@pytest.fixture
def config_file(tmp_path):
    """Write an INI file under tmp_path and return its path."""
    def write(content: str, name: str = 'hypverify.ini') -> Path:
        path = tmp_path / name
        path.write_text(content)
        return path
    return write


@pytest.fixture
def missing_config(tmp_path):
    """Path of a config file that does not exist (defaults apply)."""
    return tmp_path / 'absent.ini'


@pytest.fixture
def default_config(missing_config):
    from config_manager import ConfigManager
    return ConfigManager(missing_config)
