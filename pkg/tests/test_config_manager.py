import pytest

from config_manager import ConfigManager
from constants import DEFAULT_CONFIG_VALUES


def test_missing_file_means_defaults(missing_config):
    config = ConfigManager(missing_config)
    assert config.loaded_from is None
    assert config.ENGINE_TOL == 1e-15
    assert config.SWEEP_SAMPLES == 200
    assert config.SWEEP_TOL == 1e-9
    assert config.ENDPOINT_EPSILON == 1e-6
    assert config.WORKERS == 1
    assert config.SINGULAR_TOL == 1e-14
    assert config.FIGURE_SAMPLES == 400
    assert config.DIGITS == 17
    assert config.REPORT_FORMAT == 'json'
    assert config.LOG_LEVEL == 'WARNING'
    assert config.validate() == {}


def test_file_overrides_defaults(config_file):
    path = config_file("""
[Sweep]
default_samples = 50
workers = 3

[Output]
report_format = CSV

[Logging]
level = debug
""")
    config = ConfigManager(path)
    assert config.loaded_from == path
    assert config.SWEEP_SAMPLES == 50
    assert config.WORKERS == 3
    assert config.REPORT_FORMAT == 'csv'
    assert config.LOG_LEVEL == 'DEBUG'
    # untouched keys keep their defaults
    assert config.SWEEP_TOL == 1e-9
    assert config.validate() == {}


@pytest.mark.parametrize('section, key, value', [
    ('Engine', 'default_tol', '-1'),
    ('Sweep', 'default_samples', 'many'),
    ('Sweep', 'endpoint_epsilon', '0.5'),
    ('Sweep', 'workers', '0'),
    ('Singular', 'default_tol', '1e-20'),
    ('Figures', 'default_samples', '1'),
    ('Output', 'digits', '40'),
    ('Output', 'report_format', 'xml'),
    ('Logging', 'level', 'LOUD'),
])
def test_validate_flags_bad_values(config_file, section, key, value):
    config = ConfigManager(config_file(f"[{section}]\n{key} = {value}\n"))
    errors = config.validate()
    assert section in errors
    assert len(errors) == 1


def test_malformed_file_falls_back_to_defaults(config_file):
    config = ConfigManager(config_file("workers = 3\n"))
    assert config.loaded_from is None
    assert config.WORKERS == 1


def test_create_default_config_round_trips(tmp_path):
    path = tmp_path / 'nested' / 'hypverify.ini'
    created = ConfigManager(path).create_default_config()
    assert created == path
    text = path.read_text()
    for section in DEFAULT_CONFIG_VALUES:
        assert f"[{section}]" in text

    config = ConfigManager(path)
    assert config.loaded_from == path
    assert config.validate() == {}
    for section, values in DEFAULT_CONFIG_VALUES.items():
        for key, value in values.items():
            assert config.get(section, key) == value


def test_get_fallback(missing_config):
    config = ConfigManager(missing_config)
    assert config.get('Nope', 'key', 'fallback') == 'fallback'


def test_print_summary(missing_config, capsys):
    ConfigManager(missing_config).print_summary()
    out = capsys.readouterr().out
    assert 'Configuration Summary' in out
    assert 'built-in defaults' in out
    assert '[Sweep]' in out
