import json

import pytest

import main as cli
from hypergeometric import catalog, elliptic
from hypergeometric.errors import ConvergenceError, UnsupportedArgumentError
from verifier import Verifier


@pytest.fixture
def run(missing_config):
    """Run the CLI against built-in defaults and return the exit code."""
    def invoke(*args):
        return cli.main(['--config', str(missing_config), *args])
    return invoke


def test_list(run, capsys):
    assert run('list') == 0
    out = capsys.readouterr().out
    for entry_id in catalog.catalog_ids():
        assert entry_id in out


def test_verify_pass(run, capsys):
    assert run('verify', 'CUBIC', '--samples', '20') == 0
    out = capsys.readouterr().out
    assert 'PASS' in out
    assert '✅' in out


def test_verify_fail(run, capsys):
    assert run('verify', 'RBBG', '--samples', '10', '--tol', '1e-300') == 1
    assert 'FAIL' in capsys.readouterr().out


@pytest.mark.parametrize('args', [
    ('verify', 'NOPE'),
    ('verify', 'RBBG', '--min', '-0.6'),
    ('verify', 'CUBIC', '--samples', '1'),
    ('verify', 'BR2'),
    ('eval', 'BF1'),
    ('eval', 'BR2', '--a', '0.5'),
    ('eval', 'COMM', '--digits', '30'),
    ('singular', '--n', '0'),
    ('figure', '9X', '--out', 'never.csv'),
    ('bogus',),
    (),
])
def test_usage_errors(run, args):
    assert run(*args) == 2


def test_verify_format_to_stdout(run, capsys):
    assert run('verify', 'CUBIC', '--samples', '10', '--format', 'json') == 0
    data = json.loads(capsys.readouterr().out)
    assert data['identity_id'] == 'CUBIC'
    assert data['pass'] is True


def test_verify_report_file(run, tmp_path, capsys):
    out = tmp_path / 'cubic.csv'
    assert run('verify', 'CUBIC', '--samples', '10', '--out', str(out), '--format', 'csv') == 0
    header = out.read_text().splitlines()[0].split(',')
    assert 'domain_min' in header and 'pass' in header
    assert str(out) in capsys.readouterr().out


def test_eval_prints_route(run, capsys):
    assert run('eval', 'RS3') == 0
    assert 'PfaffContinuation' in capsys.readouterr().out


def test_eval_parametric(run, capsys):
    assert run('eval', 'FF3', '--a', '0.3333333333333333', '--digits', '12') == 0
    assert 'FF3(a=0.3333333333333333)' in capsys.readouterr().out


def test_eval_ratio(run):
    assert run('eval', 'R1', '--a', '0.5') == 0


def test_singular(run, capsys):
    assert run('singular', '--n', '9') == 0
    out = capsys.readouterr().out
    assert 'x_n' in out
    assert 'closed form' in out


def test_figure(run, tmp_path, capsys):
    out = tmp_path / 'fig3r.csv'
    assert run('figure', '3R', '--out', str(out), '--samples', '15') == 0
    assert out.read_text().splitlines()[0] == 'p,lhs,rhs'


def test_numerical_failure_exit_code(run, monkeypatch):
    def fail(self, entry_id, a=None):
        raise ConvergenceError('Series did not reach tol')
    monkeypatch.setattr(Verifier, 'run_eval', fail)
    assert run('eval', 'COMM') == 3


def test_help(run, capsys):
    assert run('--help') == 0
    assert 'Examples:' in capsys.readouterr().out


def test_show_config(run, capsys):
    assert run('--show-config') == 0
    assert 'Configuration Summary' in capsys.readouterr().out


def test_create_config(tmp_path, capsys):
    path = tmp_path / 'created.ini'
    assert cli.main(['--config', str(path), '--create-config']) == 0
    assert path.exists()
    assert cli.main(['--config', str(path), 'list']) == 0


def test_invalid_config_is_usage_error(config_file, capsys):
    path = config_file("[Sweep]\nworkers = 0\n")
    assert cli.main(['--config', str(path), 'list']) == 2
    assert 'workers' in capsys.readouterr().out


def test_workers_option(run):
    assert run('--workers', '2', 'verify', 'CUBIC', '--samples', '12') == 0
    assert run('--workers', '0', 'list') == 2


def test_eval_json(run, capsys):
    assert run('eval', 'KUMMER', '--json') == 0
    data = json.loads(capsys.readouterr().out)
    assert data['entry_id'] == 'KUMMER'
    assert data['route'] == 'PfaffContinuation'
    assert data['pass'] is True


def test_sweep_engine_failure_exit_code(run, monkeypatch):
    def reject(params, z, tol=None, **kwargs):
        raise UnsupportedArgumentError(1.0)
    monkeypatch.setattr(catalog, 'eval_auto', reject)
    assert run('verify', 'COMPANION', '--samples', '5') == 3


def test_singular_not_converged_exit_code(run, monkeypatch):
    monkeypatch.setattr(elliptic, 'SINGULAR_MAX_ITERATIONS', 2)
    assert run('singular', '--n', '5') == 3


def test_figure_output_is_reproducible(run, tmp_path):
    first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
    assert run('figure', '4', '--out', str(first), '--samples', '21') == 0
    assert run('figure', '4', '--out', str(second), '--samples', '21') == 0
    assert first.read_bytes() == second.read_bytes()
