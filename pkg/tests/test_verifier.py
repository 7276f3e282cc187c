import csv
import io
import json
import math

import pytest

from hypergeometric import catalog, elliptic, maps
from hypergeometric.catalog import Interval
from hypergeometric.elliptic import x9_closed_form
from hypergeometric.errors import ConvergenceError, UnsupportedArgumentError
from sweep_state import SweepState
from verifier import UsageError, Verifier, eval_record_dict, render_report, write_report


@pytest.fixture
def verifier(default_config):
    return Verifier(default_config)


# ---------------------------------------------------------------------
# Sweep state
# ---------------------------------------------------------------------

def test_sweep_state_reduction():
    state = SweepState('CUBIC', (0.0, 0.9), 'x')
    state.start()
    state.record(0.5, 2e-12, 1e-12)
    state.record(0.7, 3e-12, 4e-12)
    state.record(0.2, 1e-12, 4e-12)
    state.finish()

    report = state.report(1e-9)
    assert report.samples == 3
    assert report.max_abs_residual == 3e-12
    assert report.max_rel_residual == 4e-12
    assert report.worst_point == 0.2
    assert report.passed
    assert report.elapsed_ms >= 0
    assert not state.report(1e-13).passed


def test_non_finite_residual_fails_the_sweep():
    state = SweepState('RBBG', (0.0, 0.9))
    state.record(0.1, 1e-16, 1e-16)
    state.record(0.2, float('nan'), float('nan'))
    state.record(0.3, 2e-16, 2e-16)

    report = state.report(1e-9)
    assert not report.passed
    assert report.max_rel_residual == math.inf
    assert report.max_abs_residual == math.inf
    assert report.worst_point == 0.2


def test_report_dict_keys():
    state = SweepState('RBBG', (-0.49, 0.99))
    state.record(0.0, 0.0, 0.0)
    data = state.report(1e-9).to_dict()
    assert data['pass'] is True
    assert 'passed' not in data
    assert data['domain'] == [-0.49, 0.99]
    assert set(data) >= {'identity_id', 'samples', 'max_abs_residual', 'max_rel_residual',
                         'worst_point', 'elapsed_ms'}


# ---------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------

def test_sweep_bounds(verifier):
    domain = Interval(-0.5, 1.0, lo_open=True, hi_open=True)
    assert verifier.sweep_bounds(domain, None, None) == (-0.5 + 1e-6, 1.0 - 1e-6)
    assert verifier.sweep_bounds(domain, -0.49, 0.99) == (-0.49, 0.99)
    assert verifier.sweep_bounds(domain, -0.5, 0.5) == (-0.5 + 1e-6, 0.5)

    closed = Interval(0.0, 0.95)
    assert verifier.sweep_bounds(closed, None, None) == (0.0, 0.95)


@pytest.mark.parametrize('lo, hi', [(-0.6, 0.5), (0.0, 1.5), (0.5, 0.5), (0.6, 0.2)])
def test_sweep_bounds_rejects(verifier, lo, hi):
    with pytest.raises(UsageError):
        verifier.sweep_bounds(Interval(-0.5, 1.0, lo_open=True, hi_open=True), lo, hi)


def test_rbbg_extended_sweep(verifier):
    report = verifier.run_verify('RBBG', -0.49, 0.99, 500, 1e-9)
    assert report.passed
    assert report.samples == 500
    assert report.domain == (-0.49, 0.99)
    assert report.max_rel_residual <= 1e-9
    assert -0.49 <= report.worst_point <= 0.99


def test_sweep_defaults(verifier):
    report = verifier.run_verify('CUBIC')
    assert report.samples == 200
    assert report.tol == 1e-9
    assert report.variable == 'x'
    assert report.domain == (0.0, 0.95)
    assert report.passed


def test_parallel_sweep_matches_serial(default_config):
    serial = Verifier(default_config, workers=1).run_verify('COR', samples=40)
    parallel = Verifier(default_config, workers=4).run_verify('COR', samples=40)
    assert parallel.samples == serial.samples
    assert parallel.max_rel_residual == serial.max_rel_residual
    assert parallel.max_abs_residual == serial.max_abs_residual
    assert parallel.worst_point == serial.worst_point


def test_ratio_and_parametric_sweeps(verifier):
    ratio = verifier.run_verify('R3', samples=50)
    assert ratio.variable == 'a'
    assert ratio.domain == (-1.0, 1.0)
    assert ratio.passed

    parametric = verifier.run_verify('LAS', samples=25)
    assert parametric.domain == (-0.9, 0.9)
    assert parametric.passed


def test_failing_sweep(verifier):
    report = verifier.run_verify('RBBG', samples=10, tol=1e-300)
    assert not report.passed


@pytest.mark.parametrize('entry_id, samples', [('NOPE', 10), ('BR2', 10), ('CUBIC', 1)])
def test_verify_usage_errors(verifier, entry_id, samples):
    with pytest.raises(UsageError):
        verifier.run_verify(entry_id, samples=samples)


# ---------------------------------------------------------------------
# Spot checks
# ---------------------------------------------------------------------

def test_eval_closed_form(verifier):
    record = verifier.run_eval('COMM')
    assert record.passed
    assert record.closed_form == pytest.approx(1.7514579, abs=5e-7)
    assert record.required_route is None


def test_eval_required_route(verifier):
    record = verifier.run_eval('RS3')
    assert record.route == 'PfaffContinuation'
    assert record.required_route == 'PfaffContinuation'
    assert record.route_ok and record.passed


def test_eval_kummer_route(verifier):
    record = verifier.run_eval('KUMMER')
    assert record.route == 'PfaffContinuation'
    assert record.rel_residual <= 1e-10


def test_eval_ratio(verifier):
    record = verifier.run_eval('R2', a=0.5)
    assert record.closed_form == pytest.approx(3.0 ** 0.5)
    assert record.passed
    data = eval_record_dict(record)
    assert data['pass'] is True
    assert data['entry_id'] == 'R2'


@pytest.mark.parametrize('entry_id, a', [
    ('R1', None), ('RBBG', None), ('BF1', None), ('BR2', 0.5), ('NOPE', None),
])
def test_eval_usage_errors(verifier, entry_id, a):
    with pytest.raises(UsageError):
        verifier.run_eval(entry_id, a)


def test_singular_nine(verifier):
    record = verifier.run_singular(9)
    assert record.n == 9
    assert record.ratio_residual <= 1e-12
    assert record.closed_form_deviation <= 1e-12
    assert abs(record.x_n - x9_closed_form()) <= 1e-12
    assert maps.alpha(maps.ESCAPE_POINTS.p_nine) == pytest.approx(record.x_n, abs=1e-12)


def test_singular_other_orders(verifier):
    record = verifier.run_singular(4)
    assert record.ratio_residual <= 1e-13
    assert record.closed_form_deviation is None


@pytest.mark.parametrize('n, tol', [(0, None), (3, 1e-20)])
def test_singular_usage_errors(verifier, n, tol):
    with pytest.raises(UsageError):
        verifier.run_singular(n, tol)


# ---------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------

def test_render_json(verifier):
    report = verifier.run_verify('CUBIC', samples=10)
    data = json.loads(render_report(report, 'json'))
    assert data['identity_id'] == 'CUBIC'
    assert data['samples'] == 10
    assert data['pass'] is True
    assert data['domain'] == [0.0, 0.95]


def test_render_csv(verifier):
    report = verifier.run_verify('CUBIC', samples=10)
    rows = list(csv.DictReader(io.StringIO(render_report(report, 'csv'))))
    assert len(rows) == 1
    row = rows[0]
    assert row['domain_min'] == '0.0'
    assert row['domain_max'] == '0.95'
    assert row['pass'] == 'True'
    assert float(row['max_rel_residual']) == report.max_rel_residual


def test_write_report(verifier, tmp_path):
    report = verifier.run_verify('CUBIC', samples=10)
    path = write_report(report, tmp_path / 'out' / 'cubic.json', 'json')
    assert json.loads(path.read_text())['identity_id'] == 'CUBIC'


def test_render_unknown_format(verifier):
    report = verifier.run_verify('CUBIC', samples=10)
    with pytest.raises(UsageError):
        render_report(report, 'xml')


# ---------------------------------------------------------------------
# Numerical failures
# ---------------------------------------------------------------------

def test_companion_default_sweep_reaches_near_unit(verifier):
    report = verifier.run_verify('COMPANION', samples=400)
    assert report.domain == (0.0, 1.0 - 1e-6)
    assert report.passed, report


def test_engine_failure_inside_domain_is_numerical(verifier, monkeypatch):
    def reject(params, z, tol=None, **kwargs):
        raise UnsupportedArgumentError(1.0)
    monkeypatch.setattr(catalog, 'eval_auto', reject)
    with pytest.raises(ConvergenceError, match='COMPANION failed at p='):
        verifier.run_verify('COMPANION', samples=5)


def test_singular_budget_exhausted(verifier, monkeypatch):
    monkeypatch.setattr(elliptic, 'SINGULAR_MAX_ITERATIONS', 3)
    with pytest.raises(ConvergenceError, match='n=7'):
        verifier.run_singular(7)
