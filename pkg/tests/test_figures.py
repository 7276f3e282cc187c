import csv

import numpy as np
import pytest

from constants import FIGURE_IDS
from figures import build_figure, emit_figure
from hypergeometric import maps


@pytest.mark.parametrize('figure_id', FIGURE_IDS)
def test_every_figure_builds(figure_id):
    series = build_figure(figure_id, 25)
    data = series.as_array()
    assert data.shape[1] == len(series.columns)
    assert 0 < data.shape[0] <= 25
    assert np.all(np.isfinite(data))
    assert np.all(np.diff(data[:, 0]) > 0.0)


def test_pole_rows_are_skipped():
    # 21 points on [-4, 4] include p = 0, where beta(1/p) has a pole
    series = build_figure('1L', 21)
    assert len(series.rows) == 20
    assert 0.0 not in series.as_array()[:, 0]


def test_identity_columns_coincide():
    series = build_figure('3R', 40)
    assert series.columns == ['p', 'lhs', 'rhs']
    for _, lhs, rhs in series.rows:
        assert rhs == pytest.approx(lhs, rel=1e-9)


def test_maps_figure_columns():
    series = build_figure('3L', 11)
    for p, beta, alpha, alpha_ell in series.rows:
        assert beta == maps.beta(p)
        assert alpha == maps.alpha(p)
        # alpha / (alpha - 1) cancels as p -> 1, so compare with the factored form
        factored = -p ** 3 * (2.0 + p) / ((1.0 - p) * (1.0 + p) ** 3)
        assert alpha_ell == pytest.approx(factored, rel=1e-13, abs=1e-15)
        if p < 0.9:
            assert alpha_ell == pytest.approx(alpha / (alpha - 1.0), rel=1e-12, abs=1e-15)


def test_ratio_figure():
    series = build_figure('4', 41)
    assert series.columns[0] == 'a'
    for _, _, _, numeric, law in series.rows:
        assert numeric == pytest.approx(law, abs=1e-9)


def test_bad_requests():
    with pytest.raises(KeyError):
        build_figure('9', 10)
    with pytest.raises(ValueError):
        build_figure('1R', 1)


def test_emit_csv(tmp_path):
    out = tmp_path / 'figs' / 'fig1r.csv'
    series = emit_figure('1R', out, 12)
    with open(out, newline='') as f:
        rows = list(csv.reader(f))
    assert rows[0] == ['p', 'alpha', 'inv_alpha_inv']
    assert len(rows) == len(series.rows) + 1
    assert [float(v) for v in rows[1]] == list(series.rows[0])
