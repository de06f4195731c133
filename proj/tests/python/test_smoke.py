import math

import numpy as np
import pytest

import wignerab as wa


def test_closed_form_origin():
    assert wa.wdf(wa.normalized_params(), 0.0, 0.0) == pytest.approx(4 * math.sqrt(math.pi) * (1 + math.exp(-25)), rel=1e-12)


def test_sampled_field_shape_and_marginal():
    grid = wa.Grid2D(wa.Grid1D(-12, 12, 241), wa.Grid1D(-4, 4, 161))
    params = wa.normalized_params(delta=4.0)
    field = wa.sample_wdf(params, grid)
    assert field.shape == (241, 161)
    _, pm = wa.marginals(grid, field)
    direct = wa.sample_p_marginal(params, grid.p_axis)
    assert np.max(np.abs(pm - direct)) < 1e-6 * direct.max()


def test_numeric_matches_closed_form():
    grid = wa.Grid2D(wa.Grid1D(-12, 12, 241), wa.Grid1D(-4, 4, 81))
    params = wa.normalized_params(delta=1.0)
    numeric = wa.wigner_numeric(params, grid, threads=2)
    exact = wa.sample_wdf(params, grid)
    assert np.max(np.abs(numeric - exact)) < 1e-6 * np.max(np.abs(exact))


def test_fringe_shift():
    p = wa.Grid1D(-4, 4, 512)
    cur = wa.sample_p_marginal(wa.normalized_params(delta=4.0), p)
    ref = wa.sample_p_marginal(wa.normalized_params(), p)
    assert wa.fringe_shift(p, cur, ref) == pytest.approx(0.4, abs=2e-3)
    assert wa.fringe_period(p, ref) == pytest.approx(math.pi / 5, abs=1e-3)


def test_pattern_interval():
    grid = wa.Grid2D(wa.Grid1D(-12, 12, 241), wa.Grid1D(-6, 6, 121))
    params = wa.normalized_params()
    up = wa.sample_slit_wdf(params, wa.Slit.upper, grid)
    down = wa.sample_slit_wdf(params, wa.Slit.lower, grid)
    assert wa.common_projection_interval(grid, up, down, wa.Axis.position, 1e-4) is None
    lo, hi = wa.common_projection_interval(grid, up, down, wa.Axis.momentum, 1e-4)
    assert lo < 0 < hi


def test_errors_map_to_python():
    with pytest.raises(wa.InvalidInput):
        wa.SlitPairParams(x0=-1.0)
    with pytest.raises(wa.Error):
        wa.Grid1D(0, 1, 1)
    assert wa.delta_from_flux(1.0, 1.0) == pytest.approx(2 * math.pi)


def test_sampled_curves_match_pointwise():
    grid = wa.Grid1D(-4, 4, 33)
    params = wa.normalized_params(alpha=6.0, delta=4.0)
    sampled = wa.sample_p_marginal(params, grid)
    expected = [wa.p_marginal(params, p) for p in grid.points()]
    assert np.allclose(sampled, expected, rtol=1e-14, atol=0)
    assert np.allclose(grid.points(), np.linspace(-4, 4, 33), rtol=0, atol=1e-15)
