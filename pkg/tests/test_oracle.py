import numpy as np
import pytest

from tangential_period import fixtures
from tangential_period.oracle import (
    OracleError, SimulationConfig, convergence_report, default_grid, integrate_half_orbit,
    measure_grid, numeric_period, numeric_tilde_period,
)

from conftest import cubic_center, random_centers

CFG = SimulationConfig()


@pytest.mark.parametrize("make,side,landing,time", [
    (fixtures.e1, 1, -0.1, -0.2),
    (fixtures.e1, -1, -0.1, 0.2),
    (fixtures.e2, 1, -0.1, -0.1),
])
def test_half_orbit_examples(make, side, landing, time):
    lx, t = integrate_half_orbit(make(), side, 0.1, CFG)
    assert lx == pytest.approx(landing, abs=1e-9)
    assert t == pytest.approx(time, abs=1e-9)


@pytest.mark.parametrize("make,want", [(fixtures.e1, 0.4), (fixtures.e2, 0.3), (fixtures.e3, 0.4)])
def test_period_examples(make, want):
    assert numeric_period(make(), 0.1, CFG).period == pytest.approx(want, abs=1e-8)


@pytest.mark.parametrize("make,x0,want", [
    (fixtures.e1, 0.1, 0.4), (fixtures.e2, 0.1, 0.4), (fixtures.e3, 0.05, 0.2)])
def test_tilde_examples(make, x0, want):
    assert numeric_tilde_period(make(), x0, CFG) == pytest.approx(want, abs=1e-8)


def test_counterclockwise_field():
    # E1 traversed the other way round.
    field = fixtures.polynomial_field(({(0, 0): -1}, {(1, 0): 1}), ({(0, 0): 1}, {(1, 0): 1}), 4)
    m = numeric_period(field, 0.1, CFG)
    assert m.period == pytest.approx(0.4, abs=1e-9)
    assert m.time_plus > 0 > m.time_minus


def test_config_validation():
    with pytest.raises(ValueError):
        SimulationConfig(abs_tol=1e-3)
    with pytest.raises(ValueError):
        SimulationConfig(event_tol=0.0)
    with pytest.raises(ValueError):
        SimulationConfig(x_grid=(0.5, 2.0))
    with pytest.raises(ValueError):
        integrate_half_orbit(fixtures.e1(), 1, -0.1, CFG)


def test_empty_grid():
    cfg = SimulationConfig(x_grid=())
    with pytest.raises(ValueError, match="empty grid"):
        convergence_report(fixtures.e1(), 4, cfg)
    with pytest.raises(ValueError, match="empty grid"):
        measure_grid(fixtures.e1(), cfg)


def test_step_budget():
    cfg = SimulationConfig(max_steps=3)
    with pytest.raises(OracleError, match="max_steps"):
        numeric_period(fixtures.e1(), 0.1, cfg)


def test_e1_saturates():
    report = convergence_report(fixtures.e1(), 4, CFG)
    assert report.saturated and report.slope is None
    assert max(report.residual) < 10 * CFG.event_tol


def test_cubic_center_slope():
    report = convergence_report(cubic_center(), 2, CFG)
    assert not report.saturated
    assert report.slope >= 2.5


def test_random_center_slope():
    field = random_centers(1, seed=77, order=6)[0]
    cfg = SimulationConfig(x_grid=default_grid(3e-3, 2e-1, 8))
    report = convergence_report(field, 3, cfg)
    assert report.slope >= 3.5


def test_sign_invariants():
    fields = [fixtures.e1(), fixtures.e2(), fixtures.e3(), fixtures.e5(), cubic_center()]
    for field in fields:
        for x0 in (0.01, 0.05, 0.2):
            m = numeric_period(field, x0, CFG)
            assert m.period >= 0
            assert m.time_plus * m.time_minus <= 0
            assert m.landing_x_plus < 0 and m.landing_x_minus < 0


def test_landings_agree_on_centers_only():
    centers = [fixtures.e1(), fixtures.e3(), cubic_center()] + random_centers(3, seed=4, exact=True)
    for field in centers:
        m = numeric_period(field, 0.05, CFG)
        assert abs(m.landing_x_plus - m.landing_x_minus) < 10 * CFG.event_tol
    m = numeric_period(fixtures.e5(), 0.05, CFG)
    assert abs(m.landing_x_plus - m.landing_x_minus) > 1e-4


def test_tilde_matches_landing():
    for field in [fixtures.e2(), cubic_center()] + random_centers(3, seed=8, exact=True):
        for x0 in (0.02, 0.1):
            m = numeric_period(field, x0, CFG)
            tilde = numeric_tilde_period(field, x0, CFG)
            assert tilde == pytest.approx(2 * (x0 - m.landing_x_plus), abs=1e-10)


def test_halving_tolerances():
    field = random_centers(1, seed=19)[0]
    loose = SimulationConfig(abs_tol=1e-10, rel_tol=1e-10, event_tol=1e-11)
    tight = SimulationConfig(abs_tol=5e-11, rel_tol=5e-11, event_tol=5e-12)
    for x0 in (0.01, 0.1):
        a = numeric_period(field, x0, loose).period
        b = numeric_period(field, x0, tight).period
        assert abs(a - b) < 1e-8


def test_threaded_grid_matches_sequential():
    field = cubic_center()
    cfg = SimulationConfig(x_grid=default_grid(n=6))
    assert measure_grid(field, cfg, workers=4) == measure_grid(field, cfg)


def test_escape_is_reported():
    # phi(x) = -x - 2x^2/3 + ..., so the landing lies farther out than x0
    field = fixtures.polynomial_field(({(0, 0): 1}, {(1, 0): -1, (2, 0): -1}),
                                      ({(0, 0): -1}, {(1, 0): -1}), 4)
    cfg = SimulationConfig(radius=0.1, x_grid=())
    with pytest.raises(OracleError, match="escapes"):
        integrate_half_orbit(field, 1, 0.1, cfg)


def test_truncated_center_is_center_only_to_its_order():
    # a non-constant speed is truncated in the lower field: landings then
    # differ at high order, and only there
    field = random_centers(1, seed=4)[0]
    m = numeric_period(field, 0.05, CFG)
    assert 1e-12 < abs(m.landing_x_plus - m.landing_x_minus) < 0.05 ** (field.order + 1)
