"""Floating-point oracle: integrate each half orbit and time it.

Orbits start at ``(x0, 0)`` with ``x0 > 0`` and run into their own
half-plane until they hit ``y = 0`` again.  The upper orbit runs in time
direction ``-delta`` and the lower one in ``+delta``, so the recorded
flight times carry the same signs as the exact half periods.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional, Sequence

import numpy as np
from numpy.polynomial.polynomial import polyval2d
from scipy.integrate import DOP853
from scipy.optimize import brentq

from .field import PiecewiseField, classify, side_sign
from .period import PeriodData, period_constants

_EPS = np.finfo(float).eps


class OracleError(RuntimeError):
    """The numeric integration could not produce a measurement."""


def default_grid(lo: float = 1e-3, hi: float = 1e-1, n: int = 12) -> tuple[float, ...]:
    return tuple(float(x) for x in np.logspace(np.log10(lo), np.log10(hi), n))


@dataclass(frozen=True)
class SimulationConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    event_tol: float = 1e-13
    max_steps: int = 100_000
    x_grid: tuple[float, ...] = dc_field(default_factory=default_grid)
    radius: float = 1.0

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol", "event_tol"):
            value = getattr(self, name)
            if not 0 < value <= 1e-6:
                raise ValueError(f"{name} must lie in (0, 1e-6], got {value}")
        if any(not 0 < x <= self.radius for x in self.x_grid):
            raise ValueError("grid values must lie in (0, radius]")


@dataclass(frozen=True)
class OrbitMeasurement:
    x0: float
    landing_x_plus: float
    landing_x_minus: float
    time_plus: float
    time_minus: float
    period: float


@dataclass(frozen=True)
class ConvergenceReport:
    x: tuple[float, ...]
    numeric: tuple[float, ...]
    series: tuple[float, ...]
    residual: tuple[float, ...]
    slope: Optional[float]
    saturated: bool
    points_used: int
    order: int


def _rhs(field: PiecewiseField, side, reparametrize: bool = False) -> Callable:
    X, Y = field.components(side)
    cx, cy = X.float_coefficients(), Y.float_coefficients()

    def fun(t, state):
        x, y = state
        vx = polyval2d(x, y, cx)
        vy = polyval2d(x, y, cy)
        if reparametrize:
            scale = abs(vx)
            return np.array([vx / scale, vy / scale])
        return np.array([vx, vy])

    return fun


def _half_orbit(fun: Callable, side: int, direction: int, speed: float,
                x0: float, cfg: SimulationConfig) -> tuple[float, float]:
    # The orbit crosses at most ~2 x0 horizontally at speed ~|X(0,0)|.
    scale = x0 / speed
    solver = DOP853(
        fun, 0.0, np.array([x0, 0.0]), direction * 1e3 * (scale + 1.0),
        rtol=max(cfg.rel_tol, 100 * _EPS), atol=cfg.abs_tol,
        max_step=0.05 * scale, first_step=1e-3 * scale,
    )
    escape = 1e-6 * scale
    t_old = 0.0
    for _ in range(cfg.max_steps):
        solver.step()
        if solver.status == "failed":
            raise OracleError(f"integrator failed: {solver.status}")
        t_new, (x_new, y_new) = solver.t, solver.y
        if np.hypot(x_new, y_new) > cfg.radius:
            raise OracleError("orbit escapes the neighborhood")
        height = side * y_new
        if height > 0:
            t_old = t_new
        elif t_old == 0.0:
            if abs(t_new) > escape or height < 0:
                raise OracleError("orbit does not enter its half-plane")
        else:
            dense = solver.dense_output()
            if height == 0:
                t_hit = t_new
            else:
                t_hit = brentq(lambda t: dense(t)[1], t_old, t_new,
                               xtol=cfg.event_tol, rtol=4 * _EPS)
            return float(dense(t_hit)[0]), float(t_hit)
        if solver.status == "finished":
            break
    raise OracleError("max_steps exceeded before the orbit returned")


def integrate_half_orbit(field: PiecewiseField, side, x0: float,
                         cfg: SimulationConfig = SimulationConfig(),
                         reparametrize: bool = False) -> tuple[float, float]:
    """Return ``(landing_x, signed flight time)`` of the half orbit from ``(x0, 0)``."""
    if not 0 < x0 <= cfg.radius:
        raise ValueError("x0 must lie in (0, radius]")
    s = side_sign(side)
    delta = classify(field).delta
    X, _ = field.components(s)
    speed = 1.0 if reparametrize else abs(float(X[0, 0]))
    return _half_orbit(_rhs(field, s, reparametrize), s, -s * delta, speed, x0, cfg)


def numeric_period(field: PiecewiseField, x0: float,
                   cfg: SimulationConfig = SimulationConfig()) -> OrbitMeasurement:
    delta = classify(field).delta
    lp, tp = integrate_half_orbit(field, 1, x0, cfg)
    lm, tm = integrate_half_orbit(field, -1, x0, cfg)
    return OrbitMeasurement(x0, lp, lm, tp, tm, delta * (tm - tp))


def numeric_tilde_period(field: PiecewiseField, x0: float,
                         cfg: SimulationConfig = SimulationConfig()) -> float:
    """Period of the time-reparametrized field ``Z / |X|``."""
    delta = classify(field).delta
    _, tp = integrate_half_orbit(field, 1, x0, cfg, reparametrize=True)
    _, tm = integrate_half_orbit(field, -1, x0, cfg, reparametrize=True)
    return delta * (tm - tp)


def measure_grid(field: PiecewiseField, cfg: SimulationConfig = SimulationConfig(),
                 workers: int = 1) -> list[OrbitMeasurement]:
    """Measure every grid point; ``workers > 1`` spreads them over threads."""
    if not cfg.x_grid:
        raise ValueError("empty grid")
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(lambda x: numeric_period(field, x, cfg), cfg.x_grid))
    return [numeric_period(field, x, cfg) for x in cfg.x_grid]


def loglog_slope(xs: Sequence[float], residuals: Sequence[float]) -> float:
    """Least-squares slope of ``log residual`` against ``log x``."""
    return float(np.polyfit(np.log(xs), np.log(residuals), 1)[0])


def convergence_report(field: PiecewiseField, order: int,
                       cfg: SimulationConfig = SimulationConfig(),
                       data: Optional[PeriodData] = None,
                       workers: int = 1) -> ConvergenceReport:
    """Compare numeric periods with the order-``order`` truncated period series.

    Points whose residual is below ``10 * event_tol`` sit at the noise floor
    and are left out of the fit; if all of them do, the report is saturated.
    """
    xs = tuple(cfg.x_grid)
    if not xs:
        raise ValueError("empty grid")
    if np.log10(max(xs) / min(xs)) < 1.5:
        raise ValueError("grid must span at least 1.5 decades")
    if data is None:
        data = period_constants(field, order)
    poly = data.T.truncate(order)
    numeric = [m.period for m in measure_grid(field, cfg, workers)]
    series = [poly(x) for x in xs]
    residual = [abs(a - b) for a, b in zip(numeric, series)]
    floor = 10 * cfg.event_tol
    keep = [(x, r) for x, r in zip(xs, residual) if r > floor]
    if len(keep) < 3:
        slope, saturated = None, True
    else:
        slope, saturated = loglog_slope(*zip(*keep)), False
    return ConvergenceReport(xs, tuple(numeric), tuple(series), tuple(residual),
                             slope, saturated, len(keep), order)
