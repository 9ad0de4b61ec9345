"""Period function and period constants of a tangential center.

The signed half-periods are

    T±(x) = (phi(x) - x) * int_0^1 dt / X±(x + (phi(x) - x) t, y±(±delta (phi(x) - x) t, x))

and ``T = delta (T- - T+)``.  The integrand is expanded as a series in
``x`` with polynomial-in-``t`` coefficients and integrated exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .field import PiecewiseField, classify, side_sign
from .halfreturn import center_check, max_alpha_order, y_coefficients
from .series import MixedSeries, Series1, TruncationError, eval2_at_series, t_integrate_01


class NotACenterError(ValueError):
    """The two half-return maps differ; ``first_mismatch_index`` says where."""

    def __init__(self, first_mismatch_index: int, order: int):
        super().__init__(
            f"not a center to requested order {order} "
            f"(first_mismatch_index = {first_mismatch_index})"
        )
        self.first_mismatch_index = first_mismatch_index
        self.order = order


@dataclass(frozen=True)
class PeriodData:
    Tplus: Series1
    Tminus: Series1
    T: Series1
    That: tuple[Fraction, ...]
    order: int
    phi: Series1
    delta: int


def t_degree_bound(field: PiecewiseField, order: int) -> int:
    cls = classify(field)
    return order * max(2 * cls.kplus, 2 * cls.kminus) + 2


def scaled_flow_series(field: PiecewiseField, side, phi: Series1, order: int) -> MixedSeries:
    """``y±(±delta (phi(x) - x) t, x)`` as a series in ``x`` exact through ``order``."""
    s = side_sign(side)
    delta = classify(field).delta
    if order < 1:
        return MixedSeries.zero(max(order, -1), t_degree_bound(field, max(order, 0)))
    ys = y_coefficients(field, s, order)
    scale = (phi - Series1.identity(phi.order)) * (s * delta)
    bound = t_degree_bound(field, order)
    total = MixedSeries.zero(order, bound)
    power = None
    for i in range(1, order + 1):
        power = scale if power is None else power * scale
        term = ys[i] * power * Fraction(1, math.factorial(i))
        total = total + MixedSeries.from_series1(term, t_power=i, t_bound=bound)
    if total.order < order:
        raise TruncationError(
            f"scaled flow is exact only through x^{total.order}, requested {order}"
        )
    return total.truncate(order)


def half_period_series(field: PiecewiseField, side, phi: Series1, order: int) -> Series1:
    """Signed half-period ``T±`` through ``x^order``."""
    s = side_sign(side)
    X, _ = field.components(s)
    if X[0, 0] == 0:
        raise ZeroDivisionError("X vanishes at the origin")
    bound = t_degree_bound(field, order)
    gap = phi.truncate(order) - Series1.identity(order)
    v = scaled_flow_series(field, s, phi, max(order - 1, 0))
    u = (MixedSeries.from_series1(Series1.identity(order), t_bound=bound)
         + MixedSeries.from_series1(gap, t_power=1, t_bound=bound))
    integrand = eval2_at_series(X, u, v).reciprocal()
    T = gap * t_integrate_01(integrand)
    if T.order < order:
        raise TruncationError(f"half period exact only through x^{T.order}, requested {order}")
    return T.truncate(order)


def max_period_order(field: PiecewiseField) -> int:
    return max_alpha_order(field)


def period_constants(field: PiecewiseField, order: Optional[int] = None) -> PeriodData:
    """Period constants ``T_0 .. T_order`` of a tangential center."""
    cls = classify(field)
    if order is None:
        order = max_period_order(field)
    report = center_check(field, max(order, 1))
    if not report.is_center_to_order:
        raise NotACenterError(report.first_mismatch_index, order)
    phi = report.phi
    Tplus = half_period_series(field, 1, phi, order)
    Tminus = half_period_series(field, -1, phi, order)
    T = (Tminus - Tplus) * cls.delta
    That = tuple(T[i] for i in range(order + 1))

    assert That[0] == 0, "period must vanish at the origin"
    if order >= 1:
        assert That[1] > 0, "first period constant must be positive"
        assert Tplus[1] * Tminus[1] < 0, "half periods must have opposite signs"
    return PeriodData(Tplus, Tminus, T, That, order, phi, cls.delta)


def corollary_values(field: PiecewiseField) -> tuple[Fraction, Fraction]:
    """Closed forms ``(T_0, T_1) = (0, 2 delta (X- - X+) / (X+ X-))`` at the origin."""
    delta = classify(field).delta
    xp, xm = field.Xplus[0, 0], field.Xminus[0, 0]
    return Fraction(0), 2 * delta * (xm - xp) / (xp * xm)


def tilde_period(phi: Series1) -> Series1:
    """Period ``2 (x - phi(x))`` of the reparametrized field."""
    return (Series1.identity(phi.order) - phi) * 2
