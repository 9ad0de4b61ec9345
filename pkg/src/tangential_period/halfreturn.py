"""Half-return maps of a monodromic tangential singularity.

The flow of the reparametrized field through ``(x, 0)`` has second
component ``y(t, x) = sum_i y_i(x) t^i / i!``.  The coefficient functions
``y_i`` come from a closed recursion in ``f``, ``g`` and partial Bell
polynomials.  The Taylor coefficients ``mu_i`` of the height at which the
orbit crosses ``x = 0`` then determine the half-return map
``phi(x) = -x + alpha_2 x^2 + ...`` one coefficient at a time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .bell import ordinary_bell, partial_bell
from .field import PiecewiseField, classify, fg_series, side_sign
from .series import Series1, TruncationError, compose1


class DegenerateRecursionError(ArithmeticError):
    """The leading height coefficient ``mu_{2k}`` vanished."""


@dataclass(frozen=True)
class FlowYSeries:
    side: int
    entries: tuple[Series1, ...]  # y_1 .. y_M

    def __getitem__(self, i: int) -> Series1:
        """``y_i`` (1-based, as in the t-expansion)."""
        if i < 1 or i > len(self.entries):
            raise IndexError(f"y_{i} not computed (have y_1..y_{len(self.entries)})")
        return self.entries[i - 1]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class HalfReturnData:
    side: int
    mu: tuple[Fraction, ...]     # mu_0 .. mu_L
    alpha: tuple[Fraction, ...]  # alpha_0 = 0, alpha_1 = -1, alpha_2, ...
    order: int

    @property
    def phi(self) -> Series1:
        return Series1(self.alpha, self.order)


@dataclass(frozen=True)
class CenterReport:
    is_center_to_order: bool
    first_mismatch_index: Optional[int]
    phi: Optional[Series1]
    order: int
    alpha_plus: tuple[Fraction, ...]
    alpha_minus: tuple[Fraction, ...]


def max_alpha_order(field: PiecewiseField, side=None) -> int:
    """Largest ``n`` for which ``alpha_n`` is determined by the field's data."""
    cls = classify(field)
    ks = [cls.k(side)] if side is not None else [cls.kplus, cls.kminus]
    return field.order - 2 * max(ks) + 2


@lru_cache(maxsize=256)
def _y_cached(field: PiecewiseField, s: int, count: int) -> FlowYSeries:
    cls = classify(field)
    k, a = cls.k(s), cls.a(s)
    sd = s * cls.delta
    twok = 2 * k
    f, g = fg_series(field, s)

    fder = [f]
    for _ in range(count):
        fder.append(fder[-1].derivative())

    gpart: dict[tuple[int, int], Series1] = {}

    def gp(px, py):
        if (px, py) not in gpart:
            gpart[(px, py)] = g.partial_at_y0(px, py)
        return gpart[(px, py)]

    ys: list[Series1] = []
    bell_cache: dict[tuple[int, int], Series1] = {}

    def bell(l, j):
        if (l, j) not in bell_cache:
            bell_cache[(l, j)] = partial_bell(l, j, ys[: l - j + 1])
        return bell_cache[(l, j)]

    for i in range(1, count + 1):
        if i == 1:
            yi = f.shift(twok) + Series1.monomial(a, twok - 1, f.order + twok)
            ys.append(yi)
            continue
        terms = []
        if i <= twok:
            for l in range(i):
                c = math.comb(i - 1, l) * math.perm(twok, l)
                terms.append(fder[i - 1 - l].shift(twok - l) * c)
        else:
            terms.append(fder[i - 1 - twok] * (math.comb(i - 1, twok) * math.factorial(twok)))
            for l in range(twok):
                c = math.comb(i - 1, l) * math.perm(twok, l)
                terms.append(fder[i - l - 1].shift(twok - l) * c)
        head = _sum(terms)
        if i <= twok:
            head = head + Series1.monomial(
                a * math.perm(twok - 1, i - 1), twok - i, head.order
            )
        yi = head * sd ** (i - 1)
        for l in range(1, i):
            for j in range(1, l + 1):
                c = j * math.comb(i - 1, l) * sd ** (i - l - 1)
                yi = yi + bell(l, j) * gp(i - l - 1, j - 1) * c
        if yi.order < 0:
            raise TruncationError(
                f"y_{i} has no trustworthy coefficients at field order {field.order}"
            )
        ys.append(yi)
    return FlowYSeries(s, tuple(ys))


def _sum(series: Sequence[Series1]) -> Series1:
    total = series[0]
    for s in series[1:]:
        total = total + s
    return total


def y_coefficients(field: PiecewiseField, side, count: int) -> FlowYSeries:
    """Coefficient functions ``y_1 .. y_count`` of the reparametrized flow."""
    if count < 1:
        raise ValueError("count must be at least 1")
    if count > field.order + 1:
        raise TruncationError(
            f"y_{count} needs field order >= {count - 1}, have {field.order}"
        )
    return _y_cached(field, side_sign(side), count)


def mu_coefficients(ys: FlowYSeries, delta: int, count: Optional[int] = None) -> list[Fraction]:
    """``[mu_0, mu_1, ..., mu_L]``: Taylor coefficients of ``y(-+delta x, x)``.

    Without ``count`` every coefficient supported by ``ys`` is returned.
    """
    sign = -ys.side * delta
    available = 0
    for i in range(1, len(ys) + 1):
        if all(ys[j].order >= i - j for j in range(1, i + 1)):
            available = i
        else:
            break
    if count is None:
        count = available
    elif count > available:
        raise TruncationError(f"mu_{count} needs more y-coefficients (have up to mu_{available})")
    mu = [Fraction(0)]
    for i in range(1, count + 1):
        total = Fraction(0)
        for j in range(1, i + 1):
            c = ys[j][i - j]
            if c:
                total += Fraction(sign ** j, math.factorial(j)) * c
        mu.append(total)
    return mu


def alpha_coefficients(mu: Sequence[Fraction], k: int, order: int) -> list[Fraction]:
    """``[0, -1, alpha_2, ..., alpha_order]`` from the height coefficients."""
    twok = 2 * k
    if order >= 2 and len(mu) - 1 < order + twok - 1:
        raise TruncationError(
            f"alpha_{order} needs mu up to index {order + twok - 1}, have {len(mu) - 1}"
        )
    if len(mu) <= twok or mu[twok] == 0:
        raise DegenerateRecursionError("degenerate recursion denominator")
    alpha = [Fraction(0), Fraction(-1)]
    for n in range(2, order + 1):
        p = n + twok - 1
        poly = mu[twok] * ordinary_bell(p, twok, alpha[1:n] + [Fraction(0)])
        for i in range(twok + 1, p + 1):
            if mu[i]:
                poly += mu[i] * ordinary_bell(p, i, alpha[1: p - i + 2])
        alpha.append((poly - mu[p]) / (twok * mu[twok]))
    return alpha[: order + 1]


def half_return(field: PiecewiseField, side, order: Optional[int] = None) -> HalfReturnData:
    """Half-return map of one side through ``x^order``."""
    s = side_sign(side)
    cls = classify(field)
    k = cls.k(s)
    limit = max_alpha_order(field, s)
    if order is None:
        order = limit
    if order > limit:
        raise TruncationError(
            f"alpha_{order} on side {'+' if s > 0 else '-'} needs field order "
            f">= {order + 2 * k - 2}, have {field.order}"
        )
    needed = max(order + 2 * k - 1, 2 * k)
    ys = y_coefficients(field, s, needed)
    mu = mu_coefficients(ys, cls.delta, needed)
    alpha = alpha_coefficients(mu, k, order)
    return HalfReturnData(s, tuple(mu), tuple(alpha), order)


def center_check(field: PiecewiseField, order: Optional[int] = None) -> CenterReport:
    """Compare the two half-return maps coefficient by coefficient."""
    if order is None:
        order = max_alpha_order(field)
    plus = half_return(field, 1, order)
    minus = half_return(field, -1, order)
    mismatch = next(
        (n for n in range(2, order + 1) if plus.alpha[n] != minus.alpha[n]), None
    )
    phi = plus.phi if mismatch is None else None
    return CenterReport(mismatch is None, mismatch, phi, order, plus.alpha, minus.alpha)


def involution_defect(phi: Series1) -> Series1:
    """``phi(phi(x)) - x``."""
    if phi.order < 1 or phi[0] != 0 or phi[1] != -1:
        raise ValueError("expected phi(0) = 0 and phi'(0) = -1")
    return compose1(phi, phi) - Series1.identity(phi.order)
