"""Named fields and generators of tangential centers.

``python -m tangential_period.fixtures DIR`` writes the named fields as
JSON documents into ``DIR``.
"""

from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path

from .field import PiecewiseField, dump_field, polynomial_field
from .series import Series2


def e1(order: int = 8) -> PiecewiseField:
    """Fold-fold: ``(1, -x | -1, -x)``."""
    return polynomial_field(({(0, 0): 1}, {(1, 0): -1}), ({(0, 0): -1}, {(1, 0): -1}), order)


def e2(order: int = 8) -> PiecewiseField:
    """Asymmetric speeds: ``(2, -x | -1, -x)``."""
    return polynomial_field(({(0, 0): 2}, {(1, 0): -1}), ({(0, 0): -1}, {(1, 0): -1}), order)


def e3(order: int = 8) -> PiecewiseField:
    """Cusp-fold: ``(1, -x^3 | -1, -x)``."""
    return polynomial_field(({(0, 0): 1}, {(3, 0): -1}), ({(0, 0): -1}, {(1, 0): -1}), order)


def e5(order: int = 8) -> PiecewiseField:
    """Focus: ``(1, -x + x^2 | -1, -x)``."""
    return polynomial_field(
        ({(0, 0): 1}, {(1, 0): -1, (2, 0): 1}), ({(0, 0): -1}, {(1, 0): -1}), order
    )


def visible(order: int = 8) -> PiecewiseField:
    """Visible fold above: ``(1, x | -1, -x)``."""
    return polynomial_field(({(0, 0): 1}, {(1, 0): 1}), ({(0, 0): -1}, {(1, 0): -1}), order)


def e2_quartic(c=100, order: int = 8) -> PiecewiseField:
    """E2 with ``X+ = 2 + c x^4``; still reversible under ``x -> -x``, so a center."""
    return polynomial_field(
        ({(0, 0): 2, (4, 0): c}, {(1, 0): -1}), ({(0, 0): -1}, {(1, 0): -1}), order
    )


NAMED = {"e1": e1, "e2": e2, "e3": e3, "e5": e5, "visible": visible, "e2_quartic": e2_quartic}


def mirrored_center(X: Series2, Y: Series2, speed: Series2) -> PiecewiseField:
    """Center whose lower field is ``-speed * (X, -Y)`` reflected through ``y = 0``.

    The lower orbits are mirror images of the upper ones, so both half-return
    maps coincide; ``speed`` (positive at the origin) only changes timing.
    The lower products are truncated at the common order, so unless ``speed``
    is constant the polynomial field is a center only through that order.
    """
    if speed[0, 0] <= 0:
        raise ValueError("speed must be positive at the origin")
    order = X.order

    def reflect(s: Series2) -> Series2:
        return Series2({(i, j): c * (-1) ** j for (i, j), c in s.terms.items()}, s.order)

    Xm = -(speed * reflect(X))
    Ym = speed * reflect(Y)
    return PiecewiseField(X, Y, Xm.truncate(order), Ym.truncate(order), order)


def _small(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.choice((1, 2, 3)))


def random_center(rng: random.Random, order: int = 5, k: int = 1,
                  density: float = 0.5, speed_degree: int | None = None) -> PiecewiseField:
    """A random mirrored center with a ``2k``-contact above.

    ``speed_degree = 0`` keeps the speed constant, which makes the polynomial
    field an exact center (useful for numeric comparisons).
    """
    speed_degree = order if speed_degree is None else speed_degree
    x0 = rng.choice((1, 2, 3, Fraction(1, 2))) * rng.choice((1, -1))
    lead = Fraction(rng.randint(1, 3), rng.choice((1, 2))) * (-1 if x0 > 0 else 1)
    X = {(0, 0): Fraction(x0)}
    Y = {(2 * k - 1, 0): lead}
    speed = {(0, 0): Fraction(rng.randint(1, 3), rng.choice((1, 2)))}
    for d in range(1, order + 1):
        for i in range(d + 1):
            j = d - i
            if rng.random() < density:
                X[(i, j)] = _small(rng)
            if (j > 0 or i >= 2 * k) and rng.random() < density:
                Y[(i, j)] = _small(rng)
            if d <= speed_degree and rng.random() < density / 2:
                speed[(i, j)] = _small(rng)
    return mirrored_center(Series2(X, order), Series2(Y, order), Series2(speed, order))


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    out = Path(argv[0] if argv else ".")
    out.mkdir(parents=True, exist_ok=True)
    for name, make in NAMED.items():
        (out / f"{name}.json").write_text(dump_field(make()))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
