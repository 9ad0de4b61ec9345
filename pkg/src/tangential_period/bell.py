"""Partial and ordinary Bell polynomials by their defining sums.

Both functions accept any entries supporting ``+``, ``*``, ``**`` and
multiplication by an ``int`` -- Fractions, :class:`~.series.Series1`,
sympy expressions.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence


@lru_cache(maxsize=None)
def bell_tuples(p: int, q: int) -> tuple[tuple[int, ...], ...]:
    """All ``(b_1, ..., b_{p-q+1})`` with ``sum j*b_j = p`` and ``sum b_j = q``."""
    width = p - q + 1
    out = []

    def walk(j, weight, count, tail):
        # j runs from width down to 1; tail holds b_{j+1..width}
        if j == 0:
            if weight == 0 and count == 0:
                out.append(tuple(reversed(tail)))
            return
        for b in range(min(count, weight // j), -1, -1):
            walk(j - 1, weight - j * b, count - b, tail + [b])

    walk(width, p, q, [])
    return tuple(sorted(out))


def _check(p: int, q: int, xs: Sequence) -> None:
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if q > p:
        raise ValueError(f"q={q} exceeds p={p}")
    if len(xs) != p - q + 1:
        raise ValueError(f"expected {p - q + 1} arguments, got {len(xs)}")


def _evaluate(p: int, q: int, xs: Sequence, coefficient):
    powers: dict[tuple[int, int], object] = {}

    def power(j, b):
        key = (j, b)
        if key not in powers:
            powers[key] = xs[j] if b == 1 else power(j, b - 1) * xs[j]
        return powers[key]

    total = None
    for bs in bell_tuples(p, q):
        term = None
        for j, b in enumerate(bs):
            if b:
                f = power(j, b)
                term = f if term is None else term * f
        term = coefficient(bs) * term
        total = term if total is None else total + term
    return total


def partial_bell(p: int, q: int, xs: Sequence):
    """``B_{p,q}(x_1, ..., x_{p-q+1})``.

    >>> from fractions import Fraction
    >>> partial_bell(3, 2, [Fraction(2), Fraction(5)])
    Fraction(30, 1)
    """
    _check(p, q, xs)

    def coefficient(bs):
        den = 1
        for j, b in enumerate(bs, start=1):
            den *= math.factorial(b) * math.factorial(j) ** b
        return math.factorial(p) // den

    return _evaluate(p, q, xs, coefficient)


def ordinary_bell(p: int, q: int, xs: Sequence):
    """``hat B_{p,q}(x_1, ..., x_{p-q+1})``, the coefficient of ``z^p`` in
    ``(x_1 z + x_2 z^2 + ...)^q``."""
    _check(p, q, xs)

    def coefficient(bs):
        den = 1
        for b in bs:
            den *= math.factorial(b)
        return math.factorial(q) // den

    return _evaluate(p, q, xs, coefficient)
