"""Piecewise fields around a tangential singularity at the origin.

The switching line is ``y = 0``; ``Z+ = (X+, Y+)`` acts on ``y > 0`` and
``Z- = (X-, Y-)`` on ``y < 0``.  Sides are given as ``+1``/``-1`` or the
strings ``"+"``/``"-"``.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .series import Series1, Series2

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class FieldDocumentError(ValueError):
    """The field document is malformed."""


class ClassificationError(ValueError):
    """The origin is not a monodromic tangential singularity.

    ``condition`` names the failed condition ("C1", "C2" or "C3") and
    ``verdicts`` holds the per-condition outcome known so far.
    """

    def __init__(self, message: str, condition: str, verdicts: Mapping[str, bool | None]):
        super().__init__(message)
        self.condition = condition
        self.verdicts = dict(verdicts)


def side_sign(side) -> int:
    if side in (1, "+", "plus"):
        return 1
    if side in (-1, "-", "minus"):
        return -1
    raise ValueError(f"unknown side {side!r}")


def side_name(side) -> str:
    return "plus" if side_sign(side) == 1 else "minus"


@dataclass(frozen=True)
class PiecewiseField:
    Xplus: Series2
    Yplus: Series2
    Xminus: Series2
    Yminus: Series2
    order: int

    def __post_init__(self):
        for name in ("Xplus", "Yplus", "Xminus", "Yminus"):
            if getattr(self, name).order != self.order:
                raise ValueError(f"{name} has order {getattr(self, name).order}, expected {self.order}")

    def components(self, side) -> tuple[Series2, Series2]:
        if side_sign(side) == 1:
            return self.Xplus, self.Yplus
        return self.Xminus, self.Yminus


@dataclass(frozen=True)
class Classification:
    kplus: int
    kminus: int
    delta: int
    aplus: Fraction
    aminus: Fraction
    verdicts: Mapping[str, bool] = dc_field(
        default_factory=lambda: {"C1": True, "C2": True, "C3": True}
    )

    def k(self, side) -> int:
        return self.kplus if side_sign(side) == 1 else self.kminus

    def a(self, side) -> Fraction:
        return self.aplus if side_sign(side) == 1 else self.aminus


# ---------------------------------------------------------------------------
# documents


def _parse_terms(entries, order, where):
    if not isinstance(entries, list):
        raise FieldDocumentError(f"malformed document: {where} must be a list of triples")
    terms: dict[tuple[int, int], Fraction] = {}
    for entry in entries:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise FieldDocumentError(f"malformed document: bad term {entry!r} in {where}")
        i, j, lit = entry
        if not (isinstance(i, int) and isinstance(j, int)) or isinstance(i, bool) or isinstance(j, bool):
            raise FieldDocumentError(f"malformed document: exponents must be integers in {where}")
        if i < 0 or j < 0 or i + j > order:
            raise FieldDocumentError(
                f"malformed document: monomial x^{i} y^{j} outside order {order} in {where}"
            )
        if isinstance(lit, int) and not isinstance(lit, bool):
            value = Fraction(lit)
        elif isinstance(lit, str) and _RATIONAL.match(lit.strip()) and not lit.strip().endswith("/0"):
            value = Fraction(lit.strip())
        else:
            raise FieldDocumentError(f"non-rational coefficient literal {lit!r} in {where}")
        if (i, j) in terms:
            raise FieldDocumentError(f"malformed document: duplicate monomial ({i}, {j}) in {where}")
        terms[(i, j)] = value
    return Series2(terms, order)


def load_field(document) -> PiecewiseField:
    """Build a field from a JSON document (text or already-parsed mapping)."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise FieldDocumentError(f"malformed document: {exc}") from None
    if not isinstance(document, Mapping):
        raise FieldDocumentError("malformed document: top level must be an object")
    order = document.get("order")
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise FieldDocumentError("malformed document: 'order' must be a nonnegative integer")
    parts = {}
    for side in ("plus", "minus"):
        block = document.get(side)
        if block is None:
            raise FieldDocumentError(f"missing component: {side}")
        if not isinstance(block, Mapping):
            raise FieldDocumentError(f"malformed document: '{side}' must be an object")
        for comp in ("X", "Y"):
            if comp not in block:
                raise FieldDocumentError(f"missing component: {side}.{comp}")
            parts[side + comp] = _parse_terms(block[comp], order, f"{side}.{comp}")
    return PiecewiseField(parts["plusX"], parts["plusY"], parts["minusX"], parts["minusY"], order)


def field_document(field: PiecewiseField) -> dict:
    def terms(s: Series2):
        return [[i, j, str(c)] for (i, j), c in sorted(s.terms.items())]

    return {
        "order": field.order,
        "plus": {"X": terms(field.Xplus), "Y": terms(field.Yplus)},
        "minus": {"X": terms(field.Xminus), "Y": terms(field.Yminus)},
    }


def dump_field(field: PiecewiseField) -> str:
    return json.dumps(field_document(field), indent=2) + "\n"


def polynomial_field(plus, minus, order: int) -> PiecewiseField:
    """Field from ``{(i, j): coeff}`` dicts: ``plus = (X, Y)``, ``minus = (X, Y)``."""
    return PiecewiseField(
        Series2(plus[0], order), Series2(plus[1], order),
        Series2(minus[0], order), Series2(minus[1], order), order,
    )


# ---------------------------------------------------------------------------
# classification


def _contact(X: Series2, Y: Series2):
    """Return ``(k, first odd derivative)`` or the name of the failing check."""
    if X[0, 0] == 0 or Y[0, 0] != 0:
        return None
    y0 = Y.restrict_y0()
    for m in range(1, Y.order + 1):
        if y0[m]:
            if m % 2 == 0:
                return None
            return (m + 1) // 2, y0[m] * math.factorial(m)
    return None


def classify(field: PiecewiseField) -> Classification:
    if field.order < 1:
        raise ValueError("field order must be at least 1")
    verdicts: dict[str, bool | None] = {"C1": None, "C2": None, "C3": None}
    plus = _contact(field.Xplus, field.Yplus)
    minus = _contact(field.Xminus, field.Yminus)
    verdicts["C1"] = plus is not None and minus is not None
    if not verdicts["C1"]:
        raise ClassificationError("not a tangential singularity at this order", "C1", verdicts)
    (kp, dyp), (km, dym) = plus, minus
    xp, xm = field.Xplus[0, 0], field.Xminus[0, 0]
    verdicts["C2"] = xp * dyp < 0 and xm * dym > 0
    if not verdicts["C2"]:
        raise ClassificationError("visible contact", "C2", verdicts)
    verdicts["C3"] = xp * xm < 0
    if not verdicts["C3"]:
        raise ClassificationError("no first-return (same crossing direction)", "C3", verdicts)
    delta = 1 if xp > 0 else -1
    aplus = dyp / (math.factorial(2 * kp - 1) * abs(xp))
    aminus = dym / (math.factorial(2 * km - 1) * abs(xm))
    return Classification(kp, km, delta, aplus, aminus, dict(verdicts))


# ---------------------------------------------------------------------------
# derived series


@lru_cache(maxsize=256)
def eta_series(field: PiecewiseField, side) -> Series2:
    """``eta+ = delta Y+/X+`` and ``eta- = -delta Y-/X-``."""
    s = side_sign(side)
    delta = classify(field).delta
    X, Y = field.components(s)
    return Y * X.reciprocal() * (s * delta)


@lru_cache(maxsize=256)
def fg_series(field: PiecewiseField, side) -> tuple[Series1, Series2]:
    """The auxiliary series ``f`` (in ``x``) and ``g`` (in ``x, y``) with
    ``eta(x, y) = a x^(2k-1) + x^(2k) f(x) + y g(x, y)``."""
    s = side_sign(side)
    cls = classify(field)
    delta, k, a = cls.delta, cls.k(s), cls.a(s)
    X, Y = field.components(s)
    X0, Y0 = X.restrict_y0(), Y.restrict_y0()

    num_f = Y0 * (s * delta) - Series1.monomial(a, 2 * k - 1, X0.order + 2 * k - 1) * X0
    try:
        f = num_f.divide_by_x(2 * k) * X0.reciprocal()
    except ArithmeticError:
        raise ArithmeticError("inconsistent field/classification") from None

    X0_2, Y0_2 = Series2.from_x_series(X0), Series2.from_x_series(Y0)
    num_g = (X0_2 * Y - X * Y0_2) * s
    try:
        g = num_g.divide_by_y() * (X * X0_2 * delta).reciprocal()
    except ArithmeticError:
        raise ArithmeticError("inconsistent field/classification") from None
    return f, g


def reparametrized_field(field: PiecewiseField) -> PiecewiseField:
    """The field ``Z/|X|``, i.e. ``(+delta, eta+)`` above and ``(-delta, eta-)`` below."""
    delta = classify(field).delta
    n = field.order
    return PiecewiseField(
        Series2.constant(delta, n), eta_series(field, 1),
        Series2.constant(-delta, n), eta_series(field, -1), n,
    )
