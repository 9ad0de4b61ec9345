"""Exact truncated power series.

Three kinds of series are provided, all with :class:`fractions.Fraction`
coefficients:

* :class:`Series1` -- univariate series in ``x``;
* :class:`Series2` -- bivariate series in ``(x, y)`` truncated by total degree;
* :class:`MixedSeries` -- series in ``x`` whose coefficients are polynomials
  in an auxiliary variable ``t``.

Every series carries an ``order``: the largest power of ``x`` (total degree
for :class:`Series2`) through which its coefficients are exact.  An order of
``-1`` means nothing is known.  Products use the valuation-aware rule: if
``a`` is exact through ``A`` with valuation ``va`` and ``b`` through ``B``
with valuation ``vb``, then ``a*b`` is exact through ``min(A + vb, B + va)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class TruncationError(ValueError):
    """Raised when a coefficient beyond the trustworthy order is requested."""


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def _fmt_coeff(c: Fraction) -> str:
    return str(c)


# ---------------------------------------------------------------------------
# univariate


class Series1:
    """Truncated series ``c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        coeffs = tuple(_frac(c) for c in coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < -1:
            order = -1
        if len(coeffs) != order + 1:
            raise ValueError(
                f"expected {order + 1} coefficients for order {order}, got {len(coeffs)}"
            )
        self.coeffs = coeffs
        self.order = order

    # construction -------------------------------------------------------

    @classmethod
    def polynomial(cls, coeffs: Sequence[Scalar], order: int) -> "Series1":
        """An exact polynomial viewed as a series truncated at ``order``."""
        if order < -1:
            order = -1
        coeffs = [_frac(c) for c in coeffs][: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(coeffs, order)

    @classmethod
    def zero(cls, order: int) -> "Series1":
        return cls([Fraction(0)] * (max(order, -1) + 1), order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "Series1":
        return cls.polynomial([value], order)

    @classmethod
    def monomial(cls, value: Scalar, power: int, order: int) -> "Series1":
        coeffs = [Fraction(0)] * power + [_frac(value)]
        return cls.polynomial(coeffs, order)

    @classmethod
    def identity(cls, order: int) -> "Series1":
        """The series ``x``."""
        return cls.monomial(1, 1, order)

    # inspection ---------------------------------------------------------

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            return Fraction(0)
        if i > self.order:
            raise TruncationError(f"coefficient x^{i} is beyond order {self.order}")
        return self.coeffs[i]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, or ``order + 1``."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order + 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "Series1":
        if order > self.order:
            raise TruncationError(f"cannot raise order {self.order} to {order}")
        order = max(order, -1)
        return Series1(self.coeffs[: order + 1], order)

    def __eq__(self, other) -> bool:
        if isinstance(other, Series1):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(_fmt_coeff(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{_fmt_coeff(c)}*{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"Series1({body} + O(x^{self.order + 1}))"

    def __call__(self, x: float) -> float:
        """Evaluate the truncated polynomial at a float."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    # ring operations ----------------------------------------------------

    def __neg__(self) -> "Series1":
        return Series1([-c for c in self.coeffs], self.order)

    def __add__(self, other) -> "Series1":
        if _is_scalar(other):
            if self.order < 0:
                return self
            coeffs = list(self.coeffs)
            coeffs[0] += other
            return Series1(coeffs, self.order)
        if not isinstance(other, Series1):
            return NotImplemented
        order = min(self.order, other.order)
        return Series1(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Series1":
        if _is_scalar(other) or isinstance(other, Series1):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "Series1":
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return Series1([c * other for c in self.coeffs], self.order)
        if not isinstance(other, Series1):
            return NotImplemented
        va, vb = self.valuation(), other.valuation()
        order = min(self.order + vb, other.order + va)
        out = [Fraction(0)] * (order + 1)
        a, b = self.coeffs, other.coeffs
        for i in range(va, min(self.order, order - vb) + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(vb, min(other.order, order - i) + 1):
                if b[j]:
                    out[i + j] += ai * b[j]
        return Series1(out, order)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self * other
        return NotImplemented

    def __truediv__(self, other) -> "Series1":
        if _is_scalar(other):
            return self * (Fraction(1) / _frac(other))
        if isinstance(other, Series1):
            return self * other.reciprocal()
        return NotImplemented

    def __pow__(self, n: int) -> "Series1":
        if n < 0:
            return self.reciprocal() ** (-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        if result is None:
            return Series1.constant(1, self.order)
        return result

    def reciprocal(self) -> "Series1":
        if self.order < 0 or self.coeffs[0] == 0:
            raise ZeroDivisionError("not invertible at origin")
        a = self.coeffs
        inv0 = 1 / a[0]
        b = [inv0]
        for m in range(1, self.order + 1):
            s = sum((a[i] * b[m - i] for i in range(1, m + 1) if a[i]), Fraction(0))
            b.append(-inv0 * s)
        return Series1(b, self.order)

    # calculus and shifts --------------------------------------------------

    def derivative(self, times: int = 1) -> "Series1":
        s = self
        for _ in range(times):
            order = max(s.order - 1, -1)
            s = Series1([i * s.coeffs[i] for i in range(1, order + 2)], order)
        return s

    def shift(self, power: int) -> "Series1":
        """Multiply by the exact monomial ``x^power``."""
        if power < 0:
            raise ValueError("use divide_by_x for negative shifts")
        return Series1([Fraction(0)] * power + list(self.coeffs), self.order + power)

    def divide_by_x(self, power: int) -> "Series1":
        """Exact division by ``x^power``; the low coefficients must vanish."""
        for i in range(min(power, self.order + 1)):
            if self.coeffs[i]:
                raise ArithmeticError(f"series is not divisible by x^{power}")
        order = max(self.order - power, -1)
        return Series1(self.coeffs[power: power + order + 1], order)

    def compose(self, inner: "Series1") -> "Series1":
        return compose1(self, inner)


def compose1(outer: Series1, inner: Series1) -> Series1:
    """``outer(inner(x))`` for an ``inner`` series with zero constant term."""
    if inner.order >= 0 and inner.coeffs[0] != 0:
        raise ValueError("inner series must have zero constant term")
    # Terms of outer beyond its order contribute O(x^((A+1)*v)).
    order = (outer.order + 1) * inner.valuation() - 1
    head = [outer.coeffs[0]] if outer.order >= 0 else []
    result = Series1.polynomial(head, order)
    power = None
    for i in range(1, outer.order + 1):
        power = inner if power is None else power * inner
        if outer.coeffs[i]:
            result = result + power * outer.coeffs[i]
    return result


# ---------------------------------------------------------------------------
# bivariate


class Series2:
    """Bivariate series in ``(x, y)`` truncated at total degree ``order``.

    Only nonzero coefficients are stored; looking up a monomial above the
    order raises :class:`TruncationError`.
    """

    __slots__ = ("terms", "order")

    def __init__(self, terms: Mapping[tuple[int, int], Scalar], order: int):
        if order < -1:
            order = -1
        clean = {}
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            c = _frac(c)
            if i + j > order:
                if c:
                    raise ValueError(
                        f"monomial x^{i} y^{j} exceeds truncation order {order}"
                    )
                continue
            if c:
                clean[(i, j)] = c
        self.terms = clean
        self.order = order

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "Series2":
        return cls({(0, 0): value} if order >= 0 else {}, order)

    @classmethod
    def from_x_series(cls, s: Series1) -> "Series2":
        """Embed a series in ``x`` as a bivariate series."""
        return cls({(i, 0): c for i, c in enumerate(s.coeffs) if c}, s.order)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if i < 0 or j < 0:
            return Fraction(0)
        if i + j > self.order:
            raise TruncationError(
                f"coefficient x^{i} y^{j} is beyond order {self.order}"
            )
        return self.terms.get((i, j), Fraction(0))

    def valuation(self) -> int:
        if not self.terms:
            return self.order + 1
        return min(i + j for i, j in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Series2):
            return self.order == other.order and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((frozenset(self.terms.items()), self.order))

    def __repr__(self) -> str:
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0])):
            mono = "*".join(
                m for m in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if m
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        body = " + ".join(parts) if parts else "0"
        return f"Series2({body} + O({self.order + 1}))"

    def truncate(self, order: int) -> "Series2":
        if order > self.order:
            raise TruncationError(f"cannot raise order {self.order} to {order}")
        return Series2({m: c for m, c in self.terms.items() if sum(m) <= order}, order)

    def __neg__(self) -> "Series2":
        return Series2({m: -c for m, c in self.terms.items()}, self.order)

    def __add__(self, other) -> "Series2":
        if _is_scalar(other):
            other = Series2.constant(other, self.order)
        if not isinstance(other, Series2):
            return NotImplemented
        order = min(self.order, other.order)
        out = {m: c for m, c in self.terms.items() if sum(m) <= order}
        for m, c in other.terms.items():
            if sum(m) <= order:
                out[m] = out.get(m, Fraction(0)) + c
        return Series2(out, order)

    __radd__ = __add__

    def __sub__(self, other) -> "Series2":
        return self + (-other)

    def __rsub__(self, other) -> "Series2":
        return (-self) + other

    def __mul__(self, other) -> "Series2":
        if _is_scalar(other):
            return Series2({m: c * other for m, c in self.terms.items()}, self.order)
        if not isinstance(other, Series2):
            return NotImplemented
        va, vb = self.valuation(), other.valuation()
        order = min(self.order + vb, other.order + va)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            d1 = i1 + j1
            for (i2, j2), c2 in other.terms.items():
                if d1 + i2 + j2 <= order:
                    key = (i1 + i2, j1 + j2)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Series2(out, order)

    def __rmul__(self, other) -> "Series2":
        if _is_scalar(other):
            return self * other
        return NotImplemented

    def __truediv__(self, other) -> "Series2":
        if _is_scalar(other):
            return self * (Fraction(1) / _frac(other))
        if isinstance(other, Series2):
            return self * other.reciprocal()
        return NotImplemented

    def __pow__(self, n: int) -> "Series2":
        if n < 0:
            return self.reciprocal() ** (-n)
        result = Series2.constant(1, self.order)
        for _ in range(n):
            result = result * self
        return result

    def reciprocal(self) -> "Series2":
        a00 = self.terms.get((0, 0), Fraction(0)) if self.order >= 0 else Fraction(0)
        if a00 == 0:
            raise ZeroDivisionError("not invertible at origin")
        inv0 = 1 / a00
        out = {(0, 0): inv0}
        rest = [(m, c) for m, c in self.terms.items() if m != (0, 0)]
        for d in range(1, self.order + 1):
            for i in range(d, -1, -1):
                j = d - i
                s = Fraction(0)
                for (p, q), c in rest:
                    if p <= i and q <= j:
                        b = out.get((i - p, j - q))
                        if b:
                            s += c * b
                if s:
                    out[(i, j)] = -inv0 * s
        return Series2(out, self.order)

    # restrictions and derivatives ----------------------------------------

    def restrict_y0(self) -> Series1:
        """The series ``x -> F(x, 0)``."""
        coeffs = [self.terms.get((i, 0), Fraction(0)) for i in range(self.order + 1)]
        return Series1(coeffs, self.order)

    def divide_by_y(self) -> "Series2":
        """Exact division by ``y``; all pure-``x`` coefficients must vanish."""
        for (i, j), c in self.terms.items():
            if j == 0 and c:
                raise ArithmeticError("series is not divisible by y")
        return Series2({(i, j - 1): c for (i, j), c in self.terms.items()}, self.order - 1)

    def partial(self, px: int, py: int) -> "Series2":
        """``d^(px+py) F / dx^px dy^py``."""
        out = {}
        for (i, j), c in self.terms.items():
            if i >= px and j >= py:
                out[(i - px, j - py)] = (
                    c * math.perm(i, px) * math.perm(j, py)
                )
        return Series2(out, self.order - px - py)

    def partial_at_y0(self, px: int, py: int) -> Series1:
        """``x -> d^(px+py) F / dx^px dy^py (x, 0)`` as a series in ``x``."""
        order = max(self.order - px - py, -1)
        coeffs = []
        for m in range(order + 1):
            c = self.terms.get((m + px, py), Fraction(0))
            coeffs.append(c * math.perm(m + px, px) * math.factorial(py) if c else Fraction(0))
        return Series1(coeffs, order)

    def float_coefficients(self):
        """Dense float array ``c[i, j]`` for ``numpy.polynomial.polynomial.polyval2d``."""
        import numpy as np

        n = max(self.order, 0) + 1
        arr = np.zeros((n, n))
        for (i, j), c in self.terms.items():
            arr[i, j] = float(c)
        return arr


# ---------------------------------------------------------------------------
# x-series with polynomial-in-t coefficients


def _padd(p: tuple, q: tuple) -> tuple:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _ptrim(out)


def _pmul(p: tuple, q: tuple) -> tuple:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return _ptrim(out)


def _pscale(p: tuple, c: Fraction) -> tuple:
    if not c:
        return ()
    return tuple(a * c for a in p)


def _ptrim(p) -> tuple:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


class MixedSeries:
    """Series in ``x`` whose coefficients are polynomials in ``t``.

    ``coeffs[m]`` is a tuple ``(p_0, p_1, ...)`` standing for the polynomial
    ``p_0 + p_1 t + ...`` multiplying ``x^m``.  ``t_bound`` caps the degree in
    ``t`` of every coefficient; ``None`` means unbounded.
    """

    __slots__ = ("coeffs", "order", "t_bound")

    def __init__(self, coeffs: Iterable[Iterable[Scalar]], order: int | None = None,
                 t_bound: int | None = None):
        coeffs = tuple(_ptrim(_frac(c) for c in p) for p in coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < -1:
            order = -1
        if len(coeffs) != order + 1:
            raise ValueError(
                f"expected {order + 1} coefficients for order {order}, got {len(coeffs)}"
            )
        if t_bound is not None:
            for m, p in enumerate(coeffs):
                if len(p) - 1 > t_bound:
                    raise TruncationError(
                        f"t-degree {len(p) - 1} of x^{m} coefficient exceeds bound {t_bound}"
                    )
        self.coeffs = coeffs
        self.order = order
        self.t_bound = t_bound

    @classmethod
    def from_series1(cls, s: Series1, t_power: int = 0,
                     t_bound: int | None = None) -> "MixedSeries":
        """The series ``s(x) * t^t_power``."""
        pad = (Fraction(0),) * t_power
        return cls([pad + (c,) if c else () for c in s.coeffs], s.order, t_bound)

    @classmethod
    def zero(cls, order: int, t_bound: int | None = None) -> "MixedSeries":
        return cls([()] * (max(order, -1) + 1), order, t_bound)

    def __getitem__(self, m: int) -> tuple:
        if m < 0:
            return ()
        if m > self.order:
            raise TruncationError(f"coefficient x^{m} is beyond order {self.order}")
        return self.coeffs[m]

    def valuation(self) -> int:
        for m, p in enumerate(self.coeffs):
            if p:
                return m
        return self.order + 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def t_degree(self) -> int:
        return max((len(p) - 1 for p in self.coeffs), default=-1)

    def truncate(self, order: int) -> "MixedSeries":
        if order > self.order:
            raise TruncationError(f"cannot raise order {self.order} to {order}")
        order = max(order, -1)
        return MixedSeries(self.coeffs[: order + 1], order, self.t_bound)

    def __eq__(self, other) -> bool:
        if isinstance(other, MixedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        parts = []
        for m, p in enumerate(self.coeffs):
            if p:
                poly = " + ".join(f"{c}*t^{d}" for d, c in enumerate(p) if c)
                parts.append(f"({poly})*x^{m}")
        body = " + ".join(parts) if parts else "0"
        return f"MixedSeries({body} + O(x^{self.order + 1}))"

    def _bound_with(self, other) -> int | None:
        bounds = [b for b in (self.t_bound, getattr(other, "t_bound", None)) if b is not None]
        return min(bounds) if bounds else None

    @staticmethod
    def _promote(other, t_bound=None):
        if isinstance(other, MixedSeries):
            return other
        if isinstance(other, Series1):
            return MixedSeries.from_series1(other, t_bound=t_bound)
        return None

    def __neg__(self) -> "MixedSeries":
        return MixedSeries([_pscale(p, Fraction(-1)) for p in self.coeffs],
                           self.order, self.t_bound)

    def __add__(self, other) -> "MixedSeries":
        if _is_scalar(other):
            if self.order < 0:
                return self
            coeffs = list(self.coeffs)
            coeffs[0] = _padd(coeffs[0], (_frac(other),))
            return MixedSeries(coeffs, self.order, self.t_bound)
        other = self._promote(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        coeffs = [_padd(self.coeffs[m], other.coeffs[m]) for m in range(order + 1)]
        return MixedSeries(coeffs, order, self._bound_with(other))

    __radd__ = __add__

    def __sub__(self, other) -> "MixedSeries":
        return self + (-other)

    def __rsub__(self, other) -> "MixedSeries":
        return (-self) + other

    def __mul__(self, other) -> "MixedSeries":
        if _is_scalar(other):
            c = _frac(other)
            return MixedSeries([_pscale(p, c) for p in self.coeffs], self.order, self.t_bound)
        other = self._promote(other)
        if other is None:
            return NotImplemented
        va, vb = self.valuation(), other.valuation()
        order = min(self.order + vb, other.order + va)
        out = [()] * (order + 1)
        for i in range(va, min(self.order, order - vb) + 1):
            p = self.coeffs[i]
            if not p:
                continue
            for j in range(vb, min(other.order, order - i) + 1):
                q = other.coeffs[j]
                if q:
                    out[i + j] = _padd(out[i + j], _pmul(p, q))
        return MixedSeries(out, order, self._bound_with(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MixedSeries":
        if n < 0:
            return self.reciprocal() ** (-n)
        result = MixedSeries.from_series1(Series1.constant(1, self.order), t_bound=self.t_bound)
        for _ in range(n):
            result = result * self
        return result

    def reciprocal(self) -> "MixedSeries":
        if self.order < 0 or not self.coeffs[0]:
            raise ZeroDivisionError("not invertible at origin")
        head = self.coeffs[0]
        if len(head) != 1:
            raise ZeroDivisionError("constant x-coefficient depends on t; not invertible")
        inv0 = 1 / head[0]
        b = [(inv0,)]
        for m in range(1, self.order + 1):
            acc = ()
            for i in range(1, m + 1):
                if self.coeffs[i] and b[m - i]:
                    acc = _padd(acc, _pmul(self.coeffs[i], b[m - i]))
            b.append(_pscale(acc, -inv0))
        return MixedSeries(b, self.order, self.t_bound)


def t_integrate_01(m: MixedSeries) -> Series1:
    """Replace every coefficient polynomial ``p(t)`` by ``int_0^1 p(t) dt``."""
    coeffs = [
        sum((c / (d + 1) for d, c in enumerate(p)), Fraction(0)) for p in m.coeffs
    ]
    return Series1(coeffs, m.order)


def _leading_zero(s) -> bool:
    if s.order < 0:
        return True
    head = s.coeffs[0]
    return not head


def eval2_at_series(F: Series2, u, v):
    """Substitute ``x -> u``, ``y -> v`` into ``F``.

    ``u`` and ``v`` are :class:`Series1` or :class:`MixedSeries` with zero
    constant term.  The result is a :class:`MixedSeries` if either argument
    is one, otherwise a :class:`Series1`.
    """
    if not (_leading_zero(u) and _leading_zero(v)):
        raise ValueError("substituted series must have zero constant term")
    mixed = isinstance(u, MixedSeries) or isinstance(v, MixedSeries)
    if mixed:
        bound = None
        for s in (u, v):
            if isinstance(s, MixedSeries) and s.t_bound is not None:
                bound = s.t_bound if bound is None else min(bound, s.t_bound)
        u = MixedSeries._promote(u, bound)
        v = MixedSeries._promote(v, bound)
    vmin = min(u.valuation(), v.valuation())
    # Monomials above F's order are O(x^((N+1)*vmin)).
    order = (F.order + 1) * vmin - 1

    # Nothing beyond the inputs' orders is needed; capping keeps powers small.
    cap = min(order, max(u.order, v.order))

    def powers(base, count):
        out = [None]
        for _ in range(count):
            nxt = base if out[-1] is None else out[-1] * base
            out.append(nxt.truncate(cap) if nxt.order > cap else nxt)
        return out

    upow = powers(u, max((i for i, _ in F.terms), default=0))
    vpow = powers(v, max((j for _, j in F.terms), default=0))

    acc = None
    const = Fraction(0)
    for (i, j), c in sorted(F.terms.items()):
        if i == 0 and j == 0:
            const = c
            continue
        if i and j:
            term = upow[i] * vpow[j]
        else:
            term = upow[i] if i else vpow[j]
        term = term * c
        if term.order > cap:
            term = term.truncate(cap)
        acc = term if acc is None else acc + term
    if acc is not None:
        order = min(order, acc.order)
        acc = acc.truncate(order)
    elif mixed:
        acc = MixedSeries.zero(order, bound)
    else:
        acc = Series1.zero(order)
    return acc + const if const else acc
