"""Truncated univariate power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

Number = int | Fraction


def _norm(c) -> Number:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class NonIntegralCount(ArithmeticError):
    """A coefficient that should count structures is negative or fractional."""


class PowerSeries:
    """Coefficients of x^0 .. x^order; nothing beyond ``order`` is ever known."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_norm(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([0] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: Sequence[Number]) -> "PowerSeries":
        obj = cls.__new__(cls)
        obj._coeffs = tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls._raw((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls._raw((1,) + (0,) * order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Number, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Number:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} is outside the truncation order {self.order}")
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*x^{i}" for i, c in enumerate(self._coeffs) if c]
        return f"PowerSeries({' + '.join(terms) or '0'}, order={self.order})"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries._raw(self._coeffs[: order + 1])

    # arithmetic; mixed orders truncate to the shorter series

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries._raw((_norm(other),) + (0,) * self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order) + 1
        return PowerSeries._raw(tuple(_norm(a + b) for a, b in zip(self._coeffs[:n], other._coeffs[:n])))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries._raw(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = _norm(other)
            return PowerSeries._raw(tuple(_norm(c * a) for a in self._coeffs))
        order = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = []
        for n in range(order + 1):
            s = 0
            for i in range(n + 1):
                ai = a[i]
                if ai:
                    s += ai * b[n - i]
            out.append(_norm(s))
        return PowerSeries._raw(out)

    __rmul__ = __mul__

    def scale(self, c) -> "PowerSeries":
        return self * _norm(c)

    def exp(self) -> "PowerSeries":
        """exp(f) by the recurrence n g_n = sum_{j=1}^n j f_j g_{n-j}."""
        f = self._coeffs
        if f[0] != 0:
            raise ValueError("exp requires zero constant term")
        g: list[Number] = [1]
        for n in range(1, self.order + 1):
            s = 0
            for j in range(1, n + 1):
                if f[j]:
                    s += j * f[j] * g[n - j]
            g.append(_norm(Fraction(s, n) if isinstance(s, int) else s / n))
        return PowerSeries._raw(g)

    def substitute_power(self, i: int) -> "PowerSeries":
        """f(x^i), truncated at the order of f."""
        if i < 1:
            raise ValueError("substitution power must be a positive integer")
        if i == 1:
            return self
        out = [0] * (self.order + 1)
        for m in range(0, self.order // i + 1):
            out[i * m] = self._coeffs[m]
        return PowerSeries._raw(out)

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            return PowerSeries.zero(0)
        return PowerSeries._raw(tuple(_norm(n * c) for n, c in enumerate(self._coeffs) if n > 0))

    def integer_coeffs(self) -> list[int]:
        """Coefficients as Python ints, insisting they are nonnegative integers."""
        out = []
        for n, c in enumerate(self._coeffs):
            if isinstance(c, Fraction) or c < 0:
                raise NonIntegralCount(f"non-integral count: coefficient of x^{n} is {c}")
            out.append(int(c))
        return out


def ps_arith(op: str, f: PowerSeries, g) -> PowerSeries:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def ps_exp(f: PowerSeries) -> PowerSeries:
    return f.exp()


def ps_substitute_power(f: PowerSeries, i: int) -> PowerSeries:
    return f.substitute_power(i)


def ps_integer_coeffs(f: PowerSeries) -> list[int]:
    return f.integer_coeffs()
