"""Cycle index series in the power-sum basis.

Series are sparse maps from :class:`PMonomial` to exact rationals, truncated
independently in the x-sort (sort 0) and the y-sort (sort 1).  A one-sort
series simply never mentions sort 1.  A bound of ``None`` means the series is
known exactly in that sort (a polynomial, or a sort that never occurs).
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .partitions import EMPTY, Partition, partitions_of, z_weight
from .powerseries import PowerSeries, _norm

X_SORT = 0
Y_SORT = 1


class PMonomial(tuple):
    """A product p_lambda[x] * p_mu[y], stored as the pair (lambda, mu).

    The empty partition in a sort means that sort does not occur; the constant
    monomial is (EMPTY, EMPTY).
    """

    __slots__ = ()

    def __new__(cls, x: Iterable[int] = (), y: Iterable[int] = ()):
        return tuple.__new__(cls, (Partition(x), Partition(y)))

    @classmethod
    def _trusted(cls, x: Partition, y: Partition) -> "PMonomial":
        return tuple.__new__(cls, (x, y))

    @property
    def x(self) -> Partition:
        return self[0]

    @property
    def y(self) -> Partition:
        return self[1]

    def partition(self, sort: int) -> Partition:
        return self[sort]

    def degree(self, sort: int = X_SORT) -> int:
        return sum(self[sort])

    def sorts(self) -> dict[int, Partition]:
        """Per-sort partitions, omitting sorts that do not occur."""
        return {s: p for s, p in enumerate(self) if p}

    def __mul__(self, other: "PMonomial") -> "PMonomial":
        return _mono_mul(self, other)

    def scaled(self, k: int) -> "PMonomial":
        return _mono_scale(self, k)

    def __repr__(self) -> str:
        return f"PMonomial({format_monomial(self)})"


CONSTANT = PMonomial._trusted(EMPTY, EMPTY)


def as_monomial(key) -> PMonomial:
    """Accept a PMonomial, a one-sort part list, or an (x parts, y parts) pair."""
    if isinstance(key, PMonomial):
        return key
    key = tuple(key)
    if len(key) == 2 and all(isinstance(p, tuple) for p in key):
        return PMonomial(*key)
    return PMonomial(key)


def _merge(a: Partition, b: Partition) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return Partition._trusted(tuple(sorted(a + b, reverse=True)))


def _mono_mul(m1: PMonomial, m2: PMonomial) -> PMonomial:
    return PMonomial._trusted(_merge(m1[0], m2[0]), _merge(m1[1], m2[1]))


def _mono_scale(m: PMonomial, k: int) -> PMonomial:
    if k == 1:
        return m
    return PMonomial._trusted(m[0].scaled(k), m[1].scaled(k))


def _min_bound(*bounds: int | None) -> int | None:
    real = [b for b in bounds if b is not None]
    return min(real) if real else None


def _fits(dx: int, dy: int, bound: int | None, y_bound: int | None) -> bool:
    return (bound is None or dx <= bound) and (y_bound is None or dy <= y_bound)


def format_monomial(m: PMonomial) -> str:
    """Render as e.g. ``p1^2*p2`` (one sort) or ``p1[x]*p1[y]^3`` (two sorts)."""
    if m == CONSTANT:
        return "1"
    two_sort = bool(m[1])
    pieces = []
    for sort, lam in enumerate(m):
        tag = ("[x]" if sort == 0 else "[y]") if two_sort else ""
        for part in sorted(set(lam)):
            e = lam.count(part)
            pieces.append(f"p{part}{tag}" + (f"^{e}" if e > 1 else ""))
    return "*".join(pieces)


def format_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def monomial_sort_key(m: PMonomial):
    return (sum(m[0]), sum(m[1]), tuple(m[0]), tuple(m[1]))


class CycleIndexSeries:
    """Truncated sparse series in the power sums p_i[x], p_i[y]."""

    __slots__ = ("_terms", "bound", "y_bound", "_graded")

    def __init__(
        self,
        terms: Mapping[PMonomial, object] | None = None,
        bound: int | None = None,
        y_bound: int | None = None,
    ):
        clean: dict[PMonomial, object] = {}
        for mono, c in (terms or {}).items():
            mono = as_monomial(mono)
            c = _norm(c)
            if c and _fits(mono.degree(0), mono.degree(1), bound, y_bound):
                clean[mono] = _norm(clean.get(mono, 0) + c)
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self.bound = bound
        self.y_bound = y_bound
        self._graded = None

    @classmethod
    def _raw(cls, terms: dict, bound, y_bound) -> "CycleIndexSeries":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.bound = bound
        obj.y_bound = y_bound
        obj._graded = None
        return obj

    # construction helpers

    @classmethod
    def zero(cls, bound: int | None = None, y_bound: int | None = None) -> "CycleIndexSeries":
        return cls._raw({}, bound, y_bound)

    @classmethod
    def constant(cls, c=1, bound: int | None = None, y_bound: int | None = None) -> "CycleIndexSeries":
        c = _norm(c)
        return cls._raw({CONSTANT: c} if c else {}, bound, y_bound)

    @classmethod
    def p(cls, i: int, sort: int = X_SORT, bound: int | None = None, y_bound: int | None = None):
        """The single power sum p_i of the given sort."""
        part = Partition._trusted((i,))
        mono = PMonomial._trusted(part, EMPTY) if sort == X_SORT else PMonomial._trusted(EMPTY, part)
        return cls({mono: 1}, bound, y_bound)

    # inspection

    @property
    def terms(self) -> dict[PMonomial, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, mono) -> object:
        return self._terms.get(as_monomial(mono), 0)

    def coefficient(self, x: Iterable[int] = (), y: Iterable[int] = ()):
        return self._terms.get(PMonomial(x, y), 0)

    def constant_term(self):
        return self._terms.get(CONSTANT, 0)

    def is_one_sort(self) -> bool:
        return all(not m[1] for m in self._terms)

    def max_degree(self) -> int:
        return max((m.degree(0) for m in self._terms), default=0)

    def degree_slice(self, n: int) -> "CycleIndexSeries":
        """Terms of x-degree exactly ``n`` (an exact polynomial)."""
        return CycleIndexSeries._raw(
            {m: c for m, c in self._terms.items() if m.degree(0) == n}, None, self.y_bound
        )

    def truncate(self, bound: int | None = None, y_bound: int | None = None) -> "CycleIndexSeries":
        bound = _min_bound(bound, self.bound)
        y_bound = _min_bound(y_bound, self.y_bound)
        return CycleIndexSeries._raw(
            {m: c for m, c in self._terms.items() if _fits(m.degree(0), m.degree(1), bound, y_bound)},
            bound,
            y_bound,
        )

    def graded(self) -> dict[tuple[int, int], list[tuple[PMonomial, object]]]:
        if self._graded is None:
            g = defaultdict(list)
            for m, c in self._terms.items():
                g[(sum(m[0]), sum(m[1]))].append((m, c))
            self._graded = dict(g)
        return self._graded

    def __eq__(self, other) -> bool:
        if isinstance(other, CycleIndexSeries):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            body = "0"
        else:
            body = " + ".join(
                f"{format_rational(c)}*{format_monomial(m)}"
                for m, c in sorted(self._terms.items(), key=lambda t: monomial_sort_key(t[0]))
            )
        return f"CycleIndexSeries({body}; bound={self.bound}, y_bound={self.y_bound})"

    def sorted_records(self) -> list[tuple[str, str]]:
        """(monomial, coefficient) strings in a fixed monomial order."""
        return [
            (format_monomial(m), format_rational(c))
            for m, c in sorted(self._terms.items(), key=lambda t: monomial_sort_key(t[0]))
        ]

    # arithmetic

    def _coerce(self, other) -> "CycleIndexSeries":
        if isinstance(other, CycleIndexSeries):
            return other
        return CycleIndexSeries.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        bound = _min_bound(self.bound, other.bound)
        y_bound = _min_bound(self.y_bound, other.y_bound)
        out = {m: c for m, c in self._terms.items() if _fits(sum(m[0]), sum(m[1]), bound, y_bound)}
        for m, c in other._terms.items():
            if not _fits(sum(m[0]), sum(m[1]), bound, y_bound):
                continue
            s = _norm(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return CycleIndexSeries._raw(out, bound, y_bound)

    __radd__ = __add__

    def __neg__(self):
        return CycleIndexSeries._raw({m: -c for m, c in self._terms.items()}, self.bound, self.y_bound)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "CycleIndexSeries":
        c = _norm(c)
        if not c:
            return CycleIndexSeries.zero(self.bound, self.y_bound)
        return CycleIndexSeries._raw(
            {m: _norm(c * v) for m, v in self._terms.items()}, self.bound, self.y_bound
        )

    def __mul__(self, other):
        if not isinstance(other, CycleIndexSeries):
            return self.scale(other)
        bound = _min_bound(self.bound, other.bound)
        y_bound = _min_bound(self.y_bound, other.y_bound)
        out: dict[PMonomial, object] = {}
        get = out.get
        ga, gb = self.graded(), other.graded()
        for (ax, ay), la in ga.items():
            for (bx, by), lb in gb.items():
                if not _fits(ax + bx, ay + by, bound, y_bound):
                    continue
                for ma, ca in la:
                    max_, may = ma
                    for mb, cb in lb:
                        key = PMonomial._trusted(_merge(max_, mb[0]), _merge(may, mb[1]))
                        out[key] = get(key, 0) + ca * cb
        out = {m: c for m, c in ((m, _norm(c)) for m, c in out.items()) if c}
        return CycleIndexSeries._raw(out, bound, y_bound)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "CycleIndexSeries":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = CycleIndexSeries.constant(1, self.bound, self.y_bound)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scaled_indices(self, k: int) -> "CycleIndexSeries":
        """Substitute p_i -> p_{k i} in every sort (the k-th plethystic slot)."""
        if k == 1:
            return self
        scale = lambda b: None if b is None else b * k
        return CycleIndexSeries._raw(
            {_mono_scale(m, k): c for m, c in self._terms.items()}, scale(self.bound), scale(self.y_bound)
        )

    def derivative(self, sort: int = X_SORT) -> "CycleIndexSeries":
        """Partial derivative with respect to p_1 of the given sort."""
        out = {}
        for m, c in self._terms.items():
            lam = m[sort]
            e = lam.count(1)
            if not e:
                continue
            parts = list(lam)
            parts.remove(1)
            reduced = Partition._trusted(parts)
            key = PMonomial._trusted(reduced, m[1]) if sort == X_SORT else PMonomial._trusted(m[0], reduced)
            out[key] = _norm(out.get(key, 0) + e * c)
        bound, y_bound = self.bound, self.y_bound
        if sort == X_SORT and bound is not None:
            bound -= 1
        if sort == Y_SORT and y_bound is not None:
            y_bound -= 1
        return CycleIndexSeries._raw({m: c for m, c in out.items() if c}, bound, y_bound)

    def point(self, sort: int = X_SORT) -> "CycleIndexSeries":
        return self.derivative(sort).times_p1(sort)

    def times_p1(self, sort: int = X_SORT) -> "CycleIndexSeries":
        """p_1 * f, which is known one degree further than f in that sort."""
        one = Partition._trusted((1,))
        out = {}
        for m, c in self._terms.items():
            if sort == X_SORT:
                out[PMonomial._trusted(_merge(m[0], one), m[1])] = c
            else:
                out[PMonomial._trusted(m[0], _merge(m[1], one))] = c
        bump = lambda b: None if b is None else b + 1
        if sort == X_SORT:
            return CycleIndexSeries._raw(out, bump(self.bound), self.y_bound)
        return CycleIndexSeries._raw(out, self.bound, bump(self.y_bound))

    def collapse_y(self) -> "CycleIndexSeries":
        """Set every p_i[y] to 1."""
        out: dict[PMonomial, object] = {}
        for m, c in self._terms.items():
            key = PMonomial._trusted(m[0], EMPTY)
            out[key] = out.get(key, 0) + c
        out = {m: _norm(c) for m, c in out.items() if c}
        return CycleIndexSeries._raw(out, self.bound, None)

    def ogf(self, order: int | None = None) -> PowerSeries:
        """Unlabeled generating function: p_i[x] -> x^i, p_i[y] -> 1."""
        order = self._ogf_order(order)
        coeffs = [0] * (order + 1)
        for m, c in self._terms.items():
            d = sum(m[0])
            if d <= order:
                coeffs[d] += c
        return PowerSeries(coeffs, order)

    def egf(self, order: int | None = None) -> PowerSeries:
        """Labeled generating function: p_1[x] -> x, p_i[x] -> 0 for i > 1, p_i[y] -> 1."""
        order = self._ogf_order(order)
        coeffs = [0] * (order + 1)
        for m, c in self._terms.items():
            lam = m[0]
            if all(p == 1 for p in lam) and len(lam) <= order:
                coeffs[len(lam)] += c
        return PowerSeries(coeffs, order)

    def _ogf_order(self, order: int | None) -> int:
        if order is None:
            order = self.bound if self.bound is not None else self.max_degree()
        elif self.bound is not None and order > self.bound:
            raise ValueError(f"requested order {order} exceeds truncation bound {self.bound}")
        return order


# ---------------------------------------------------------------------------
# plethysm


def _has_positive_x_valuation(g: CycleIndexSeries) -> bool:
    return all(m[0] for m in g._terms)


def substitute(
    f: CycleIndexSeries,
    slot: Callable[[int], CycleIndexSeries],
) -> CycleIndexSeries:
    """Replace each p_k[x] of the one-sort series ``f`` by ``slot(k)`` with indices scaled by k.

    Ordinary plethysm uses the same series in every slot; the Gamma-species
    version feeds the component at gamma**k into slot k.
    """
    if not f.is_one_sort():
        raise ValueError("the outer series of a plethysm must be one-sort")
    needed = sorted({p for m in f._terms for p in m[0]})
    inner = {k: slot(k) for k in needed}
    truncated_outer = f.bound is not None
    for g in inner.values():
        if truncated_outer and not _has_positive_x_valuation(g):
            raise ValueError("ill-defined plethysm: inner series has a constant term "
                             "(or a term free of the x-sort) and the outer series is infinite")
    base = {k: g.scaled_indices(k) for k, g in inner.items()}
    bound = _min_bound(f.bound, *(g.bound for g in inner.values()))
    y_bound = _min_bound(*(g.y_bound for g in inner.values()))
    if not inner:
        # f is a constant
        return CycleIndexSeries._raw(
            {CONSTANT: f.constant_term()} if f.constant_term() else {}, bound, y_bound
        )

    base = {k: g.truncate(bound, y_bound) for k, g in base.items()}
    powers: dict[tuple[int, int], CycleIndexSeries] = {}
    # every slot k contributes x-degree >= k, so high-degree outer terms vanish
    skip_high = bound is not None and all(_has_positive_x_valuation(g) for g in inner.values())

    def power(k: int, e: int) -> CycleIndexSeries:
        key = (k, e)
        if key not in powers:
            powers[key] = base[k] if e == 1 else power(k, e - 1) * base[k]
        return powers[key]

    acc: dict[PMonomial, object] = {}
    for m, c in f._terms.items():
        lam = m[0]
        if skip_high and sum(lam) > bound:
            continue
        term = CycleIndexSeries.constant(c, bound, y_bound)
        for part in sorted(set(lam)):
            term = term * power(part, lam.count(part))
            if not term._terms:
                break
        for mm, cc in term._terms.items():
            acc[mm] = acc.get(mm, 0) + cc
    acc = {mm: _norm(cc) for mm, cc in acc.items() if cc}
    return CycleIndexSeries._raw(acc, bound, y_bound)


def ci_plethysm(f: CycleIndexSeries, g: CycleIndexSeries) -> CycleIndexSeries:
    """f o g = f(g(p_1, p_2, ...), g(p_2, p_4, ...), ...)."""
    return substitute(f, lambda k: g)


def ci_arith(op: str, f: CycleIndexSeries, g) -> CycleIndexSeries:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def ci_derivative(f: CycleIndexSeries, sort: int = X_SORT) -> CycleIndexSeries:
    return f.derivative(sort)


def ci_point(f: CycleIndexSeries, sort: int = X_SORT) -> CycleIndexSeries:
    return f.point(sort)


def ci_to_ogf(f: CycleIndexSeries, order: int | None = None) -> PowerSeries:
    return f.ogf(order)


def ci_to_egf(f: CycleIndexSeries, order: int | None = None) -> PowerSeries:
    return f.egf(order)


# ---------------------------------------------------------------------------
# standard species


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _one_sort(lam: Iterable[int]) -> PMonomial:
    return PMonomial._trusted(Partition(lam), EMPTY)


def sets_slice(n: int) -> CycleIndexSeries:
    """Z_{E_n} = sum over lambda |- n of p_lambda / z_lambda (exact)."""
    return CycleIndexSeries._raw(
        {PMonomial._trusted(lam, EMPTY): Fraction(1, z_weight(lam)) for lam in partitions_of(n)}, None, None
    )


def cyclic_orders(n: int) -> CycleIndexSeries:
    """Z_{C_n} = (1/n) sum_{d | n} phi(d) p_d^{n/d}."""
    return CycleIndexSeries(
        {_one_sort([d] * (n // d)): Fraction(euler_phi(d), n) for d in divisors(n)}
    )


def ci_standard(which: str, bound: int, n: int | None = None) -> CycleIndexSeries:
    """Cycle index of a named species truncated at degree ``bound``.

    ``which`` is one of X, E, E_n, E_plus, C_n, L_n, Omega; the ``_n`` species
    take the extra argument ``n``.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if which == "X":
        return CycleIndexSeries.p(1, bound=bound)
    if which in ("E", "E_plus"):
        terms = {}
        for d in range(0 if which == "E" else 1, bound + 1):
            terms.update(sets_slice(d)._terms)
        return CycleIndexSeries._raw(terms, bound, None)
    if which == "Omega":
        return _omega(bound)
    if n is None:
        raise ValueError(f"{which} requires the size argument n")
    if which == "E_n":
        return sets_slice(n).truncate(bound)
    if which == "C_n":
        return cyclic_orders(n).truncate(bound)
    if which == "L_n":
        return CycleIndexSeries({_one_sort([1] * n): 1}, bound)
    raise ValueError(f"unknown species {which!r}")


def _omega(bound: int) -> CycleIndexSeries:
    # sum_k mu(k)/k * log(1 + p_k), log(1+u) = sum_j (-1)^{j+1} u^j / j
    terms: dict[PMonomial, object] = {}
    for k in range(1, bound + 1):
        mu = mobius(k)
        if not mu:
            continue
        for j in range(1, bound // k + 1):
            mono = _one_sort([k] * j)
            c = Fraction(mu * (-1) ** (j + 1), k * j)
            terms[mono] = terms.get(mono, 0) + c
    return CycleIndexSeries(terms, bound)


def ci_comp_inverse(psi: CycleIndexSeries, bound: int) -> CycleIndexSeries:
    """Plethystic inverse of psi = p_1 + (higher terms), by iterated substitution.

    Phi <- p_1 - sum_{i >= 2} psi_i o Phi, repeated ``bound`` times.
    """
    if not psi.is_one_sort():
        raise ValueError("not invertible under plethysm: series must be one-sort")
    if psi.constant_term() != 0 or psi.coefficient([1]) != 1:
        raise ValueError("not invertible under plethysm: need zero constant term and unit p1 term")
    bound = _min_bound(bound, psi.bound)
    x = CycleIndexSeries.p(1, bound=bound)
    higher = (psi - x).truncate(bound)
    phi = x
    for _ in range(bound):
        phi = x - ci_plethysm(higher, phi)
    return phi
