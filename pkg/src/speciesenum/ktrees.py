"""Unlabeled k-trees through coding trees and their symmetric-group actions.

Two routes are provided.  The production route solves the one-variable
generating-function recursion, keyed by cycle type, degree by degree.  The
cross-check route builds the full two-sort cycle indices (hedra in sort x,
fronts in sort y) at small degree, either keyed by cycle type or by explicit
permutations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations as _itertools_permutations
from typing import Iterable, Sequence

from .cycleindex import X_SORT, Y_SORT, CycleIndexSeries, ci_standard
from .gammaspecies import FiniteGroup, GammaCycleIndex, SymmetricClasses, gci_plethysm
from .partitions import Partition, partition_power, partitions_of, remove_part, z_weight
from .powerseries import NonIntegralCount, PowerSeries


class Permutation:
    """A bijection of {1..m} in one-line notation: ``images[a - 1] = sigma(a)``."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    @classmethod
    def from_cycles(cls, m: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, m + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a - 1] = b
        return cls(images)

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, a: int) -> int:
        return self.images[a - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def compose(self, other: "Permutation") -> "Permutation":
        """self o other: apply ``other`` first."""
        return Permutation(tuple(self.images[b - 1] for b in other.images))

    __mul__ = compose

    def power(self, n: int) -> "Permutation":
        result = Permutation.identity(self.m)
        for _ in range(n):
            result = self.compose(result)
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles, each listed from its smallest element, in order of that element."""
        seen = set()
        out = []
        for start in range(1, self.m + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            a = self(start)
            while a != start:
                cyc.append(a)
                seen.add(a)
                a = self(a)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(len(c) for c in self.cycles())

    def extend(self) -> "Permutation":
        """The same permutation on {1..m+1}, fixing m+1."""
        return Permutation(self.images + (self.m + 1,))

    def restrict(self) -> "Permutation":
        """Inverse of :meth:`extend`; the last point must be fixed."""
        if self.images[-1] != self.m:
            raise ValueError(f"{self!r} does not fix its last point")
        return Permutation(self.images[:-1])


def all_permutations(m: int) -> list[Permutation]:
    return [Permutation(p) for p in _itertools_permutations(range(1, m + 1))]


def _reduce(v: int, m: int) -> int:
    return (v - 1) % m + 1


def rho(i: int, sigma: Permutation) -> Permutation:
    """The induced order change a -> sigma(i + a) - sigma(i), taken mod m in {1..m}."""
    m = sigma.m
    if not 1 <= i <= m:
        raise ValueError(f"index {i} outside 1..{m}")
    si = sigma(i)
    return Permutation(tuple(_reduce(sigma(_reduce(i + a, m)) - si, m) for a in range(1, m + 1)))


def rho_cycle_product(cycle: Sequence[int], sigma: Permutation) -> Permutation:
    """rho_{c_last} o ... o rho_{c_1} along the cycle as listed."""
    result = Permutation.identity(sigma.m)
    for i in cycle:
        result = rho(i, sigma).compose(result)
    return result


def rho_cycle_reduce(cycle: Sequence[int], sigma: Permutation, debug: bool = False) -> Partition:
    """Cycle type of the rho-product along ``cycle``: that of sigma**|cycle|.

    With ``debug`` the product is also formed explicitly and compared.
    """
    lam = partition_power(sigma.cycle_type(), len(cycle))
    if debug:
        explicit = rho_cycle_product(cycle, sigma).cycle_type()
        if explicit != lam:
            raise AssertionError(f"rho product along {cycle} has type {explicit}, expected {lam}")
    return lam


def power_closure(k: int) -> set[Partition]:
    """Partitions of k closed under taking partition powers."""
    if k < 1:
        raise ValueError("k must be positive")
    todo = list(partitions_of(k))
    closure: set[Partition] = set()
    while todo:
        lam = todo.pop()
        if lam in closure:
            continue
        closure.add(lam)
        # powers of lam repeat with period lcm of parts, which divides k!
        n = 1
        while True:
            n += 1
            mu = partition_power(lam, n)
            if mu == lam or n > k:
                break
            if mu not in closure:
                todo.append(mu)
    return closure


def _front_type(lam: Partition, i: int) -> Partition:
    # the rho-product along an i-cycle of a (k+1)-permutation fixes the extra
    # point, so dropping that fixed point leaves a class of S_k
    return remove_part(partition_power(lam, i), 1)


# ---------------------------------------------------------------------------
# generating-function route


class KTreeContext:
    """Memoized one-variable series for fixed k and hedron bound N."""

    def __init__(self, k: int, n_max: int):
        if k < 1:
            raise ValueError("k must be positive")
        if n_max < 0:
            raise ValueError("hedron bound must be nonnegative")
        self.k = k
        self.n_max = n_max
        self.closure = sorted(power_closure(k), reverse=True)
        self._y: dict[Partition, PowerSeries] | None = None
        self._xy: dict[Partition, PowerSeries] = {}

    def _solve_y(self) -> dict[Partition, PowerSeries]:
        """Advance every Y(lambda) one degree at a time.

        Y(lam) = exp(A_lam) with A_lam = sum_n x^n/n * Q(lam^n)(x^n) and
        Q(mu) = prod_{i in mu} Y(mu^i)(x^i).  Coefficient m of A only needs
        coefficients below m, so each stage is closed.  Everything is kept in
        integers: m*A[m] and m*Y[m] are integral.
        """
        N = self.n_max
        lams = self.closure
        y = {lam: [1] for lam in lams}
        # Q(mu) as running prefix products over its factors Y(mu^i)(x^i)
        factors = {mu: [(partition_power(mu, i), i) for i in mu] for mu in lams}
        prefix = {mu: [[] for _ in factors[mu]] for mu in lams}
        q = {mu: [] for mu in lams}
        b = {lam: [0] for lam in lams}  # b[j] = j * A[j]

        def factor_coeff(arg: Partition, i: int, j: int) -> int:
            return y[arg][j // i] if j % i == 0 else 0

        def advance_q(mu: Partition, j: int) -> None:
            rows = prefix[mu]
            for f, (arg, i) in enumerate(factors[mu]):
                if f == 0:
                    rows[0].append(factor_coeff(arg, i, j))
                    continue
                prev = rows[f - 1]
                s = 0
                for a in range(0, j + 1, i):
                    s += prev[j - a] * y[arg][a // i]
                rows[f].append(s)
            q[mu].append(rows[-1][j] if rows else (1 if j == 0 else 0))

        for mu in lams:
            advance_q(mu, 0)
        for m in range(1, N + 1):
            for lam in lams:
                s = 0
                for n in range(1, m + 1):
                    if m % n == 0:
                        s += (m // n) * q[partition_power(lam, n)][m // n - 1]
                b[lam].append(s)
            for lam in lams:
                bl, yl = b[lam], y[lam]
                total = sum(bl[j] * yl[m - j] for j in range(1, m + 1))
                coeff, rem = divmod(total, m)
                if rem:
                    raise NonIntegralCount(
                        f"non-integral count: Y{tuple(lam)} coefficient {m} is {Fraction(total, m)}"
                    )
                yl.append(coeff)
            for mu in lams:
                advance_q(mu, m)
        return {lam: PowerSeries(coeffs, N) for lam, coeffs in y.items()}

    def y(self, lam: Partition) -> PowerSeries:
        lam = Partition(lam)
        if sum(lam) != self.k:
            raise ValueError(f"{tuple(lam)} is not a partition of k={self.k}")
        if self._y is None:
            self._y = self._solve_y()
        return self._y[lam]

    def xy(self, lam: Partition) -> PowerSeries:
        lam = Partition(lam)
        if sum(lam) != self.k + 1:
            raise ValueError(f"{tuple(lam)} is not a partition of k+1={self.k + 1}")
        if lam not in self._xy:
            N = self.n_max
            prod = PowerSeries.one(N)
            for i in lam:
                prod = prod * self.y(_front_type(lam, i)).substitute_power(i)
            # multiply by x
            self._xy[lam] = PowerSeries((0,) + prod.coeffs[:N], N)
        return self._xy[lam]

    def ktree_series(self) -> PowerSeries:
        k, N = self.k, self.n_max
        total = PowerSeries.zero(N)
        for lam in partitions_of(k + 1):
            total = total + self.xy(lam).scale(Fraction(1, z_weight(lam)))
        for lam in partitions_of(k):
            w = Fraction(1, z_weight(lam))
            total = total + self.y(lam).scale(w) - self.xy(lam.union((1,))).scale(w)
        return total


def y_ogf(lam: Partition, ctx: KTreeContext) -> PowerSeries:
    return ctx.y(lam)


def xy_ogf(lam: Partition, ctx: KTreeContext) -> PowerSeries:
    return ctx.xy(lam)


def ktree_ogf(k: int, n_max: int) -> PowerSeries:
    """Generating function of unlabeled k-trees by number of hedra."""
    series = KTreeContext(k, n_max).ktree_series()
    series.integer_coeffs()
    return series


def ktree_counts(k: int, n_max: int) -> list[int]:
    return KTreeContext(k, n_max).ktree_series().integer_coeffs()


# ---------------------------------------------------------------------------
# cycle-index route

MAX_CI_DEGREE = 8


def _check_ci_bound(k: int, n_max: int) -> None:
    if n_max > MAX_CI_DEGREE:
        raise ValueError(f"full cycle indices are limited to {MAX_CI_DEGREE} hedra (asked for {n_max})")
    if k < 1:
        raise ValueError("k must be positive")


def _y_fixed_point(group, key_step, k: int, n_max: int) -> GammaCycleIndex:
    """Iterate Y(g) = p1[y] * E o (slot n: p1[x] * prod over cycles of g^n).

    ``key_step(Y, g)`` returns the factor p1[x] * prod_c Y(arg_c).scaled(|c|).
    """
    y_bound = k * n_max + 1
    p1x = CycleIndexSeries.p(1, X_SORT, bound=n_max, y_bound=y_bound)
    p1y = CycleIndexSeries.p(1, Y_SORT, bound=n_max, y_bound=y_bound)
    e = ci_standard("E", n_max)
    ys = GammaCycleIndex(group, {g: p1y for g in group.keys})
    for _ in range(n_max + 1):
        inner = GammaCycleIndex(group, {g: p1x * key_step(ys, g) for g in group.keys})
        composed = gci_plethysm(e, inner)
        ys = GammaCycleIndex(group, {g: p1y * composed[g] for g in group.keys})
    return ys


def _class_step(ys: GammaCycleIndex, mu: Partition) -> CycleIndexSeries:
    out = None
    for i in mu:
        f = ys[partition_power(mu, i)].scaled_indices(i)
        out = f if out is None else out * f
    return out


class _CIContext:
    _cache: dict[tuple[int, int], GammaCycleIndex] = {}

    @classmethod
    def y_classes(cls, k: int, n_max: int) -> GammaCycleIndex:
        key = (k, n_max)
        if key not in cls._cache:
            cls._cache[key] = _y_fixed_point(SymmetricClasses(k), _class_step, k, n_max)
        return cls._cache[key]


def y_gamma_ci(lam: Partition, k: int, n_max: int) -> CycleIndexSeries:
    """Two-sort cycle index of Y-rooted coding trees at a permutation of type lam."""
    _check_ci_bound(k, n_max)
    lam = Partition(lam)
    if sum(lam) != k:
        raise ValueError(f"{tuple(lam)} is not a partition of k={k}")
    return _CIContext.y_classes(k, n_max)[lam]


def xy_gamma_ci(lam: Partition, k: int, n_max: int) -> CycleIndexSeries:
    """Two-sort cycle index of edge-rooted coding trees at a (k+1)-permutation of type lam."""
    _check_ci_bound(k, n_max)
    lam = Partition(lam)
    if sum(lam) != k + 1:
        raise ValueError(f"{tuple(lam)} is not a partition of k+1={k + 1}")
    ys = _CIContext.y_classes(k, n_max)
    out = CycleIndexSeries.p(1, X_SORT, bound=n_max, y_bound=k * n_max + 1)
    for i in lam:
        out = out * ys[_front_type(lam, i)].scaled_indices(i)
    return out


def ktree_ci(k: int, n_max: int) -> CycleIndexSeries:
    """Two-sort cycle index of k-trees (hedra in x, fronts in y)."""
    _check_ci_bound(k, n_max)
    total = CycleIndexSeries.zero(n_max, k * n_max + 1)
    for lam in partitions_of(k + 1):
        total = total + xy_gamma_ci(lam, k, n_max).scale(Fraction(1, z_weight(lam)))
    for lam in partitions_of(k):
        w = Fraction(1, z_weight(lam))
        total = total + y_gamma_ci(lam, k, n_max).scale(w) - xy_gamma_ci(lam.union((1,)), k, n_max).scale(w)
    return total


def symmetric_group(k: int) -> FiniteGroup:
    return FiniteGroup(
        f"S{k}", all_permutations(k), lambda a, b: a.compose(b), Permutation.identity(k)
    )


def y_gamma_ci_by_permutation(k: int, n_max: int) -> GammaCycleIndex:
    """Y-rooted coding-tree cycle indices keyed by explicit permutations of S_k.

    The argument for each cycle is the explicit rho-product, computed on the
    extension to k+1 points and restricted back, so no class-function
    assumption is used.
    """
    _check_ci_bound(k, n_max)

    def step(ys: GammaCycleIndex, tau: Permutation) -> CycleIndexSeries:
        ext = tau.extend()
        out = None
        for cyc in tau.cycles():
            arg = rho_cycle_product(cyc, ext).restrict()
            f = ys[arg].scaled_indices(len(cyc))
            out = f if out is None else out * f
        return out

    return _y_fixed_point(symmetric_group(k), step, k, n_max)
