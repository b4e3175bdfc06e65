"""Integer partitions as conjugacy-class labels.

A :class:`Partition` is stored as a weakly decreasing tuple of positive
integers, so it hashes and compares like the tuple itself and can be used
directly as a dictionary key.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial, gcd
from typing import Iterable, Sequence


class Partition(tuple):
    """An integer partition with parts sorted in weakly decreasing order."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted(parts, reverse=True))
        for p in parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"partition parts must be positive integers, got {p!r}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Sequence[int]) -> "Partition":
        # caller guarantees `parts` is already sorted descending and positive
        return tuple.__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition._trusted(tuple(sorted(self + tuple(other), reverse=True)))

    def scaled(self, k: int) -> "Partition":
        """Every part multiplied by ``k``."""
        return Partition._trusted(tuple(k * p for p in self))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition()


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> [tuple(p) for p in partitions_of(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition._trusted(p) for p in _partitions_bounded(n, n)]


@lru_cache(maxsize=None)
def z_weight(lam: Partition) -> int:
    """Centralizer order z_lambda = prod_i i^{m_i} m_i!."""
    z = 1
    for part, mult in Counter(lam).items():
        z *= part**mult * factorial(mult)
    return z


def class_size(lam: Partition) -> int:
    """Number of permutations of cycle type ``lam`` in S_n."""
    return factorial(sum(lam)) // z_weight(lam)


@lru_cache(maxsize=None)
def partition_power(lam: Partition, i: int) -> Partition:
    """Cycle type of sigma**i when sigma has cycle type ``lam``.

    A cycle of length m splits into gcd(m, i) cycles of length m / gcd(m, i).
    """
    if i < 1:
        raise ValueError("power must be a positive integer")
    if i == 1:
        return lam
    parts = []
    for m in lam:
        g = gcd(m, i)
        parts.extend([m // g] * g)
    parts.sort(reverse=True)
    return Partition._trusted(parts)


def split_pairs(lam: Partition) -> list[tuple[Partition, Partition]]:
    """All ordered pairs (mu, nu) whose multiset union is ``lam``."""
    mults = sorted(Counter(lam).items(), reverse=True)
    out = []
    for choice in product(*(range(m + 1) for _, m in mults)):
        mu: list[int] = []
        nu: list[int] = []
        for (part, m), a in zip(mults, choice):
            mu.extend([part] * a)
            nu.extend([part] * (m - a))
        out.append((Partition._trusted(mu), Partition._trusted(nu)))
    return out


def double(lam: Partition) -> Partition:
    return lam.scaled(2)


def remove_part(lam: Partition, part: int) -> Partition:
    """Drop one occurrence of ``part`` from ``lam``."""
    parts = list(lam)
    try:
        parts.remove(part)
    except ValueError:
        raise ValueError(f"{part} is not a part of {lam!r}") from None
    return Partition._trusted(parts)
