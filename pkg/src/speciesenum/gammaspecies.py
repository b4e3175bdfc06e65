"""Cycle indices of species carrying an extra group action.

A :class:`GammaCycleIndex` holds one cycle index series per group element, or
per conjugacy class when the group is a symmetric group and the family is a
class function.  The group itself is described by a small descriptor object
that knows its keys, their averaging weights and the power map.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Mapping, Sequence

from .cycleindex import CycleIndexSeries, _min_bound, substitute
from .partitions import Partition, partition_power, partitions_of, z_weight
from .powerseries import PowerSeries


class FiniteGroup:
    """An explicit finite group given by its elements and a multiplication rule."""

    def __init__(self, name: str, elements: Sequence[Hashable], multiply: Callable, identity: Hashable):
        self.name = name
        self.elements = tuple(elements)
        self._multiply = multiply
        self.identity = identity
        self._powers: dict[tuple[Hashable, int], Hashable] = {}

    @property
    def keys(self) -> tuple:
        return self.elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def weight(self, key) -> Fraction:
        return Fraction(1, len(self.elements))

    def power(self, key, n: int):
        if n < 1:
            raise ValueError("power must be a positive integer")
        cached = self._powers.get((key, n))
        if cached is None:
            cached = key if n == 1 else self._multiply(self.power(key, n - 1), key)
            self._powers[(key, n)] = cached
        return cached

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and (self.name, self.elements) == (other.name, other.elements)

    def __hash__(self):
        return hash((self.name, self.elements))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name})"


class SymmetricClasses:
    """S_m keyed by cycle type; only valid for families constant on classes."""

    def __init__(self, m: int):
        if m < 0:
            raise ValueError("m must be nonnegative")
        self.m = m
        self.name = f"S{m}/classes"

    @property
    def keys(self) -> tuple[Partition, ...]:
        return tuple(partitions_of(self.m))

    def weight(self, key: Partition) -> Fraction:
        # class size / m! = 1 / z_lambda
        return Fraction(1, z_weight(key))

    def power(self, key: Partition, n: int) -> Partition:
        return partition_power(key, n)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetricClasses) and self.m == other.m

    def __hash__(self):
        return hash(("classes", self.m))

    def __repr__(self) -> str:
        return f"SymmetricClasses({self.m})"


TRIVIAL = FiniteGroup("trivial", ["e"], lambda a, b: "e", "e")
S2 = FiniteGroup("S2", ["e", "tau"], lambda a, b: "e" if a == b else "tau", "e")


class GammaCycleIndex:
    """One cycle index series per group key, all sharing one truncation."""

    __slots__ = ("group", "_components")

    def __init__(self, group, components: Mapping[Hashable, CycleIndexSeries]):
        keys = set(group.keys)
        if set(components) != keys:
            missing = keys - set(components)
            extra = set(components) - keys
            raise ValueError(f"components must cover the group exactly (missing {missing}, extra {extra})")
        bound = _min_bound(*(c.bound for c in components.values()))
        y_bound = _min_bound(*(c.y_bound for c in components.values()))
        self.group = group
        self._components = {k: components[k].truncate(bound, y_bound) for k in group.keys}

    @classmethod
    def trivial_lift(cls, f: CycleIndexSeries, group) -> "GammaCycleIndex":
        """Every group element acts trivially, so each component is f."""
        return cls(group, {k: f for k in group.keys})

    @property
    def bound(self) -> int | None:
        return next(iter(self._components.values())).bound

    @property
    def y_bound(self) -> int | None:
        return next(iter(self._components.values())).y_bound

    def __getitem__(self, key) -> CycleIndexSeries:
        try:
            return self._components[key]
        except KeyError:
            raise KeyError(f"no component for {key!r} in {self.group!r}") from None

    def items(self):
        return self._components.items()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GammaCycleIndex)
            and self.group == other.group
            and self._components == other._components
        )

    def __repr__(self) -> str:
        return f"GammaCycleIndex({self.group!r}, {self._components!r})"


def _check_same_group(f: GammaCycleIndex, g: GammaCycleIndex) -> None:
    if f.group != g.group:
        raise ValueError(f"group mismatch: {f.group!r} vs {g.group!r}")


def gci_arith(op: str, f: GammaCycleIndex, g: GammaCycleIndex) -> GammaCycleIndex:
    _check_same_group(f, g)
    if op == "add":
        return GammaCycleIndex(f.group, {k: f[k] + g[k] for k in f.group.keys})
    if op == "sub":
        return GammaCycleIndex(f.group, {k: f[k] - g[k] for k in f.group.keys})
    if op == "mul":
        return GammaCycleIndex(f.group, {k: f[k] * g[k] for k in f.group.keys})
    raise ValueError(f"unknown operation {op!r}")


def gci_plethysm(f: GammaCycleIndex | CycleIndexSeries, g: GammaCycleIndex) -> GammaCycleIndex:
    """Component gamma is f(gamma) with slot p_n fed g(gamma^n), indices scaled by n.

    An ordinary series ``f`` is treated as carrying the trivial action.
    """
    if isinstance(f, CycleIndexSeries):
        f = GammaCycleIndex.trivial_lift(f, g.group)
    _check_same_group(f, g)
    group = g.group
    out = {}
    for key in group.keys:
        out[key] = substitute(f[key], lambda n, key=key: g[group.power(key, n)])
    return GammaCycleIndex(group, out)


def gci_quotient(f: GammaCycleIndex) -> CycleIndexSeries:
    """Burnside average of the components: the cycle index of the orbit species."""
    total = None
    for key, comp in f.items():
        term = comp.scale(f.group.weight(key))
        total = term if total is None else total + term
    return total


def gci_ogf(f: GammaCycleIndex, key, order: int | None = None) -> PowerSeries:
    """Generating function of unlabeled structures fixed by the given element."""
    return f[key].ogf(order)
