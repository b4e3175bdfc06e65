"""Unlabeled bipartite graphs and bipartite blocks via bicolored graphs.

Bicolored graphs carry an S2 action (swap the colors).  Connected bicolored
graphs come from Omega, connected bipartite graphs are their S2 orbits, and
blocks are extracted from connected graphs by the block decomposition
equations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cycleindex import (
    CycleIndexSeries,
    PMonomial,
    ci_comp_inverse,
    ci_plethysm,
    ci_standard,
)
from .gammaspecies import S2, GammaCycleIndex, gci_plethysm, gci_quotient
from .partitions import EMPTY, Partition, double, partitions_of, split_pairs, z_weight


def _edge_orbits_between(mu: Partition, nu: Partition) -> int:
    return sum(gcd(i, j) for i in mu for j in nu)


def bc_identity_component(n_max: int) -> CycleIndexSeries:
    """Component at the identity: each split of the cycles into white and black."""
    terms = {}
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            c = Fraction(0)
            for mu, nu in split_pairs(lam):
                c += Fraction(2 ** _edge_orbits_between(mu, nu), z_weight(mu) * z_weight(nu))
            terms[PMonomial._trusted(lam, EMPTY)] = c
    return CycleIndexSeries(terms, n_max)


def _swap_orbit_exponent(lam: Partition) -> int:
    # lam is half of the cycle type; count edge orbits under a color-reversing permutation
    within = sum((p + 1) // 2 for p in lam)
    between = sum(gcd(lam[a], lam[b]) for a in range(len(lam)) for b in range(a + 1, len(lam)))
    return within + between


def bc_swap_component(n_max: int) -> CycleIndexSeries:
    """Component at the color swap; only even cycle types contribute."""
    terms = {}
    for half in range(1, n_max // 2 + 1):
        for lam in partitions_of(half):
            lam2 = double(lam)
            c = Fraction(2 ** (len(lam) + _swap_orbit_exponent(lam)), z_weight(lam2))
            terms[PMonomial._trusted(lam2, EMPTY)] = c
    return CycleIndexSeries(terms, n_max)


def bc_gamma_ci(n_max: int) -> GammaCycleIndex:
    """S2-cycle index of nonempty bicolored graphs through ``n_max`` vertices."""
    if n_max < 1:
        raise ValueError("degree bound must be at least 1")
    return GammaCycleIndex(S2, {"e": bc_identity_component(n_max), "tau": bc_swap_component(n_max)})


def cbc_gamma_ci(n_max: int, bc: GammaCycleIndex | None = None) -> GammaCycleIndex:
    """Connected bicolored graphs: Omega applied to all nonempty bicolored graphs."""
    if bc is None:
        bc = bc_gamma_ci(n_max)
    return gci_plethysm(ci_standard("Omega", n_max), bc)


def cbp_ci(n_max: int, cbc: GammaCycleIndex | None = None) -> CycleIndexSeries:
    """Connected bipartite graphs as color-swap orbits of connected bicolored ones."""
    if cbc is None:
        cbc = cbc_gamma_ci(n_max)
    return gci_quotient(cbc)


def bp_ci(n_max: int, cbp: CycleIndexSeries | None = None) -> CycleIndexSeries:
    """All bipartite graphs (including the empty one) as sets of connected ones."""
    if cbp is None:
        cbp = cbp_ci(n_max)
    return ci_plethysm(ci_standard("E", n_max), cbp)


def nbp_ci(
    n_max: int, cbp: CycleIndexSeries | None = None, single_vertex: bool = True
) -> CycleIndexSeries:
    """Nonseparable bipartite graphs (blocks) from connected bipartite graphs.

    With I the plethystic inverse of pointed connected graphs and
    D = (dZ/dp1) o I, the derivative of the block series is Omega(D - 1) and the
    blocks themselves are Z o I + p1 * Omega(D - 1) - p1.

    That equation only sees blocks with at least one edge.  With
    ``single_vertex`` the lone vertex is counted as a block too, which is the
    usual tabulation convention (one block on one vertex).
    """
    if cbp is None:
        cbp = cbp_ci(n_max)
    inverse = ci_comp_inverse(cbp.point(), n_max)
    d = ci_plethysm(cbp.derivative(), inverse)
    if d.constant_term() != 1:
        raise ArithmeticError(f"expected constant term 1 in the rooted quotient, got {d.constant_term()}")
    nbp_deriv = ci_plethysm(ci_standard("Omega", n_max - 1), d - 1)
    x = CycleIndexSeries.p(1, bound=n_max)
    blocks = ci_plethysm(cbp, inverse) + nbp_deriv.times_p1() - x
    return blocks + x if single_vertex else blocks


class BipartitePipeline:
    """Every stage of the bipartite computation at one degree bound, computed lazily."""

    def __init__(self, n_max: int):
        if n_max < 1:
            raise ValueError("degree bound must be at least 1")
        self.n_max = n_max
        self._cache: dict[str, object] = {}

    def _stage(self, name: str, build):
        if name not in self._cache:
            self._cache[name] = build()
        return self._cache[name]

    @property
    def bc(self) -> GammaCycleIndex:
        return self._stage("BC", lambda: bc_gamma_ci(self.n_max))

    @property
    def cbc(self) -> GammaCycleIndex:
        return self._stage("CBC", lambda: cbc_gamma_ci(self.n_max, self.bc))

    @property
    def cbp(self) -> CycleIndexSeries:
        return self._stage("CBP", lambda: cbp_ci(self.n_max, self.cbc))

    @property
    def bp(self) -> CycleIndexSeries:
        return self._stage("BP", lambda: bp_ci(self.n_max, self.cbp))

    @property
    def nbp(self) -> CycleIndexSeries:
        return self._stage("NBP", lambda: nbp_ci(self.n_max, self.cbp))

    def block_counts(self) -> list[int]:
        """Unlabeled blocks for n = 1..n_max."""
        return self.nbp.ogf().integer_coeffs()[1:]


def bipartite_block_counts(n_max: int) -> list[int]:
    return BipartitePipeline(n_max).block_counts()
