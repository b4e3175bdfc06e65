"""Exact cycle-index calculus for counting unlabeled k-trees and bipartite blocks."""

from .bipartite import BipartitePipeline, bipartite_block_counts
from .cycleindex import CycleIndexSeries, PMonomial, ci_comp_inverse, ci_plethysm, ci_standard
from .gammaspecies import GammaCycleIndex, gci_plethysm, gci_quotient
from .ktrees import KTreeContext, ktree_ci, ktree_counts, ktree_ogf
from .partitions import Partition, partitions_of, z_weight
from .powerseries import NonIntegralCount, PowerSeries

__all__ = [
    "BipartitePipeline",
    "CycleIndexSeries",
    "GammaCycleIndex",
    "KTreeContext",
    "NonIntegralCount",
    "PMonomial",
    "Partition",
    "PowerSeries",
    "bipartite_block_counts",
    "ci_comp_inverse",
    "ci_plethysm",
    "ci_standard",
    "gci_plethysm",
    "gci_quotient",
    "ktree_ci",
    "ktree_counts",
    "ktree_ogf",
    "partitions_of",
    "z_weight",
]
