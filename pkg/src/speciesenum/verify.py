"""Named consistency checks grouped into suites.

Each check raises ``AssertionError`` with a short explanation on failure.  The
CLI ``verify`` command and the acceptance tests both run these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from .bipartite import BipartitePipeline
from .cycleindex import (
    CycleIndexSeries,
    PMonomial,
    ci_comp_inverse,
    ci_plethysm,
    ci_standard,
)
from .ktrees import (
    Permutation,
    all_permutations,
    ktree_ci,
    ktree_counts,
    ktree_ogf,
    rho,
    rho_cycle_product,
    y_gamma_ci_by_permutation,
)
from .oracle import (
    bicolored_closed_form,
    count_labeled,
    count_labeled_bicolored,
    count_small_2trees,
    count_unlabeled,
    count_unlabeled_trees,
    fix_count_cycle_index,
)
from .partitions import partitions_of
from .reference_values import BIPARTITE_BLOCK_COUNTS, KTREE_COUNTS

IDENTITY_DEGREE = 12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _expect_equal(got, want, what: str) -> None:
    if got != want:
        raise AssertionError(f"{what}: got {got}, expected {want}")


def random_series(rng: random.Random, max_degree: int, bound: int, constant: bool = False) -> CycleIndexSeries:
    """A few random p-monomials with small rational coefficients."""
    terms = {}
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(0 if constant else 1, max_degree)
        lam = rng.choice(partitions_of(d))
        terms[PMonomial(lam)] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return CycleIndexSeries(terms, bound)


def random_permutation(rng: random.Random, m: int) -> Permutation:
    images = list(range(1, m + 1))
    rng.shuffle(images)
    return Permutation(images)


# identities


def check_omega_inverse(degree: int = IDENTITY_DEGREE) -> None:
    e_plus = ci_standard("E_plus", degree)
    omega = ci_standard("Omega", degree)
    x = ci_standard("X", degree)
    _expect_equal(ci_comp_inverse(e_plus, degree), omega, "inverse of E_plus")
    _expect_equal(ci_plethysm(e_plus, omega), x, "E_plus o Omega")
    _expect_equal(ci_plethysm(omega, e_plus), x, "Omega o E_plus")


def check_plethysm_distributive(degree: int = 8, trials: int = 6, seed: int = 7) -> None:
    rng = random.Random(seed)
    for _ in range(trials):
        f = random_series(rng, 4, degree, constant=True)
        g = random_series(rng, 4, degree, constant=True)
        h = random_series(rng, 3, degree)
        _expect_equal(ci_plethysm(f + g, h), ci_plethysm(f, h) + ci_plethysm(g, h), "(f+g) o h")
        _expect_equal(ci_plethysm(f * g, h), ci_plethysm(f, h) * ci_plethysm(g, h), "(f*g) o h")


def check_generating_function_homomorphisms(degree: int = IDENTITY_DEGREE, trials: int = 6, seed: int = 11) -> None:
    rng = random.Random(seed)
    for _ in range(trials):
        f = random_series(rng, 6, degree, constant=True)
        g = random_series(rng, 6, degree, constant=True)
        _expect_equal((f * g).ogf(), f.ogf() * g.ogf(), "ogf of product")
        _expect_equal((f + g).ogf(), f.ogf() + g.ogf(), "ogf of sum")
        _expect_equal((f * g).egf(), f.egf() * g.egf(), "egf of product")
        _expect_equal((f + g).egf(), f.egf() + g.egf(), "egf of sum")


def check_pointing(degree: int = IDENTITY_DEGREE) -> None:
    samples = [ci_standard("E", degree), ci_standard("Omega", degree), ci_standard("C_n", degree, 6)]
    samples.append(BipartitePipeline(min(degree, 8)).cbp)
    p1 = CycleIndexSeries.p(1)
    for f in samples:
        for d in range(f.max_degree() + 1):
            piece = f.degree_slice(d)
            _expect_equal(piece.point(), p1 * piece.derivative(), f"pointing in degree {d}")
        _expect_equal(f.point().degree_slice(degree), (p1 * f.degree_slice(degree).derivative()), "top degree")
    _expect_equal(ci_standard("E", degree), ci_standard("E_plus", degree) + 1, "E = E_plus + 1")


def check_rho_fixed_point(max_k: int = 7, trials: int = 40, seed: int = 3) -> None:
    rng = random.Random(seed)
    for m in range(1, max_k + 1):
        for _ in range(trials):
            sigma = random_permutation(rng, m)
            for i in range(1, m + 1):
                if sigma(i) == i:
                    _expect_equal(rho(i, sigma).cycle_type(), sigma.cycle_type(), f"rho_{i}({sigma})")


def check_rho_product(max_k: int = 7, trials: int = 40, seed: int = 5) -> None:
    rng = random.Random(seed)
    for m in range(1, max_k + 1):
        for _ in range(trials):
            sigma = random_permutation(rng, m)
            for cyc in sigma.cycles():
                _expect_equal(
                    rho_cycle_product(cyc, sigma), rho(cyc[0], sigma.power(len(cyc))), f"product along {cyc} of {sigma}"
                )


def check_class_function(max_k: int = 3, degree: int = 5) -> None:
    for k in range(1, max_k + 1):
        family = y_gamma_ci_by_permutation(k, degree)
        by_type: dict = {}
        for sigma in all_permutations(k):
            lam = sigma.cycle_type()
            if lam in by_type:
                _expect_equal(family[sigma], by_type[lam], f"k={k}, sigma={sigma}")
            else:
                by_type[lam] = family[sigma]


def check_cross_path(max_k: int = 3, degree: int = 6) -> None:
    for k in range(1, max_k + 1):
        _expect_equal(ktree_ci(k, degree).ogf(), ktree_ogf(k, degree), f"k={k} cycle index vs ogf")


# oracles


def check_labeled_bicolored(max_n: int = 8) -> None:
    egf = BipartitePipeline(max_n).bc["e"].egf()
    for n in range(1, max_n + 1):
        _expect_equal(count_labeled_bicolored(n), bicolored_closed_form(n), f"bicolored enumeration n={n}")
        _expect_equal(egf[n] * factorial(n), bicolored_closed_form(n), f"bicolored egf n={n}")


def check_unlabeled_families(max_n: int = 6) -> None:
    p = BipartitePipeline(max_n)
    series = {
        "bicolored": p.bc["e"].ogf(),
        "connected_bicolored": p.cbc["e"].ogf(),
        "bipartite": p.bp.ogf(),
        "connected_bipartite": p.cbp.ogf(),
        "nonseparable_bipartite": p.nbp.ogf(),
    }
    for family, ogf in series.items():
        start = 0 if family == "bipartite" else 1
        for n in range(start, max_n + 1):
            _expect_equal(ogf[n], count_unlabeled(family, n), f"{family} n={n}")


def check_labeled_blocks(max_n: int = 6) -> None:
    egf = BipartitePipeline(max_n).nbp.egf()
    for n in range(1, max_n + 1):
        _expect_equal(egf[n] * factorial(n), count_labeled("nonseparable_bipartite", n), f"labeled blocks n={n}")


def check_trees(max_vertices: int = 8) -> None:
    counts = ktree_counts(1, max_vertices - 1)
    for v in range(1, max_vertices + 1):
        _expect_equal(counts[v - 1], count_unlabeled_trees(v), f"trees on {v} vertices")


def check_two_trees(max_hedra: int = 5) -> None:
    counts = ktree_counts(2, max_hedra)
    for h in range(0, max_hedra + 1):
        _expect_equal(counts[h], count_small_2trees(h), f"2-trees with {h} hedra")


def check_fix_counts() -> None:
    e2 = ci_standard("E_n", 4, 2)
    cases = {
        "E2oE2": (4, ci_plethysm(e2, e2).degree_slice(4)),
        "E": (3, ci_standard("E_n", 3, 3)),
        "C": (4, ci_standard("C_n", 4, 4)),
        "E2_pointed": (2, e2.point().degree_slice(2)),
    }
    for name, (n, series) in cases.items():
        _expect_equal(series, fix_count_cycle_index(name, n), f"fixed-point counts for {name}")


# tables


def check_block_table() -> None:
    _expect_equal(tuple(BipartitePipeline(10).block_counts()), BIPARTITE_BLOCK_COUNTS, "bipartite blocks")


def check_ktree_tables() -> None:
    for k, column in KTREE_COUNTS.items():
        _expect_equal(tuple(ktree_counts(k, len(column) - 1)), column, f"k={k} column")


def check_stabilization(max_n: int = 8, max_k: int = 12) -> None:
    for n in range(0, max_n + 1):
        values = {k: ktree_counts(k, n)[n] for k in range(n + 2, max_k + 1)}
        if len(set(values.values())) > 1:
            raise AssertionError(f"n={n} not stable: {values}")


SUITES: dict[str, list[tuple[str, Callable[[], None]]]] = {
    "identities": [
        ("omega_inverse_round_trip", check_omega_inverse),
        ("plethysm_right_distributive", check_plethysm_distributive),
        ("ogf_egf_homomorphisms", check_generating_function_homomorphisms),
        ("pointing_identity", check_pointing),
        ("rho_fixed_point_cycle_type", check_rho_fixed_point),
        ("rho_cycle_product", check_rho_product),
        ("class_function", check_class_function),
        ("cycle_index_vs_ogf", check_cross_path),
    ],
    "oracles": [
        ("labeled_bicolored", check_labeled_bicolored),
        ("unlabeled_graph_families", check_unlabeled_families),
        ("labeled_blocks", check_labeled_blocks),
        ("trees", check_trees),
        ("two_trees", check_two_trees),
        ("fixed_point_counts", check_fix_counts),
    ],
    "tables": [
        ("bipartite_blocks", check_block_table),
        ("ktree_columns", check_ktree_tables),
        ("stabilization", check_stabilization),
    ],
}


def run_check(name: str, check: Callable[[], None]) -> CheckResult:
    try:
        check()
    except AssertionError as exc:
        return CheckResult(name, False, str(exc))
    except ArithmeticError as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, True)


def run_suite(suite: str) -> list[CheckResult]:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    return [run_check(name, check) for name, check in SUITES[suite]]
