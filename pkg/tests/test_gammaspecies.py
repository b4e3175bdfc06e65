from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from speciesenum.bipartite import bc_gamma_ci
from speciesenum.cycleindex import CycleIndexSeries, ci_plethysm, ci_standard
from speciesenum.gammaspecies import (
    S2,
    TRIVIAL,
    GammaCycleIndex,
    SymmetricClasses,
    gci_arith,
    gci_ogf,
    gci_plethysm,
    gci_quotient,
)
from speciesenum.partitions import Partition, partitions_of
from speciesenum.powerseries import PowerSeries

F = Fraction
p1 = CycleIndexSeries.p(1)


def s2(e, tau):
    return GammaCycleIndex(S2, {"e": e, "tau": tau})


def ci(terms, bound=None):
    return CycleIndexSeries(terms, bound)


def small(bound=6):
    monos = [lam for d in range(1, 4) for lam in partitions_of(d)]
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=2)
    return st.dictionaries(st.sampled_from(monos), coeff, max_size=3).map(lambda t: ci(t, bound))


class TestGroups:
    def test_s2_power_map(self):
        assert [S2.power("tau", n) for n in range(1, 5)] == ["tau", "e", "tau", "e"]
        assert S2.power("e", 3) == "e"

    def test_class_weights_sum_to_one(self):
        for m in range(6):
            g = SymmetricClasses(m)
            assert sum(g.weight(k) for k in g.keys) == 1

    def test_class_power(self):
        assert SymmetricClasses(3).power(Partition([3]), 3) == Partition([1, 1, 1])

    def test_components_must_cover_group(self):
        with pytest.raises(ValueError):
            GammaCycleIndex(S2, {"e": p1})


class TestArith:
    def test_add_zero(self):
        f = s2(p1, p1 * p1)
        zero = s2(CycleIndexSeries.zero(), CycleIndexSeries.zero())
        assert gci_arith("add", f, zero) == f

    def test_square(self):
        f = s2(p1, p1)
        assert gci_arith("mul", f, f) == s2(p1 * p1, p1 * p1)

    @settings(max_examples=25, deadline=None)
    @given(small(), small(), small(), small())
    def test_componentwise_product(self, a, b, c, d):
        prod = gci_arith("mul", s2(a, b), s2(c, d))
        assert prod["e"] == a * c and prod["tau"] == b * d

    def test_group_mismatch(self):
        with pytest.raises(ValueError, match="group mismatch"):
            gci_arith("add", s2(p1, p1), GammaCycleIndex.trivial_lift(p1, TRIVIAL))


class TestPlethysm:
    def test_identity_inner(self):
        x = ci_standard("X", 6)
        f = s2(ci_standard("E", 6), ci_standard("C_n", 6, 3))
        got = gci_plethysm(f, GammaCycleIndex.trivial_lift(x, S2))
        assert got == f

    def test_identity_component_is_ordinary_plethysm(self):
        bc = bc_gamma_ci(5)
        omega = ci_standard("Omega", 5)
        assert gci_plethysm(omega, bc)["e"] == ci_plethysm(omega, bc["e"])

    def test_swap_component_degree_two(self):
        bc = bc_gamma_ci(2)
        omega = ci_standard("Omega", 2)
        got = gci_plethysm(omega, bc)["tau"]
        # p1 <- BC(tau); p1^2 <- BC(tau)^2; p2 <- BC(e) with doubled indices
        want = bc["tau"] - F(1, 2) * bc["tau"] * bc["tau"] - F(1, 2) * bc["e"].scaled_indices(2)
        assert got == want.truncate(2)
        assert got == ci({(2,): 2 - 1}, 2)

    @settings(max_examples=25, deadline=None)
    @given(small(), small())
    def test_trivial_action_reduces_to_plethysm(self, f, g):
        lifted = gci_plethysm(f, GammaCycleIndex.trivial_lift(g, TRIVIAL))
        assert lifted["e"] == ci_plethysm(f, g)


class TestQuotient:
    def test_trivial_action(self):
        e = ci_standard("E", 5)
        assert gci_quotient(GammaCycleIndex.trivial_lift(e, S2)) == e
        assert gci_quotient(GammaCycleIndex.trivial_lift(e, TRIVIAL)) == e

    def test_degree_one(self):
        assert gci_quotient(s2(2 * p1, CycleIndexSeries.zero())) == p1

    def test_degree_two(self):
        got = gci_quotient(s2(ci({(1, 1): 3, (2,): 1}), ci({(2,): 2})))
        assert got == ci({(1, 1): F(3, 2), (2,): F(3, 2)})
        assert got.ogf(2).integer_coeffs() == [0, 0, 3]

    def test_classes_weighted_by_z(self):
        g = SymmetricClasses(2)
        f = GammaCycleIndex(g, {Partition([1, 1]): 2 * p1, Partition([2]): CycleIndexSeries.zero()})
        assert gci_quotient(f) == p1

    @settings(max_examples=25, deadline=None)
    @given(small(), small(), small(), small())
    def test_commutes_with_sum(self, a, b, c, d):
        f, g = s2(a, b), s2(c, d)
        assert gci_quotient(gci_arith("add", f, g)) == gci_quotient(f) + gci_quotient(g)

    def test_bicolored_quotient_counts_are_integers(self):
        gci_quotient(bc_gamma_ci(8)).ogf().integer_coeffs()


class TestOgf:
    def test_bicolored_components(self):
        bc = bc_gamma_ci(2)
        assert gci_ogf(bc, "e") == PowerSeries([0, 2, 4], 2)
        assert gci_ogf(bc, "tau") == PowerSeries([0, 0, 2], 2)

    def test_trivial_group(self):
        e = ci_standard("E", 4)
        assert gci_ogf(GammaCycleIndex.trivial_lift(e, TRIVIAL), "e") == e.ogf()

    def test_quotient_ogf_is_average(self):
        bc = bc_gamma_ci(6)
        avg = (gci_ogf(bc, "e") + gci_ogf(bc, "tau")) * F(1, 2)
        assert gci_quotient(bc).ogf() == avg

    def test_missing_key(self):
        with pytest.raises(KeyError):
            gci_ogf(bc_gamma_ci(2), "sigma")
