from fractions import Fraction
from math import factorial

import pytest

from speciesenum.bipartite import (
    BipartitePipeline,
    bc_gamma_ci,
    bp_ci,
    cbc_gamma_ci,
    cbp_ci,
    nbp_ci,
)
from speciesenum.cycleindex import CycleIndexSeries, ci_plethysm, ci_standard
from speciesenum.oracle import bicolored_closed_form, count_labeled, count_unlabeled
from speciesenum.reference_values import BIPARTITE_BLOCK_COUNTS

F = Fraction


def ci(terms, bound=None):
    return CycleIndexSeries(terms, bound)


@pytest.fixture(scope="module")
def pipe8():
    return BipartitePipeline(8)


class TestBicolored:
    def test_identity_component_low_degrees(self):
        e = bc_gamma_ci(2)["e"]
        assert e.degree_slice(1) == ci({(1,): 2})
        assert e.degree_slice(2) == ci({(1, 1): 3, (2,): 1})
        assert e[(1, 1)] * factorial(2) == 6 == bicolored_closed_form(2)

    def test_swap_component_degree_two(self):
        assert bc_gamma_ci(2)["tau"] == ci({(2,): 2}, 2)

    def test_no_constant_term(self, pipe8):
        assert pipe8.bc["e"].constant_term() == 0
        assert pipe8.bc["tau"].constant_term() == 0

    def test_labeled_closed_form(self, pipe8):
        egf = pipe8.bc["e"].egf()
        for n in range(1, 9):
            assert egf[n] * factorial(n) == bicolored_closed_form(n)

    def test_swap_fixed_classes_on_four_vertices(self):
        # classes fixed by the swap need equal colour classes; on 2+2 vertices they are
        # the empty graph, one edge, a matching, a path and the complete bipartite graph
        assert bc_gamma_ci(4)["tau"].ogf().coeffs == (0, 0, 2, 0, 5)

    def test_stage_bounds(self, pipe8):
        for stage in (pipe8.bc["e"], pipe8.cbc["tau"], pipe8.cbp, pipe8.bp, pipe8.nbp):
            assert stage.bound == 8

    def test_rejects_zero_bound(self):
        with pytest.raises(ValueError):
            bc_gamma_ci(0)


class TestConnected:
    def test_degree_one(self, pipe8):
        assert pipe8.cbc["e"].degree_slice(1) == ci({(1,): 2})
        assert pipe8.cbp.degree_slice(1) == ci({(1,): 1})

    def test_labeled_connected_two_vertices(self, pipe8):
        assert pipe8.cbc["e"].egf()[2] * 2 == 2

    def test_bicolored_reconstruction(self, pipe8):
        assert ci_plethysm(ci_standard("E_plus", 8), pipe8.cbc["e"]) == pipe8.bc["e"]

    def test_connected_bipartite_first_terms(self, pipe8):
        assert pipe8.cbp.ogf().coeffs[1:5] == (1, 1, 1, 3)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_unlabeled_against_enumeration(self, pipe8, n):
        assert pipe8.cbc["e"].ogf()[n] == count_unlabeled("connected_bicolored", n)
        assert pipe8.cbp.ogf()[n] == count_unlabeled("connected_bipartite", n)
        assert pipe8.bp.ogf()[n] == count_unlabeled("bipartite", n)

    def test_integer_counts(self, pipe8):
        for stage in (pipe8.cbp, pipe8.bp, pipe8.nbp):
            stage.ogf().integer_coeffs()

    def test_standalone_functions_agree(self):
        cbc = cbc_gamma_ci(5)
        cbp = cbp_ci(5, cbc)
        assert cbp == cbp_ci(5)
        assert bp_ci(5, cbp) == bp_ci(5)


class TestBlocks:
    def test_table(self):
        assert tuple(BipartitePipeline(10).block_counts()) == BIPARTITE_BLOCK_COUNTS

    def test_no_three_vertex_block(self, pipe8):
        assert pipe8.nbp.ogf()[3] == 0

    @pytest.mark.parametrize("n", range(1, 7))
    def test_labeled_against_enumeration(self, pipe8, n):
        assert pipe8.nbp.egf()[n] * factorial(n) == count_labeled("nonseparable_bipartite", n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_unlabeled_against_enumeration(self, pipe8, n):
        assert pipe8.nbp.ogf()[n] == count_unlabeled("nonseparable_bipartite", n)

    def test_single_vertex_convention(self):
        with_vertex = nbp_ci(6)
        without = nbp_ci(6, single_vertex=False)
        assert with_vertex - without == CycleIndexSeries.p(1, bound=6)
        assert without.ogf().coeffs[:3] == (0, 0, 1)
