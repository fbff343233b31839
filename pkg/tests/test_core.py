import random

import pytest

from conftest import naive_alternating_cycles
from rgkit.core import (
    AlternatingFourCycle,
    DegreeSequence,
    LabeledGraph,
    alternating_four_cycles,
    complement,
    degree_sequence_of,
    graph_from_json_dict,
    graph_to_json_dict,
    pair_index,
    pair_list,
    two_switch,
)
from rgkit.errors import InvalidCycleError

TRIANGLE_PLUS_EDGE = LabeledGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
TWO_K2 = LabeledGraph.from_edges(4, [(0, 1), (2, 3)])


class TestDegreeSequence:
    def test_constructor_sorts_nonincreasing(self):
        assert DegreeSequence((1, 2, 0, 2)).terms == (2, 2, 1, 0)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            DegreeSequence(())

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            DegreeSequence((1, -1))

    def test_rejects_degree_beyond_n_minus_1(self):
        with pytest.raises(ValueError):
            DegreeSequence((3, 1, 1))

    def test_display_run_length(self):
        assert DegreeSequence((6, 4, 4, 4, 4, 4, 4)).display() == "(6,4^(6))"
        assert DegreeSequence((0,)).display() == "(0)"
        assert DegreeSequence((2, 2, 1, 1)).display() == "(2^(2),1^(2))"

    @pytest.mark.parametrize(
        "text", ["6,4^6", "6,4^(6)", "(6,4,4,4,4,4,4)", " 6 , 4^6 "]
    )
    def test_parse_variants(self, text):
        assert DegreeSequence.parse(text).terms == (6, 4, 4, 4, 4, 4, 4)

    @pytest.mark.parametrize("text", ["", "a,b", "1,,2", "2^0", "1^-2"])
    def test_parse_rejects_garbage(self, text):
        with pytest.raises(ValueError):
            DegreeSequence.parse(text)

    def test_complement_sequence(self):
        assert DegreeSequence((2, 2, 2, 1, 1)).complement().terms == (3, 3, 2, 2, 2)


class TestLabeledGraph:
    def test_edge_normalization_and_equality(self):
        g1 = LabeledGraph.from_edges(3, [(1, 0), (2, 1)])
        g2 = LabeledGraph.from_edges(3, [(0, 1), (1, 2)])
        assert g1 == g2
        assert g1.encoding == ((0, 1), (1, 2))

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            LabeledGraph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            LabeledGraph.from_edges(3, [(0, 3)])

    def test_degree_sequence_examples(self):
        assert degree_sequence_of(TRIANGLE_PLUS_EDGE).terms == (2, 2, 2, 1, 1)
        assert degree_sequence_of(LabeledGraph.empty(3)).terms == (0, 0, 0)
        assert degree_sequence_of(LabeledGraph.complete(4)).terms == (3, 3, 3, 3)

    def test_edge_mask_roundtrip(self):
        for g in (TRIANGLE_PLUS_EDGE, TWO_K2, LabeledGraph.empty(2)):
            assert LabeledGraph.from_edge_mask(g.vertex_count, g.edge_mask) == g

    def test_pair_index_matches_pair_list(self):
        for n in range(2, 8):
            for k, (a, b) in enumerate(pair_list(n)):
                assert pair_index(n, a, b) == k

    def test_adjacency_masks(self):
        g = TRIANGLE_PLUS_EDGE
        assert g.neighbors(0) == (1, 2)
        assert g.neighbors(4) == (3,)
        assert g.has_edge(3, 4) and not g.has_edge(0, 4)

    def test_json_roundtrip(self):
        payload = graph_to_json_dict(TRIANGLE_PLUS_EDGE)
        assert payload == {"n": 5, "edges": [[1, 2], [1, 3], [2, 3], [4, 5]]}
        assert graph_from_json_dict(payload) == TRIANGLE_PLUS_EDGE

    @pytest.mark.parametrize(
        "data",
        [
            {"edges": []},
            {"n": 0, "edges": []},
            {"n": 2, "edges": [[1]]},
            {"n": 2, "edges": [[1, 3]]},
            {"n": 2, "edges": [[0, 1]]},
        ],
    )
    def test_json_rejects_malformed(self, data):
        with pytest.raises(ValueError):
            graph_from_json_dict(data)


class TestComplement:
    def test_two_k2_gives_c4(self):
        # oracle: direct set complement over all 6 pairs
        expected = frozenset(set(pair_list(4)) - TWO_K2.edges)
        assert expected == frozenset({(0, 2), (0, 3), (1, 2), (1, 3)})
        assert complement(TWO_K2).edges == expected

    def test_complete_to_edgeless(self):
        assert complement(LabeledGraph.complete(5)) == LabeledGraph.empty(5)

    def test_involution(self):
        for g in (TRIANGLE_PLUS_EDGE, TWO_K2, LabeledGraph.empty(1)):
            assert complement(complement(g)) == g


class TestAlternatingFourCycle:
    def test_equivalent_orderings_collapse(self):
        base = AlternatingFourCycle(0, 1, 2, 3)
        assert AlternatingFourCycle(2, 3, 0, 1) == base
        assert AlternatingFourCycle(1, 0, 3, 2) == base
        assert AlternatingFourCycle(3, 2, 1, 0) == base
        assert AlternatingFourCycle(0, 1, 3, 2) != base

    def test_distinct_vertices_required(self):
        with pytest.raises(ValueError):
            AlternatingFourCycle(0, 1, 2, 2)

    def test_residual_cycle(self):
        c = AlternatingFourCycle(0, 1, 2, 3)
        assert c.residual() == AlternatingFourCycle(1, 2, 3, 0)

    def test_two_k2_has_exactly_two_cycles(self):
        cycles = alternating_four_cycles(TWO_K2)
        assert cycles == [
            AlternatingFourCycle(0, 1, 2, 3),
            AlternatingFourCycle(0, 1, 3, 2),
        ]

    def test_complete_graph_has_none(self):
        assert alternating_four_cycles(LabeledGraph.complete(4)) == []

    def test_small_graphs_have_none(self):
        assert alternating_four_cycles(LabeledGraph.from_edges(3, [(0, 1), (1, 2)])) == []

    def test_labeled_path_has_cycles(self):
        # path v4-v1-v2-v3-v5 realizing (2,2,2,1,1)
        path = LabeledGraph.from_edges(5, [(3, 0), (0, 1), (1, 2), (2, 4)])
        assert degree_sequence_of(path).terms == (2, 2, 2, 1, 1)
        cycles = alternating_four_cycles(path)
        assert cycles and cycles == naive_alternating_cycles(path)

    def test_matches_naive_oracle_exhaustively_to_five_vertices(self):
        for n in range(1, 6):
            for mask in range(1 << (n * (n - 1) // 2)):
                g = LabeledGraph.from_edge_mask(n, mask)
                assert alternating_four_cycles(g) == naive_alternating_cycles(g)

    def test_matches_naive_oracle_on_six_vertex_sample(self):
        rng = random.Random(2026)
        for _ in range(250):
            g = LabeledGraph.from_edge_mask(6, rng.randrange(1 << 15))
            assert alternating_four_cycles(g) == naive_alternating_cycles(g)


class TestTwoSwitch:
    def test_matching_swap(self):
        out = two_switch(TWO_K2, AlternatingFourCycle(0, 1, 2, 3))
        assert out.edges == frozenset({(0, 3), (1, 2)})

    def test_triangle_plus_edge_to_path(self):
        out = two_switch(TRIANGLE_PLUS_EDGE, AlternatingFourCycle(3, 4, 0, 1))
        assert degree_sequence_of(out).terms == (2, 2, 2, 1, 1)
        assert out.edges == frozenset({(0, 2), (1, 2), (1, 3), (0, 4)})

    def test_degrees_preserved_and_graph_changes(self):
        for cyc in alternating_four_cycles(TRIANGLE_PLUS_EDGE):
            out = two_switch(TRIANGLE_PLUS_EDGE, cyc)
            assert out != TRIANGLE_PLUS_EDGE
            assert out.degrees == TRIANGLE_PLUS_EDGE.degrees

    def test_invalid_cycle_rejected(self):
        with pytest.raises(InvalidCycleError):
            two_switch(TWO_K2, AlternatingFourCycle(0, 2, 1, 3))

    def test_inverse_via_residual(self):
        cyc = AlternatingFourCycle(0, 1, 2, 3)
        once = two_switch(TWO_K2, cyc)
        assert cyc.residual().valid_in(once)
        assert two_switch(once, cyc.residual()) == TWO_K2

    def test_cycle_complement_duality(self):
        # [u,v:w,x] in g gives [v,w:x,u] in the complement
        for g in (TWO_K2, TRIANGLE_PLUS_EDGE):
            co = complement(g)
            for c in alternating_four_cycles(g):
                dual = AlternatingFourCycle(c.v, c.w, c.x, c.u)
                assert dual.valid_in(co)
