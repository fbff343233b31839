from itertools import combinations, combinations_with_replacement

import pytest

from rgkit.core import DegreeSequence, LabeledGraph, degree_sequence_of
from rgkit.errors import InvalidPartitionError, NotGraphicError
from rgkit.realization import enumerate_realizations, is_graphic
from rgkit.tyshkevich import (
    SplittedSequence,
    compose_graphs,
    compose_sequences,
    decompose,
    is_complete_realization_graph,
    is_threshold,
    split_realization,
)

FIG6 = DegreeSequence.parse("8,8,6,5,4,3,3,3,1,1")


def seq(text: str) -> DegreeSequence:
    return DegreeSequence.parse(text)


def graphic_sequences_upto(max_n):
    for n in range(1, max_n + 1):
        for terms in combinations_with_replacement(range(n - 1, -1, -1), n):
            d = DegreeSequence(terms)
            if is_graphic(d):
                yield d


class TestSplitRealization:
    def test_witness_layout_and_degrees(self):
        g = split_realization((2, 2), (1, 1))
        assert g is not None
        assert g.degrees == (2, 2, 1, 1)
        assert g.has_edge(0, 1)  # clique side
        assert not g.has_edge(2, 3)  # independent side

    def test_single_vertex_forms(self):
        assert split_realization((0,), ()) == LabeledGraph.empty(1)
        assert split_realization((), (0,)) == LabeledGraph.empty(1)

    @pytest.mark.parametrize(
        "p2,p1",
        [((0, 0), ()), ((), (1,)), ((0,), (1,)), ((1, 1), (1,)), ((1,), (1, 1))],
    )
    def test_unrealizable_pairs(self, p2, p1):
        assert split_realization(p2, p1) is None

    def test_splitted_sequence_validates(self):
        SplittedSequence((2, 2), (1, 1))
        with pytest.raises(ValueError):
            SplittedSequence((0, 0), ())
        with pytest.raises(ValueError):
            SplittedSequence((), (1,))
        with pytest.raises(ValueError):
            SplittedSequence((), ())

    def test_display(self):
        assert SplittedSequence((2, 2), (1, 1)).display() == "(2,2;1,1)"
        assert SplittedSequence((0,), ()).display() == "(0;)"
        assert SplittedSequence((), (0,)).display() == "(;0)"


class TestComposeSequences:
    def test_chain_reproduces_ten_vertex_sequence(self):
        inner = compose_sequences(SplittedSequence((3, 2), (1, 1, 1)), seq("0"))
        assert inner.terms == (4, 3, 2, 1, 1, 1)
        outer = compose_sequences(SplittedSequence((2, 2), (1, 1)), inner)
        assert outer == FIG6

    def test_lone_independent_vertex_appends_zero(self):
        q = seq("2,1,1")
        assert compose_sequences(SplittedSequence((), (0,)), q).terms == (2, 1, 1, 0)

    def test_lone_dominating_vertex(self):
        q = seq("2,1,1")
        got = compose_sequences(SplittedSequence((0,), ()), q)
        assert got.terms == (3, 3, 2, 2)


class TestComposeGraphs:
    def test_two_single_vertices_give_k2(self):
        k1 = LabeledGraph.empty(1)
        got = compose_graphs(k1, set(), {0}, k1)
        assert got == LabeledGraph.from_edges(2, [(0, 1)])

    def test_ten_vertex_composition_degrees(self):
        g0 = LabeledGraph.empty(1)
        s1 = SplittedSequence((3, 2), (1, 1, 1))
        g1 = s1.realization()
        c1 = compose_graphs(g1, set(s1.independent_vertices), set(s1.clique_vertices), g0)
        assert degree_sequence_of(c1).terms == (4, 3, 2, 1, 1, 1)
        s2 = SplittedSequence((2, 2), (1, 1))
        g2 = s2.realization()
        c2 = compose_graphs(g2, set(s2.independent_vertices), set(s2.clique_vertices), c1)
        assert degree_sequence_of(c2) == FIG6
        # positional realization of the composed sequence
        assert c2.degrees == FIG6.terms

    def test_degree_law_matches_sequence_composition(self):
        s = SplittedSequence((2, 2), (1, 1))
        for q_text in ("0", "1,1", "2,2,2"):
            q = seq(q_text)
            for qg in enumerate_realizations(q):
                composed = compose_graphs(
                    s.realization(),
                    set(s.independent_vertices),
                    set(s.clique_vertices),
                    qg,
                )
                assert degree_sequence_of(composed) == compose_sequences(s, q)

    def test_bad_partitions_rejected(self):
        g = split_realization((2, 2), (1, 1))
        k1 = LabeledGraph.empty(1)
        with pytest.raises(InvalidPartitionError):
            compose_graphs(g, {0, 1}, {2, 3}, k1)  # swapped roles
        with pytest.raises(InvalidPartitionError):
            compose_graphs(g, {2}, {0, 1}, k1)  # not a partition

    def test_associativity_on_sequences(self):
        p = SplittedSequence((2, 2), (1, 1))
        q = SplittedSequence((1,), (1,))
        r = seq("1,1")
        left = compose_sequences(p, compose_sequences(q, r))
        # p ∘ q treated as one splitted sequence: cliques merge into the
        # clique side, and q's independent degrees rise by |p2|
        pq = SplittedSequence((4, 4, 3), (3, 1, 1))
        assert pq.plain() == compose_sequences(p, q.plain())
        right = compose_sequences(pq, r)
        assert left == right


class TestDecompose:
    def test_ten_vertex_sequence(self):
        dec = decompose(FIG6)
        assert [c.display() for c in dec.components] == ["(2,2;1,1)", "(3,2;1,1,1)"]
        assert dec.tail.terms == (0,)
        assert dec.display() == "(2,2;1,1) ∘ (3,2;1,1,1) ∘ (0)"
        assert dec.recompose() == FIG6

    def test_indecomposable(self):
        dec = decompose(seq("1,1,1,1"))
        assert dec.is_trivial and dec.tail.terms == (1, 1, 1, 1)

    def test_threshold_pieces_are_single_terms(self):
        dec = decompose(seq("2,1,1"))
        assert all(len(c) == 1 for c in dec.components)
        assert len(dec.tail) == 1

    def test_round_trip_everywhere(self):
        for d in graphic_sequences_upto(6):
            assert decompose(d).recompose() == d

    def test_compose_then_decompose(self):
        p = SplittedSequence((2, 2), (1, 1))
        for q_text in ("0", "1,1", "2,1,1", "1,1,1,1"):
            q = seq(q_text)
            d = compose_sequences(p, q)
            dec = decompose(d)
            assert dec.components[0] == p
            assert dec.recompose() == d

    def test_not_graphic_rejected(self):
        with pytest.raises(NotGraphicError):
            decompose(seq("1,1,1"))


class TestThreshold:
    def test_examples(self):
        assert is_threshold(seq("2,1,1"))
        assert not is_threshold(seq("1,1,1,1"))
        assert is_threshold(seq("0"))

    def test_not_graphic_rejected(self):
        with pytest.raises(NotGraphicError):
            is_threshold(seq("1,1,1"))

    def test_agreement_with_unique_realization(self):
        for d in graphic_sequences_upto(6):
            assert is_threshold(d) == (len(enumerate_realizations(d)) == 1), d.terms


class TestCompleteRealizationGraph:
    def test_independent_spoke_family(self):
        witness = is_complete_realization_graph(seq("4,2,1,1,1,1"))
        assert witness is not None
        assert witness.order == 4 and witness.spokes == "independent"
        assert witness.prefix is None and witness.suffix is None

    def test_clique_spoke_family(self):
        witness = is_complete_realization_graph(seq("4,4,4,4,3,1"))
        assert witness is not None
        assert witness.order == 4 and witness.spokes == "clique"

    def test_negative_example(self):
        assert is_complete_realization_graph(seq("2,2,2,1,1")) is None

    def test_triangle_families_too_small(self):
        # K_3 realization graphs exist ((3,2,1,1,1) has three realizations)
        # but the decision targets complete graphs on at least 4 nodes
        assert is_complete_realization_graph(seq("3,2,1,1,1")) is None
        assert is_complete_realization_graph(seq("1,1,1,1")) is None

    def test_prefix_witness(self):
        d = compose_sequences(SplittedSequence((0,), ()), seq("4,2,1,1,1,1"))
        assert d.terms == (6, 5, 3, 2, 2, 2, 2)
        witness = is_complete_realization_graph(d)
        assert witness is not None and witness.order == 4
        assert witness.prefix is not None and witness.prefix.terms == (0,)
        assert witness.suffix is None

    def test_suffix_witness(self):
        alpha = SplittedSequence((4, 2), (1, 1, 1, 1))
        d = compose_sequences(alpha, seq("0"))
        assert d.terms == (5, 3, 2, 1, 1, 1, 1)
        witness = is_complete_realization_graph(d)
        assert witness is not None and witness.order == 4
        assert witness.prefix is None
        assert witness.suffix is not None and witness.suffix.terms == (0,)

    def test_witnessed_sequences_really_are_complete(self):
        from rgkit.realization_graph import build_realization_graph

        for text in ("6,5,3,2,2,2,2", "5,3,2,1,1,1,1", "4,2,1,1,1,1", "4,4,4,4,3,1"):
            d = seq(text)
            witness = is_complete_realization_graph(d)
            assert witness is not None
            rg = build_realization_graph(d)
            assert rg.is_complete and rg.node_count == witness.order
