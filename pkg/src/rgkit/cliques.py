"""Clique membership and clique number in the realization graph, the
edge-overlap system for four pairwise-adjacent realizations, and the exact
brute-force clique oracle everything is cross-validated against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import (
    AlternatingFourCycle,
    LabeledGraph,
    alternating_four_cycles,
    degree_sequence_of,
)
from .dial import DialEmbedding, find_dial_embedding, max_dial_size
from .errors import MixedSequenceError
from .realization import DEFAULT_LIMIT
from .realization_graph import RealizationGraph, build_realization_graph

# nonempty subsets of {1,2,3,4} in display column order: singles, pairs
# (lexicographic), triples (reverse lexicographic), then the full set
SUBSET_COLUMNS: tuple[frozenset[int], ...] = tuple(
    frozenset(s)
    for s in (
        {1}, {2}, {3}, {4},
        {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
        {2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3},
        {1, 2, 3, 4},
    )
)

COLUMN_NAMES: tuple[str, ...] = tuple(
    "s" + "".join(str(i) for i in sorted(s)) for s in SUBSET_COLUMNS
)


@dataclass(frozen=True)
class OverlapSolution:
    """One consistent assignment of the edge-overlap counts s_I.

    `cells` holds the 14 constant values (subsets of size 1..3 in column
    order); the full-intersection count is symbolic: s_1234 = m - deficit.
    """

    cells: tuple[int, ...]
    deficit: int

    @property
    def values(self) -> dict[frozenset[int], tuple[int, int]]:
        """Map I → (coefficient of m, constant)."""
        out = {SUBSET_COLUMNS[k]: (0, self.cells[k]) for k in range(14)}
        out[SUBSET_COLUMNS[14]] = (1, -self.deficit)
        return out

    def cell(self, subset) -> int:
        return self.cells[SUBSET_COLUMNS.index(frozenset(subset))]

    def row_strings(self) -> tuple[str, ...]:
        return tuple(str(c) for c in self.cells) + (f"m-{self.deficit}",)


def solve_overlap_system() -> list[OverlapSolution]:
    """All {0,1} solutions of the overlap equations for a 4-clique.

    Four realizations that are pairwise one 2-switch apart satisfy two
    groups of linear constraints on the Venn-region counts s_I: each
    realization has m edges, and each ordered pair differs in exactly two.
    Enumerating all 2^14 assignments of the non-full regions (each is 0 or 1
    in any solution) and solving for s_1234 symbolically yields exactly ten
    rows, returned in table display order.
    """
    singles = list(range(4))
    memberships = [
        [k for k in range(14) if i + 1 in SUBSET_COLUMNS[k]] for i in singles
    ]
    pair_eqs = []
    for i in range(4):
        for j in range(i + 1, 4):
            pair_eqs.append(
                [
                    k
                    for k in range(14)
                    if i + 1 in SUBSET_COLUMNS[k] and j + 1 not in SUBSET_COLUMNS[k]
                ]
            )
    solutions = []
    for bits in range(1 << 14):
        cells = tuple(bits >> k & 1 for k in range(14))
        if any(sum(cells[k] for k in eq) != 2 for eq in pair_eqs):
            continue
        totals = [sum(cells[k] for k in memberships[i]) for i in singles]
        if len(set(totals)) != 1:
            continue
        solutions.append(OverlapSolution(cells, totals[0]))

    def table_key(sol: OverlapSolution):
        ones = sum(sol.cells[:4])
        if ones == 3:
            singled = sol.cells[:4].index(0)
        elif ones == 1:
            singled = sol.cells[:4].index(1)
        else:
            singled = 0
        return (sol.deficit, ones, singled)

    solutions.sort(key=table_key)
    return solutions


def filter_overlap_solutions(sols: Sequence[OverlapSolution]) -> list[OverlapSolution]:
    """Drop rows where two pair-regions share a realization index.

    Two edges private to overlapping pairs of realizations cannot both be
    toggled consistently, so s_{ij} + s_{ik} <= 1 for distinct i, j, k;
    exactly one row survives.
    """
    out = []
    for sol in sols:
        ok = True
        for i in range(1, 5):
            others = [j for j in range(1, 5) if j != i]
            for j, k in combinations(others, 2):
                if sol.cell({i, j}) + sol.cell({i, k}) > 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(sol)
    return out


@dataclass(frozen=True)
class OverlapCounts:
    """Measured Venn-region sizes for four concrete realizations."""

    counts: tuple[int, ...]
    edge_count: int

    def cell(self, subset) -> int:
        return self.counts[SUBSET_COLUMNS.index(frozenset(subset))]

    def matches(self, sol: OverlapSolution) -> bool:
        """Do the measured counts equal the solution (with m = edge_count)?"""
        if any(self.counts[k] != sol.cells[k] for k in range(14)):
            return False
        return self.counts[14] == self.edge_count - sol.deficit


def measure_overlaps(realizations: Sequence[LabeledGraph]) -> OverlapCounts:
    """Measure the 15 region sizes of the edge-set Venn diagram of exactly
    four realizations of one degree sequence.

    Raises:
        MixedSequenceError: if vertex counts or positional degrees differ.
        ValueError: unless the four realizations are pairwise distinct.
    """
    family = tuple(realizations)
    if len(family) != 4:
        raise ValueError(f"need exactly 4 realizations, got {len(family)}")
    nv = family[0].vertex_count
    degs = family[0].degrees
    for g in family[1:]:
        if g.vertex_count != nv or g.degrees != degs:
            raise MixedSequenceError("realizations must share one degree sequence")
    if len(set(family)) != 4:
        raise ValueError("realizations must be pairwise distinct")
    region: dict[frozenset[int], int] = {s: 0 for s in SUBSET_COLUMNS}
    all_edges = set().union(*(g.edges for g in family))
    for e in all_edges:
        owners = frozenset(i + 1 for i, g in enumerate(family) if e in g.edges)
        region[owners] += 1
    return OverlapCounts(
        counts=tuple(region[s] for s in SUBSET_COLUMNS),
        edge_count=family[0].edge_count,
    )


@dataclass(frozen=True)
class TriangleWitness:
    """Why a realization lies on a triangle: an induced 2K2 or C4 (the four
    vertices) or a size-3 dial configuration (its five vertices)."""

    kind: str  # "2K2" | "C4" | "D3"
    vertices: tuple[int, ...]


def _induced_four_pattern(g: LabeledGraph) -> TriangleWitness | None:
    # orderings of a 4-subset {a<b<c<d} into two disjoint pairs
    splits = ((0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2))
    for quad in combinations(range(g.vertex_count), 4):
        bits = [
            g.has_edge(quad[i], quad[j]) for i, j in combinations(range(4), 2)
        ]
        count = sum(bits)
        if count == 2:
            for p, q, r, s in splits:
                if (
                    g.has_edge(quad[p], quad[q])
                    and g.has_edge(quad[r], quad[s])
                ):
                    return TriangleWitness("2K2", quad)
        elif count == 4:
            # a chordless 4-cycle misses exactly one disjoint pair split
            for p, q, r, s in splits:
                if (
                    not g.has_edge(quad[p], quad[q])
                    and not g.has_edge(quad[r], quad[s])
                ):
                    return TriangleWitness("C4", quad)
    return None


@dataclass(frozen=True)
class CliqueMembership:
    """Decision plus certificate for membership in a size-n clique."""

    size: int
    member: bool
    witness: AlternatingFourCycle | TriangleWitness | DialEmbedding | None

    def __bool__(self) -> bool:
        return self.member


def in_clique(g: LabeledGraph, n: int) -> CliqueMembership:
    """Does g lie in a clique of size n of its realization graph?

    n = 2: some alternating 4-cycle exists (g has a neighbor at all);
    n = 3: g has an induced 2K2 or C4, or a size-3 dial configuration;
    n >= 4: g contains a size-n dial configuration.  A witness accompanies
    every positive answer.
    """
    if n < 2:
        raise ValueError(f"clique size must be at least 2, got {n}")
    if n == 2:
        cycles = alternating_four_cycles(g)
        if cycles:
            return CliqueMembership(2, True, cycles[0])
        return CliqueMembership(2, False, None)
    if n == 3:
        induced = _induced_four_pattern(g)
        if induced is not None:
            return CliqueMembership(3, True, induced)
        emb = find_dial_embedding(g, 3)
        if emb is not None:
            return CliqueMembership(3, True, TriangleWitness("D3", emb.vertices))
        return CliqueMembership(3, False, None)
    emb = find_dial_embedding(g, n)
    return CliqueMembership(n, emb is not None, emb)


@dataclass(frozen=True)
class CliqueReport:
    """Predicted clique number of a realization, optionally cross-checked
    against the exact oracle on the explicitly built realization graph."""

    realization: LabeledGraph
    clique_number_predicted: int
    witness: DialEmbedding | TriangleWitness | None
    clique_number_oracle: int | None = None


def _sorted_degree_presentation(g: LabeledGraph) -> LabeledGraph:
    """Relabel so the positional degree vector is nonincreasing (stable).

    The relabeling is an isomorphism between the realization graphs of the
    original and sorted degree vectors, so clique membership through the
    node is unchanged.
    """
    order = sorted(range(g.vertex_count), key=lambda v: (-g.degree(v), v))
    new_label = {old: i for i, old in enumerate(order)}
    return LabeledGraph.from_edges(
        g.vertex_count, ((new_label[a], new_label[b]) for a, b in g.edges)
    )


def clique_number_of_realization(
    g: LabeledGraph, verify: bool = False, limit: int = DEFAULT_LIMIT
) -> CliqueReport:
    """Largest n such that g lies in an n-clique of its realization graph.

    The prediction combines the dial closed form (n >= 4) with the triangle
    predicate (n = 3) and the existence of any alternating 4-cycle (n = 2).
    With verify=True the realization graph is built and the exact clique
    number through g is reported alongside (g is first relabeled into the
    sorted-degree presentation, which does not affect clique membership).
    """
    best = max_dial_size(g)
    witness: DialEmbedding | TriangleWitness | None
    if best >= 4:
        predicted = best
        witness = find_dial_embedding(g, best)
    else:
        three = in_clique(g, 3)
        if three.member:
            predicted = 3
            witness = three.witness  # type: ignore[assignment]
        elif alternating_four_cycles(g):
            predicted = 2
            witness = None
        else:
            predicted = 1
            witness = None
    oracle = None
    if verify:
        node = _sorted_degree_presentation(g)
        rg = build_realization_graph(degree_sequence_of(g), limit)
        oracle = oracle_clique_number(rg, rg.index_of(node))
    return CliqueReport(g, predicted, witness, oracle)


def oracle_clique_number(rg: RealizationGraph, node: int) -> int:
    """Exact maximum clique size over cliques containing the node.

    Backed by an exhaustive maximal-clique search on the realization graph;
    fully independent of the dial-based prediction path.
    """
    return rg.clique_numbers[node]


def maximal_cliques(rg: RealizationGraph) -> list[tuple[int, ...]]:
    """All maximal cliques of the realization graph, sorted.

    Pivoted Bron–Kerbosch over node-index bitsets; intended for desk-scale
    oracle sweeps, not huge graphs.
    """
    adj = rg.adjacency_masks
    n = rg.node_count
    out: list[tuple[int, ...]] = []

    def expand(members: list[int], p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(members))
            return
        both = p | x
        pivot, pivot_score = -1, -1
        t = both
        while t:
            low = t & -t
            u = low.bit_length() - 1
            score = (p & adj[u]).bit_count()
            if score > pivot_score:
                pivot, pivot_score = u, score
            t ^= low
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            members.append(v)
            expand(members, p & adj[v], x & adj[v])
            members.pop()
            p ^= low
            x |= low
            cand ^= low

    if n:
        expand([], (1 << n) - 1, 0)
    return sorted(tuple(sorted(c)) for c in out)


def cliques_of_size_at_least(rg: RealizationGraph, k: int) -> list[tuple[int, ...]]:
    """Every clique of the realization graph with at least k nodes.

    Expands subsets of the maximal cliques (every clique extends to a
    maximal one) and deduplicates.
    """
    found: set[tuple[int, ...]] = set()
    for maximal in maximal_cliques(rg):
        if len(maximal) < k:
            continue
        for size in range(k, len(maximal) + 1):
            found.update(combinations(maximal, size))
    return sorted(found)
