"""Splitted sequences, the composition operator, canonical (Tyshkevich)
decomposition, threshold detection, and the complete-realization-graph
decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ._backend.pure import graphic_residual
from .core import DegreeSequence, LabeledGraph
from .errors import InvalidPartitionError, NotGraphicError
from .realization import is_graphic


def split_realization(
    clique_part: tuple[int, ...], independent_part: tuple[int, ...]
) -> LabeledGraph | None:
    """A split graph realizing the splitted sequence (clique_part; independent_part).

    Vertices 0..a-1 form the clique with degrees clique_part, vertices
    a..a+b-1 the independent set with degrees independent_part.  Searches
    bipartite cross-edge patterns exhaustively (lexicographically first
    witness), cutting branches whose residual cross-degrees fail the
    Gale–Ryser condition.  Returns None when no split graph fits.
    """
    a, b = len(clique_part), len(independent_part)
    if a + b == 0:
        return None
    cross = [p - (a - 1) for p in clique_part]
    caps = list(independent_part)
    if any(c < 0 or c > b for c in cross):
        return None
    if any(c < 0 or c > a for c in caps):
        return None
    if sum(cross) != sum(caps):
        return None

    def feasible(row_degrees: list[int], col_caps: list[int]) -> bool:
        rows = sorted(row_degrees, reverse=True)
        total = 0
        for k in range(1, len(rows) + 1):
            total += rows[k - 1]
            if total > sum(min(c, k) for c in col_caps):
                return False
        return True

    chosen: list[tuple[int, ...]] = []

    def assign(i: int, caps_left: list[int]) -> bool:
        if i == a:
            return all(c == 0 for c in caps_left)
        avail = [j for j in range(b) if caps_left[j] > 0]
        if len(avail) < cross[i]:
            return False
        for pick in combinations(avail, cross[i]):
            for j in pick:
                caps_left[j] -= 1
            if feasible(cross[i + 1 :], caps_left) and assign(i + 1, caps_left):
                chosen.append(pick)
                return True
            for j in pick:
                caps_left[j] += 1
        return False

    if not assign(0, caps):
        return None
    edges = set(combinations(range(a), 2))
    # assign() appended deepest-first
    for i, pick in enumerate(reversed(chosen)):
        for j in pick:
            edges.add((i, a + j))
    return LabeledGraph.from_edges(a + b, edges)


@dataclass(frozen=True)
class SplittedSequence:
    """Degree sequence of a split graph, with the clique/independent split fixed.

    Written (p2; p1): clique_part holds the clique degrees, independent_part
    the independent-set degrees, each nonincreasing.  Construction fails
    unless some split graph actually realizes the pair.
    """

    clique_part: tuple[int, ...]
    independent_part: tuple[int, ...]

    def __post_init__(self):
        p2 = tuple(int(t) for t in self.clique_part)
        p1 = tuple(int(t) for t in self.independent_part)
        object.__setattr__(self, "clique_part", p2)
        object.__setattr__(self, "independent_part", p1)
        for part in (p2, p1):
            if any(t < 0 for t in part):
                raise ValueError(f"negative degree in {part}")
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                raise ValueError(f"{part} is not nonincreasing")
        if not p2 and not p1:
            raise ValueError("splitted sequence needs at least one term")
        if split_realization(p2, p1) is None:
            raise ValueError(f"({p2};{p1}) is not realizable by a split graph")

    def __len__(self) -> int:
        return len(self.clique_part) + len(self.independent_part)

    def plain(self) -> DegreeSequence:
        """The underlying plain degree sequence (clique degrees dominate)."""
        return DegreeSequence(self.clique_part + self.independent_part)

    def realization(self) -> LabeledGraph:
        g = split_realization(self.clique_part, self.independent_part)
        assert g is not None  # guaranteed by construction
        return g

    @property
    def clique_vertices(self) -> tuple[int, ...]:
        return tuple(range(len(self.clique_part)))

    @property
    def independent_vertices(self) -> tuple[int, ...]:
        a = len(self.clique_part)
        return tuple(range(a, a + len(self.independent_part)))

    def display(self) -> str:
        left = ",".join(str(t) for t in self.clique_part)
        right = ",".join(str(t) for t in self.independent_part)
        return f"({left};{right})"


def compose_sequences(p: SplittedSequence, q: DegreeSequence) -> DegreeSequence:
    """The composition p ∘ q.

    Concatenates the clique degrees raised by |q|, the q degrees raised by
    the clique size, and the independent degrees; the result is already
    nonincreasing.
    """
    return DegreeSequence(_compose_terms(p.clique_part, p.independent_part, q.terms))


def _compose_terms(
    p2: tuple[int, ...], p1: tuple[int, ...], q: tuple[int, ...]
) -> tuple[int, ...]:
    return (
        tuple(t + len(q) for t in p2)
        + tuple(t + len(p2) for t in q)
        + p1
    )


def compose_graphs(
    p_graph: LabeledGraph,
    independent_set: frozenset[int] | set[int],
    clique: frozenset[int] | set[int],
    q_graph: LabeledGraph,
) -> LabeledGraph:
    """Graph-level composition: disjoint union plus the complete join of
    q_graph onto the clique side of p_graph.

    The vertex layout of the result follows the composed sequence: clique
    vertices first (by decreasing degree), then q_graph's vertices, then the
    independent vertices (by decreasing degree), so the result is a
    positional realization of compose_sequences of the matching sequences.

    Raises:
        InvalidPartitionError: if (independent_set, clique) is not a
            partition of p_graph's vertices into an independent set and a
            clique.
    """
    v1 = frozenset(independent_set)
    v2 = frozenset(clique)
    n_p = p_graph.vertex_count
    if v1 & v2 or v1 | v2 != frozenset(range(n_p)):
        raise InvalidPartitionError("sets must partition the split graph's vertices")
    for x, y in combinations(sorted(v1), 2):
        if p_graph.has_edge(x, y):
            raise InvalidPartitionError(f"edge ({x},{y}) inside the independent set")
    for x, y in combinations(sorted(v2), 2):
        if not p_graph.has_edge(x, y):
            raise InvalidPartitionError(f"missing clique edge ({x},{y})")

    order_v2 = sorted(v2, key=lambda v: (-p_graph.degree(v), v))
    order_v1 = sorted(v1, key=lambda v: (-p_graph.degree(v), v))
    a, nq = len(order_v2), q_graph.vertex_count
    remap = {v: i for i, v in enumerate(order_v2)}
    remap.update({v: a + nq + i for i, v in enumerate(order_v1)})
    edges = {(remap[x], remap[y]) for x, y in p_graph.edges}
    edges.update((a + x, a + y) for x, y in q_graph.edges)
    edges.update((i, a + t) for i in range(a) for t in range(nq))
    return LabeledGraph.from_edges(n_p + nq, edges)


@dataclass(frozen=True)
class TyshkevichDecomposition:
    """Canonical factorization d = α_1 ∘ ... ∘ α_k ∘ d_0.

    Every α_i is an indecomposable splitted sequence and the tail d_0 is an
    indecomposable degree sequence; the factorization is unique, which the
    deterministic algorithm plus the recomposition check guarantee here.
    """

    components: tuple[SplittedSequence, ...]
    tail: DegreeSequence

    def recompose(self) -> DegreeSequence:
        seq = self.tail
        for comp in reversed(self.components):
            seq = compose_sequences(comp, seq)
        return seq

    @property
    def is_trivial(self) -> bool:
        return not self.components

    def pieces(self) -> tuple:
        return self.components + (self.tail,)

    def display(self) -> str:
        parts = [c.display() for c in self.components]
        parts.append("(" + ",".join(str(t) for t in self.tail.terms) + ")")
        return " ∘ ".join(parts)


def _smallest_outer_piece(cur: tuple[int, ...]):
    """The smallest valid outer splitted factor of cur, or None.

    Scans candidate shapes by total size, then by clique-part size
    descending.  A shape (a, b) is valid when de-augmenting yields a
    realizable splitted sequence, a graphic inner sequence, and the
    recomposition reproduces cur; uniqueness of the canonical decomposition
    means at most one shape per size can be valid for graphic input.
    """
    n = len(cur)
    for size in range(1, n):
        inner_len = n - size
        for a in range(size, -1, -1):
            b = size - a
            p2 = tuple(t - inner_len for t in cur[:a])
            if p2 and p2[-1] < 0:
                continue
            p1 = tuple(cur[n - b :]) if b else ()
            q = tuple(t - a for t in cur[a : n - b])
            if q and (q[-1] < 0 or q[0] > inner_len - 1):
                continue
            if not graphic_residual(q):
                continue
            if split_realization(p2, p1) is None:
                continue
            if _compose_terms(p2, p1, q) != cur:
                continue
            return SplittedSequence(p2, p1), q
    return None


def decompose(d: DegreeSequence) -> TyshkevichDecomposition:
    """The canonical decomposition of d into indecomposable pieces.

    Raises:
        NotGraphicError: if d is not graphic.
    """
    if not is_graphic(d):
        raise NotGraphicError(f"{d.terms} is not graphic")
    components: list[SplittedSequence] = []
    cur = d.terms
    while True:
        found = _smallest_outer_piece(cur)
        if found is None:
            break
        piece, cur = found
        components.append(piece)
    result = TyshkevichDecomposition(tuple(components), DegreeSequence(cur))
    if result.recompose() != d:  # pragma: no cover - internal consistency tripwire
        raise RuntimeError(f"decomposition of {d.terms} failed to recompose")
    return result


def is_threshold(d: DegreeSequence) -> bool:
    """True iff d has exactly one labeled realization.

    Decided structurally: every piece of the canonical decomposition must be
    a single term, i.e. of the form (0), (0;), or (;0).
    """
    dec = decompose(d)
    return len(dec.tail) == 1 and all(len(c) == 1 for c in dec.components)


@dataclass(frozen=True)
class CompleteGraphWitness:
    """Witness that the realization graph is complete: d = t ∘ alpha ∘ t'.

    `order` is the clique order n >= 4, `spokes` records which of the two
    sequence families alpha belongs to ("independent" for (n,2,1^(n)),
    "clique" for (n^(n),n-1,1)); `prefix`/`suffix` are the threshold
    sequences t and t', or None when empty.
    """

    order: int
    spokes: str
    alpha: DegreeSequence
    prefix: DegreeSequence | None
    suffix: DegreeSequence | None


def _family_of(terms: tuple[int, ...]) -> tuple[int, str] | None:
    n = len(terms) - 2
    if n < 4:
        return None
    if terms == (n, 2) + (1,) * n:
        return n, "independent"
    if terms == (n,) * n + (n - 1, 1):
        return n, "clique"
    return None


def _compose_chain(splitted: list[SplittedSequence], tail: DegreeSequence | None) -> DegreeSequence:
    if tail is None:
        seq = splitted[-1].plain()
        splitted = splitted[:-1]
    else:
        seq = tail
    for piece in reversed(splitted):
        seq = compose_sequences(piece, seq)
    return seq


def is_complete_realization_graph(d: DegreeSequence) -> CompleteGraphWitness | None:
    """Decide whether the realization graph of d is a complete graph K_n, n >= 4.

    Structural test on the canonical decomposition: all pieces except
    exactly one must be single-term threshold pieces, and the exception must
    be one of the two families (n,2,1^(n)) or (n^(n),n-1,1).

    Raises:
        NotGraphicError: if d is not graphic.
    """
    dec = decompose(d)
    pieces = dec.pieces()
    big = [k for k, piece in enumerate(pieces) if len(piece) > 1]
    if len(big) != 1:
        return None
    k = big[0]
    exceptional = pieces[k]
    plain = exceptional.plain() if isinstance(exceptional, SplittedSequence) else exceptional
    family = _family_of(plain.terms)
    if family is None:
        return None
    order, spokes = family
    prefix = None
    if k > 0:
        prefix = _compose_chain(list(dec.components[:k]), None)
    suffix = None
    if k < len(pieces) - 1:
        suffix = _compose_chain(list(dec.components[k + 1 :]), dec.tail)
    return CompleteGraphWitness(order, spokes, plain, prefix, suffix)
