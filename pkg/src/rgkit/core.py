"""Core types: degree sequences, labeled graphs, alternating 4-cycles, 2-switches.

All types are immutable after construction and safe to share across threads.
Vertices are 0-based internally; every external format (CLI text, JSON)
uses 1-based labels v1..vn.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InvalidCycleError

_TOKEN_RE = re.compile(r"(\d+)(?:\^\(?(\d+)\)?)?")


@dataclass(frozen=True)
class DegreeSequence:
    """A nonincreasing sequence of nonnegative vertex degrees.

    The constructor sorts, so the original term order is not preserved.
    Every term must be at most n - 1 for a sequence of length n; whether the
    sequence is actually graphic is a separate question (see
    :func:`rgkit.realization.is_graphic`).
    """

    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(sorted((int(t) for t in self.terms), reverse=True))
        if not terms:
            raise ValueError("a degree sequence needs at least one term")
        if terms[-1] < 0:
            raise ValueError(f"negative degree in {terms}")
        if terms[0] > len(terms) - 1:
            raise ValueError(
                f"degree {terms[0]} impossible on {len(terms)} vertices"
            )
        object.__setattr__(self, "terms", terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __getitem__(self, i: int) -> int:
        return self.terms[i]

    def complement(self) -> "DegreeSequence":
        """The degree sequence realized by complements: (n-1-d_n, ..., n-1-d_1)."""
        n = len(self.terms)
        return DegreeSequence(tuple(n - 1 - t for t in self.terms))

    def display(self) -> str:
        """Run-length form, e.g. (6,4^(6)) for (6,4,4,4,4,4,4)."""
        parts = []
        i = 0
        while i < len(self.terms):
            j = i
            while j < len(self.terms) and self.terms[j] == self.terms[i]:
                j += 1
            if j - i == 1:
                parts.append(str(self.terms[i]))
            else:
                parts.append(f"{self.terms[i]}^({j - i})")
            i = j
        return "(" + ",".join(parts) + ")"

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse "2,2,2,1,1" or run-length shorthand like "6,4^6" / "6,4^(6)"."""
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        terms: list[int] = []
        for tok in body.split(","):
            tok = tok.strip()
            m = _TOKEN_RE.fullmatch(tok)
            if not m:
                raise ValueError(f"bad degree token {tok!r}")
            value = int(m.group(1))
            repeat = int(m.group(2)) if m.group(2) else 1
            if repeat < 1:
                raise ValueError(f"bad repeat count in token {tok!r}")
            terms.extend([value] * repeat)
        return cls(tuple(terms))


def pair_list(n: int) -> list[tuple[int, int]]:
    """All unordered vertex pairs of an n-vertex graph in lexicographic order."""
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def pair_index(n: int, a: int, b: int) -> int:
    """Position of the pair {a,b} in pair_list(n); a < b required."""
    return a * n - a * (a + 1) // 2 + (b - a - 1)


@dataclass(frozen=True)
class LabeledGraph:
    """A simple graph on vertices 0..vertex_count-1.

    The canonical encoding is the sorted tuple of (min,max) edge pairs; two
    graphs are equal exactly when their vertex counts and encodings agree.
    Adjacency is additionally kept as one bitmask per vertex so membership
    tests are O(1).
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise ValueError("graphs need at least one vertex")
        norm = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) outside 0..{n - 1}")
            norm.add((a, b) if a < b else (b, a))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "LabeledGraph":
        return cls(vertex_count, frozenset(tuple(e) for e in edges))

    @classmethod
    def from_edge_mask(cls, vertex_count: int, mask: int) -> "LabeledGraph":
        pairs = pair_list(vertex_count)
        edges = set()
        while mask:
            low = mask & -mask
            edges.add(pairs[low.bit_length() - 1])
            mask ^= low
        return cls(vertex_count, frozenset(edges))

    @classmethod
    def complete(cls, vertex_count: int) -> "LabeledGraph":
        return cls(vertex_count, frozenset(pair_list(vertex_count)))

    @classmethod
    def empty(cls, vertex_count: int) -> "LabeledGraph":
        return cls(vertex_count, frozenset())

    @cached_property
    def encoding(self) -> tuple[tuple[int, int], ...]:
        """Canonical identity of the graph: the sorted edge list."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    @cached_property
    def edge_mask(self) -> int:
        """Edge set as a bitmask over pair_list(vertex_count) positions."""
        n = self.vertex_count
        mask = 0
        for a, b in self.edges:
            mask |= 1 << pair_index(n, a, b)
        return mask

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Positional degree vector (degree of v_i at index i)."""
        return tuple(m.bit_count() for m in self.adjacency_masks)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency_masks[a] >> b & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        mask = self.adjacency_masks[v]
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return tuple(out)

    def degree(self, v: int) -> int:
        return self.degrees[v]


@dataclass(frozen=True, order=True)
class AlternatingFourCycle:
    """An ordered witness [u,v:w,x]: uv and wx are edges, ux and vw are not.

    The diagonal pairs {u,w} and {v,x} are unconstrained.  Of the four
    equivalent orderings [u,v:w,x], [w,x:u,v], [v,u:x,w], [x,w:v,u] the
    constructor stores the lexicographically least, so equal cycles compare
    equal.
    """

    u: int
    v: int
    w: int
    x: int

    def __post_init__(self):
        t = (self.u, self.v, self.w, self.x)
        if len(set(t)) != 4:
            raise ValueError(f"cycle vertices must be distinct, got {t}")
        if min(t) < 0:
            raise ValueError(f"negative vertex in {t}")
        u, v, w, x = min(
            (t, (t[2], t[3], t[0], t[1]), (t[1], t[0], t[3], t[2]), (t[3], t[2], t[1], t[0]))
        )
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "x", x)

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.u, self.v, self.w, self.x)

    def residual(self) -> "AlternatingFourCycle":
        """The alternating 4-cycle [v,w:x,u] left behind after the 2-switch."""
        return AlternatingFourCycle(self.v, self.w, self.x, self.u)

    def valid_in(self, g: LabeledGraph) -> bool:
        if max(self.vertices) >= g.vertex_count:
            return False
        return (
            g.has_edge(self.u, self.v)
            and g.has_edge(self.w, self.x)
            and not g.has_edge(self.u, self.x)
            and not g.has_edge(self.v, self.w)
        )


def degree_sequence_of(g: LabeledGraph) -> DegreeSequence:
    """The multiset of vertex degrees of g, sorted nonincreasing."""
    return DegreeSequence(g.degrees)


def complement(g: LabeledGraph) -> LabeledGraph:
    """Same vertices; the edge set is exactly the non-edges of g."""
    edges = frozenset(p for p in pair_list(g.vertex_count) if p not in g.edges)
    return LabeledGraph(g.vertex_count, edges)


def alternating_four_cycles(g: LabeledGraph) -> list[AlternatingFourCycle]:
    """All canonical alternating 4-cycles of g, in lexicographic order.

    Graphs on fewer than 4 vertices have none; an empty list is returned,
    not an error.
    """
    found: set[AlternatingFourCycle] = set()
    enc = g.encoding
    for (a, b), (c, d) in combinations(enc, 2):
        if a in (c, d) or b in (c, d):
            continue
        # orientation [a,b:c,d] needs non-edges {a,d}, {b,c}
        if not g.has_edge(a, d) and not g.has_edge(b, c):
            found.add(AlternatingFourCycle(a, b, c, d))
        # orientation [a,b:d,c] needs non-edges {a,c}, {b,d}
        if not g.has_edge(a, c) and not g.has_edge(b, d):
            found.add(AlternatingFourCycle(a, b, d, c))
    return sorted(found)


def two_switch(g: LabeledGraph, cycle: AlternatingFourCycle) -> LabeledGraph:
    """Delete edges uv, wx and add edges ux, vw along the alternating 4-cycle.

    Degrees are preserved, and [v,w:x,u] is an alternating 4-cycle of the
    result, so the operation is reversible.

    Raises:
        InvalidCycleError: if the cycle's edge/non-edge pattern is absent.
    """
    if not cycle.valid_in(g):
        raise InvalidCycleError(f"{cycle} is not an alternating 4-cycle of the graph")
    u, v, w, x = cycle.vertices
    edges = set(g.edges)
    edges.discard((min(u, v), max(u, v)))
    edges.discard((min(w, x), max(w, x)))
    edges.add((min(u, x), max(u, x)))
    edges.add((min(v, w), max(v, w)))
    return LabeledGraph(g.vertex_count, frozenset(edges))


def graph_to_json_dict(g: LabeledGraph) -> dict:
    """Interchange form: {"n": ..., "edges": [[a,b], ...]} with 1-based labels."""
    return {"n": g.vertex_count, "edges": [[a + 1, b + 1] for a, b in g.encoding]}


def graph_from_json_dict(data: dict) -> LabeledGraph:
    """Parse the JSON interchange form produced by graph_to_json_dict."""
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValueError('graph JSON must have keys "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f'"n" must be a positive integer, got {n!r}')
    edges = set()
    for e in data["edges"]:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ValueError(f"bad edge entry {e!r}")
        a, b = e
        if not (isinstance(a, int) and isinstance(b, int)):
            raise ValueError(f"bad edge entry {e!r}")
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"edge {e!r} outside 1..{n}")
        edges.add((a - 1, b - 1))
    return LabeledGraph.from_edges(n, edges)
