"""Dial configurations: detection in a single realization, verification
across a family of realizations, the induced clique, and matrogenicity.

A size-n dial configuration lives on n + 2 vertices: two hubs u, v and n
spokes.  The needle spoke is adjacent to u and not to v; every other spoke
is adjacent to v and not to u — n required edges and n required non-edges.
The hub pair and spoke-spoke pairs are unconstrained.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AlternatingFourCycle, LabeledGraph, pair_list, two_switch
from .errors import InvalidEmbeddingError, MixedSequenceError


@dataclass(frozen=True)
class DialEmbedding:
    """Vertices of one size-n dial configuration inside a host graph."""

    hub_u: int
    hub_v: int
    needle_spoke: int
    other_spokes: tuple[int, ...]

    def __post_init__(self):
        spokes = tuple(sorted(self.other_spokes))
        object.__setattr__(self, "other_spokes", spokes)
        verts = (self.hub_u, self.hub_v, self.needle_spoke) + spokes
        if len(set(verts)) != len(verts):
            raise ValueError(f"embedding vertices must be distinct: {verts}")
        if min(verts) < 0:
            raise ValueError(f"negative vertex in {verts}")

    @property
    def size_n(self) -> int:
        return 1 + len(self.other_spokes)

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.hub_u, self.hub_v, self.needle_spoke) + self.other_spokes

    def valid_in(self, g: LabeledGraph) -> bool:
        if max(self.vertices) >= g.vertex_count:
            return False
        if not g.has_edge(self.hub_u, self.needle_spoke):
            return False
        if g.has_edge(self.hub_v, self.needle_spoke):
            return False
        for s in self.other_spokes:
            if not g.has_edge(self.hub_v, s) or g.has_edge(self.hub_u, s):
                return False
        return True


def find_dial_embedding(g: LabeledGraph, n: int) -> DialEmbedding | None:
    """Lexicographically least size-n dial embedding of g, or None.

    Spokes are interchangeable, so for a fixed hub pair (u, v) it suffices
    to count the vertices adjacent to v but not u (spoke pool) and check a
    needle (adjacent to u but not v) exists; no injective search over spoke
    orderings is needed.
    """
    if n < 2:
        raise ValueError(f"dial size must be at least 2, got {n}")
    nv = g.vertex_count
    if nv < n + 2:
        return None
    adj = g.adjacency_masks
    for u in range(nv):
        au = adj[u]
        for v in range(nv):
            if v == u:
                continue
            needles = au & ~adj[v] & ~(1 << v)
            if not needles:
                continue
            pool = adj[v] & ~au & ~(1 << u)
            if pool.bit_count() < n - 1:
                continue
            needle = (needles & -needles).bit_length() - 1
            spokes = []
            while len(spokes) < n - 1:
                low = pool & -pool
                spokes.append(low.bit_length() - 1)
                pool ^= low
            return DialEmbedding(u, v, needle, tuple(spokes))
    return None


def max_dial_size(g: LabeledGraph) -> int:
    """Largest n with a size-n dial embedding in g, or 0 when none (n >= 2).

    Closed form: over hub pairs (u, v) with a needle available, the best n
    is 1 + |{x : v ~ x, u !~ x, x not a hub}|.
    """
    nv = g.vertex_count
    best = 0
    adj = g.adjacency_masks
    for u in range(nv):
        au = adj[u]
        for v in range(nv):
            if v == u:
                continue
            if not au & ~adj[v] & ~(1 << v):
                continue
            pool = adj[v] & ~au & ~(1 << u)
            if pool:
                size = 1 + pool.bit_count()
                if size > best:
                    best = size
    return best


@dataclass(frozen=True)
class Dial:
    """A dial with respect to a family of realizations.

    `pairs` is the set of vertex pairs whose adjacency status differs across
    the family, `vertices` their union; `needles[i]` is the one spoke the
    hub u is adjacent to in realization i.
    """

    realizations: tuple[LabeledGraph, ...]
    vertices: frozenset[int]
    pairs: frozenset[tuple[int, int]]
    hub_u: int
    hub_v: int
    needles: tuple[int, ...]


def verify_dial(realizations) -> Dial | None:
    """Check the three dial conditions over a family of realizations.

    (a) collect the pairs whose status differs across the family;
    (b) two hubs u, v must cover every differing pair with no pair left over;
    (c) in each realization u has exactly one neighbor (the needle) among
        the non-hub dial vertices, and v is adjacent to exactly the rest.

    Returns the dial (lexicographically least hub assignment) or None.

    Raises:
        MixedSequenceError: if the graphs disagree on vertex count or
            positional degrees.
        ValueError: for fewer than two or non-distinct realizations.
    """
    family = tuple(realizations)
    if len(family) < 2:
        raise ValueError("a dial needs at least two realizations")
    nv = family[0].vertex_count
    degs = family[0].degrees
    for g in family[1:]:
        if g.vertex_count != nv or g.degrees != degs:
            raise MixedSequenceError("realizations must share one degree sequence")
    if len(set(family)) != len(family):
        raise ValueError("realizations must be pairwise distinct")

    union = 0
    inter = (1 << (nv * (nv - 1) // 2)) - 1
    for g in family:
        union |= g.edge_mask
        inter &= g.edge_mask
    pairs_all = pair_list(nv)
    diff = union & ~inter
    changing: set[tuple[int, int]] = set()
    while diff:
        low = diff & -diff
        changing.add(pairs_all[low.bit_length() - 1])
        diff ^= low
    support = sorted({v for p in changing for v in p})

    # hub candidates: with |W| >= 5 the hubs are the only vertices on more
    # than two changing pairs; the degenerate |W| = 4 dial needs all orderings
    coverage = {v: sum(v in p for p in changing) for v in support}
    if len(support) >= 5:
        hubs = [v for v in support if coverage[v] == len(support) - 2]
        if len(hubs) != 2:
            return None
        candidates = [(hubs[0], hubs[1]), (hubs[1], hubs[0])]
        candidates.sort()
    else:
        candidates = [(u, v) for u in support for v in support if u != v]

    for u, v in candidates:
        rest = [w for w in support if w not in (u, v)]
        expected = {tuple(sorted((u, w))) for w in rest}
        expected |= {tuple(sorted((v, w))) for w in rest}
        if expected != changing:
            continue
        needles = []
        ok = True
        for g in family:
            au, av = g.adjacency_masks[u], g.adjacency_masks[v]
            u_neigh = [w for w in rest if au >> w & 1]
            if len(u_neigh) != 1:
                ok = False
                break
            w_i = u_neigh[0]
            if av >> w_i & 1:
                ok = False
                break
            if any(not (av >> w & 1) for w in rest if w != w_i):
                ok = False
                break
            needles.append(w_i)
        if ok:
            return Dial(
                realizations=family,
                vertices=frozenset(support),
                pairs=frozenset(changing),
                hub_u=u,
                hub_v=v,
                needles=tuple(needles),
            )
    return None


def dial_clique(g: LabeledGraph, emb: DialEmbedding) -> list[LabeledGraph]:
    """The size-n clique generated by rotating the needle to each spoke.

    Returns g itself followed by one 2-switch result per other spoke; the
    results are checked pairwise adjacent (exactly four differing pairs)
    and distinct.

    Raises:
        InvalidEmbeddingError: if emb is not a dial embedding of g.
    """
    if not emb.valid_in(g):
        raise InvalidEmbeddingError(f"{emb} is not a dial embedding of the graph")
    out = [g]
    for s in emb.other_spokes:
        cyc = AlternatingFourCycle(emb.hub_u, emb.needle_spoke, emb.hub_v, s)
        out.append(two_switch(g, cyc))
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            if (out[i].edge_mask ^ out[j].edge_mask).bit_count() != 4:
                raise RuntimeError("dial rotation produced non-adjacent realizations")
    return out


def is_matrogenic(g: LabeledGraph) -> bool:
    """True iff no five vertices of g host a size-3 dial configuration."""
    return find_dial_embedding(g, 3) is None
