"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's own shortcuts: they scan
raw tuples, filter all 2^(n choose 2) graphs, or try every injective
embedding, so agreement with the library is meaningful evidence.
"""

from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import settings

import rgkit._backend as backend
from rgkit.core import AlternatingFourCycle, LabeledGraph, pair_list

settings.register_profile("rgkit", deadline=None, max_examples=60)
settings.load_profile("rgkit")


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    backend.active.warmup()


def all_graphs(n: int):
    """Every labeled graph on n vertices, as edge bitmasks."""
    return range(1 << (n * (n - 1) // 2))


def incidence_masks(n: int) -> list[int]:
    """incidence_masks(n)[v] marks the pair-list positions touching v."""
    inc = [0] * n
    for k, (a, b) in enumerate(pair_list(n)):
        inc[a] |= 1 << k
        inc[b] |= 1 << k
    return inc


def degree_vector_of_mask(mask: int, inc: list[int]) -> tuple[int, ...]:
    return tuple((mask & m).bit_count() for m in inc)


def realization_masks_by_filter(terms: tuple[int, ...]) -> set[int]:
    """Oracle: filter all graphs by the positional degree vector."""
    n = len(terms)
    inc = incidence_masks(n)
    return {
        mask
        for mask in all_graphs(n)
        if degree_vector_of_mask(mask, inc) == terms
    }


def bucket_all_degree_vectors(n: int) -> dict[tuple[int, ...], list[int]]:
    """Oracle: every graph on n vertices bucketed by positional degrees."""
    inc = incidence_masks(n)
    buckets: dict[tuple[int, ...], list[int]] = {}
    for mask in all_graphs(n):
        buckets.setdefault(degree_vector_of_mask(mask, inc), []).append(mask)
    return buckets


def naive_alternating_cycles(g: LabeledGraph) -> list[AlternatingFourCycle]:
    """Oracle: scan all ordered 4-tuples, quotient by the symmetry group."""
    found = set()
    for u, v, w, x in permutations(range(g.vertex_count), 4):
        if (
            g.has_edge(u, v)
            and g.has_edge(w, x)
            and not g.has_edge(u, x)
            and not g.has_edge(v, w)
        ):
            found.add(AlternatingFourCycle(u, v, w, x))
    return sorted(found)


def exhaustive_dial_embedding(g: LabeledGraph, n: int) -> bool:
    """Oracle: injective search for a size-n dial configuration."""
    nv = g.vertex_count
    if nv < n + 2:
        return False
    for u, v in permutations(range(nv), 2):
        rest = [w for w in range(nv) if w not in (u, v)]
        for needle in rest:
            if not g.has_edge(u, needle) or g.has_edge(v, needle):
                continue
            others = [w for w in rest if w != needle]
            for spokes in combinations(others, n - 1):
                if all(
                    g.has_edge(v, s) and not g.has_edge(u, s) for s in spokes
                ):
                    return True
    return False


def switch_neighbors(g: LabeledGraph) -> set[tuple[tuple[int, int], ...]]:
    """Oracle: encodings of every graph one 2-switch away from g."""
    from rgkit.core import alternating_four_cycles, two_switch

    return {two_switch(g, c).encoding for c in alternating_four_cycles(g)}
