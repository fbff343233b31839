"""Pure-Python reference kernels.

These implement the three hot loops — realization enumeration, pairwise
2-switch adjacency, and per-node clique numbers — with arbitrary-precision
integer bitmasks.  They are the fallback when numba is unavailable (or when
RGKIT_BACKEND=python) and the ground truth the JIT kernels are tested
against.
"""

from __future__ import annotations

from typing import Sequence

NAME = "python"


def graphic_residual(values: Sequence[int]) -> bool:
    """Erdős–Gallai test: can `values` be the degrees of some simple graph?

    Accepts any order; an empty multiset counts as graphic.
    """
    seq = sorted(values, reverse=True)
    m = len(seq)
    if m == 0:
        return True
    if seq[-1] < 0 or seq[0] > m - 1:
        return False
    if sum(seq) % 2:
        return False
    prefix = 0
    for k in range(1, m + 1):
        prefix += seq[k - 1]
        tail = sum(min(x, k) for x in seq[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def enumerate_realization_masks(degrees: Sequence[int], limit: int) -> tuple[list[int], bool]:
    """All labeled graphs whose positional degree vector equals `degrees`.

    Each result is an edge bitmask over pair-list positions (see
    core.pair_index).  Vertices are processed in label order: vertex i's
    remaining neighbors are chosen among higher-indexed vertices, and a
    branch is cut as soon as the residual degrees of the untouched suffix
    fail the Erdős–Gallai condition, so every surviving branch reaches at
    least one realization.

    Returns (masks, exceeded); when `exceeded` is true exactly `limit`
    masks were collected before stopping.
    """
    n = len(degrees)
    r = list(degrees)
    if not graphic_residual(r):
        return [], False
    if n == 1:
        return [0], False

    # bit position of pair (i,j) is offs[i] + j
    offs = [i * n - i * (i + 1) // 2 - i - 1 for i in range(n)]
    masks: list[int] = []
    state = {"exceeded": False}

    def walk(i: int, j: int, mask: int) -> None:
        if state["exceeded"]:
            return
        if i == n - 1:
            if len(masks) >= limit:
                state["exceeded"] = True
            else:
                masks.append(mask)
            return
        boundary = j == n - 1
        ni, nj = (i + 1, i + 2) if boundary else (i, j + 1)
        free = n - 1 - j  # candidates left after j
        if r[i] > 0 and r[j] > 0 and r[i] - 1 <= free:
            r[i] -= 1
            r[j] -= 1
            if not boundary or (r[i] == 0 and graphic_residual(r[i + 1 :])):
                walk(ni, nj, mask | (1 << (offs[i] + j)))
            r[i] += 1
            r[j] += 1
        if state["exceeded"]:
            return
        if r[i] <= free and (not boundary or graphic_residual(r[i + 1 :])):
            walk(ni, nj, mask)

    walk(0, 1, 0)
    return masks, state["exceeded"]


def two_switch_edges(masks: Sequence[int], n_bits: int) -> list[tuple[int, int]]:
    """Index pairs whose edge sets differ in exactly 4 places.

    For equal positional degree vectors a symmetric difference of size 4 is
    exactly the pattern produced by one 2-switch, so this is the adjacency
    relation of the realization graph.
    """
    del n_bits  # only the packed-word backend needs the width
    out: list[tuple[int, int]] = []
    count = len(masks)
    for a in range(count):
        ma = masks[a]
        for b in range(a + 1, count):
            if (ma ^ masks[b]).bit_count() == 4:
                out.append((a, b))
    return out


def clique_numbers(adjacency: Sequence[int]) -> list[int]:
    """Largest clique size through each node, exactly.

    Runs a pivoted Bron–Kerbosch enumeration of maximal cliques and records,
    per node, the largest maximal clique containing it; every clique extends
    to a maximal one, so this is the clique number through the node.
    """
    n = len(adjacency)
    best = [0] * n
    if n == 0:
        return best

    def expand(members: list[int], p: int, x: int) -> None:
        if p == 0 and x == 0:
            size = len(members)
            for v in members:
                if best[v] < size:
                    best[v] = size
            return
        both = p | x
        pivot, pivot_score = -1, -1
        t = both
        while t:
            low = t & -t
            u = low.bit_length() - 1
            score = (p & adjacency[u]).bit_count()
            if score > pivot_score:
                pivot, pivot_score = u, score
            t ^= low
        cand = p & ~adjacency[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            members.append(v)
            expand(members, p & adjacency[v], x & adjacency[v])
            members.pop()
            p ^= low
            x |= low
            cand ^= low

    expand([], (1 << n) - 1, 0)
    return best


def warmup() -> None:
    """No-op; mirrors the JIT backend's compile warmup."""
