"""Numba-compiled kernels mirroring the pure backend's contracts.

Bitmasks are packed into little-endian uint64 words so the kernels handle
any vertex count.  Results are bit-for-bit identical to rgkit._backend.pure.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from numba import njit

NAME = "numba"

_WORD = np.uint64
_ONE = np.uint64(1)


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True)
def _eg_residual(r, start, n, counts, sbuf):
    # Erdős–Gallai on the residual degrees r[start:n]
    m = n - start
    if m <= 0:
        return True
    total = 0
    for v in range(m):
        counts[v] = 0
    for t in range(start, n):
        val = r[t]
        if val < 0 or val > m - 1:
            return False
        counts[val] += 1
        total += val
    if total & 1:
        return False
    idx = 0
    for val in range(m - 1, -1, -1):
        for _ in range(counts[val]):
            sbuf[idx] = val
            idx += 1
    lhs = 0
    for k in range(1, m + 1):
        lhs += sbuf[k - 1]
        rhs = k * (k - 1)
        for t in range(k, m):
            dv = sbuf[t]
            rhs += dv if dv < k else k
        if lhs > rhs:
            return False
    return True


@njit(cache=True)
def _enumerate_kernel(deg, limit, out):
    n = deg.shape[0]
    width = out.shape[1]
    r = deg.copy()
    counts = np.zeros(n + 1, np.int64)
    sbuf = np.zeros(n + 1, np.int64)
    if not _eg_residual(r, 0, n, counts, sbuf):
        return 0
    if n == 1:
        for w in range(width):
            out[0, w] = np.uint64(0)
        return 1
    offs = np.empty(n, np.int64)
    for i in range(n):
        offs[i] = i * n - i * (i + 1) // 2 - i - 1
    cur = np.zeros(width, np.uint64)
    npairs = n * (n - 1) // 2
    fi = np.empty(npairs + 2, np.int64)
    fj = np.empty(npairs + 2, np.int64)
    fnext = np.empty(npairs + 2, np.int8)
    fapplied = np.empty(npairs + 2, np.int8)
    one = np.uint64(1)
    count = 0
    sp = 0
    fi[0] = 0
    fj[0] = 1
    fnext[0] = 0
    fapplied[0] = -1
    while sp >= 0:
        i = fi[sp]
        j = fj[sp]
        if fapplied[sp] == 0:
            r[i] += 1
            r[j] += 1
            b = offs[i] + j
            cur[b >> 6] ^= one << np.uint64(b & 63)
        fapplied[sp] = -1
        a = fnext[sp]
        if a >= 2:
            sp -= 1
            continue
        fnext[sp] = a + 1
        boundary = j == n - 1
        free = n - 1 - j
        applied = False
        if a == 0:
            if r[i] > 0 and r[j] > 0 and r[i] - 1 <= free:
                r[i] -= 1
                r[j] -= 1
                b = offs[i] + j
                cur[b >> 6] |= one << np.uint64(b & 63)
                fapplied[sp] = 0
                applied = True
        else:
            if r[i] <= free:
                fapplied[sp] = 1
                applied = True
        if not applied:
            continue
        if boundary:
            if r[i] != 0 or not _eg_residual(r, i + 1, n, counts, sbuf):
                continue
            if i + 1 == n - 1:
                if count < limit:
                    for w in range(width):
                        out[count, w] = cur[w]
                    count += 1
                    continue
                return limit + 1
            ni = i + 1
            nj = i + 2
        else:
            ni = i
            nj = j + 1
        sp += 1
        fi[sp] = ni
        fj[sp] = nj
        fnext[sp] = 0
        fapplied[sp] = -1
    return count


@njit(cache=True)
def _adjacency_kernel(masks):
    count, width = masks.shape
    total = 0
    for a in range(count):
        for b in range(a + 1, count):
            s = 0
            for w in range(width):
                s += _popcount(masks[a, w] ^ masks[b, w])
                if s > 4:
                    break
            if s == 4:
                total += 1
    out = np.empty((total, 2), np.int64)
    k = 0
    for a in range(count):
        for b in range(a + 1, count):
            s = 0
            for w in range(width):
                s += _popcount(masks[a, w] ^ masks[b, w])
                if s > 4:
                    break
            if s == 4:
                out[k, 0] = a
                out[k, 1] = b
                k += 1
    return out


@njit(cache=True)
def _clique_kernel(adj):
    n, width = adj.shape
    best = np.zeros(n, np.int64)
    if n == 0:
        return best
    md = n + 2
    pstack = np.zeros((md, width), np.uint64)
    xstack = np.zeros((md, width), np.uint64)
    cand = np.zeros((md, width), np.uint64)
    added = np.zeros(md, np.int64)
    fresh = np.zeros(md, np.int8)
    one = np.uint64(1)
    for v in range(n):
        pstack[0, v >> 6] |= one << np.uint64(v & 63)
    depth = 0
    fresh[0] = 1
    while depth >= 0:
        if fresh[depth] == 1:
            fresh[depth] = 0
            empty = True
            for w in range(width):
                if pstack[depth, w] != 0 or xstack[depth, w] != 0:
                    empty = False
                    break
            if empty:
                # maximal clique: vertices added at depths 1..depth
                for t in range(1, depth + 1):
                    v = added[t]
                    if best[v] < depth:
                        best[v] = depth
                depth -= 1
                continue
            pivot = -1
            pivot_score = -1
            for w in range(width):
                both = pstack[depth, w] | xstack[depth, w]
                while both != 0:
                    low = both & (~both + one)
                    u = (w << 6) + _popcount(low - one)
                    score = 0
                    for w2 in range(width):
                        score += _popcount(pstack[depth, w2] & adj[u, w2])
                    if score > pivot_score:
                        pivot_score = score
                        pivot = u
                    both ^= low
            for w in range(width):
                cand[depth, w] = pstack[depth, w] & ~adj[pivot, w]
        v = -1
        for w in range(width):
            c = cand[depth, w]
            if c != 0:
                low = c & (~c + one)
                cand[depth, w] = c ^ low
                v = (w << 6) + _popcount(low - one)
                break
        if v < 0:
            depth -= 1
            continue
        for w in range(width):
            pstack[depth + 1, w] = pstack[depth, w] & adj[v, w]
            xstack[depth + 1, w] = xstack[depth, w] & adj[v, w]
        vbit = one << np.uint64(v & 63)
        pstack[depth, v >> 6] &= ~vbit
        xstack[depth, v >> 6] |= vbit
        added[depth + 1] = v
        fresh[depth + 1] = 1
        depth += 1
    return best


def _pack(values: Sequence[int], n_bits: int) -> np.ndarray:
    width = max(1, (n_bits + 63) // 64)
    arr = np.zeros((len(values), width), np.uint64)
    word = (1 << 64) - 1
    for row, m in enumerate(values):
        w = 0
        while m:
            arr[row, w] = m & word
            m >>= 64
            w += 1
    return arr


def _unpack_row(row: np.ndarray) -> int:
    out = 0
    for w in range(row.shape[0] - 1, -1, -1):
        out = (out << 64) | int(row[w])
    return out


def enumerate_realization_masks(degrees: Sequence[int], limit: int) -> tuple[list[int], bool]:
    n = len(degrees)
    width = max(1, (n * (n - 1) // 2 + 63) // 64)
    deg = np.asarray(degrees, np.int64)
    cap = min(limit, 2048)
    while True:
        out = np.zeros((cap, width), np.uint64)
        cnt = _enumerate_kernel(deg, cap, out)
        if cnt <= cap or cap >= limit:
            break
        cap = min(limit, cap * 8)
    exceeded = cnt > cap
    take = min(cnt, cap)
    return [_unpack_row(out[t]) for t in range(take)], exceeded


def two_switch_edges(masks: Sequence[int], n_bits: int) -> list[tuple[int, int]]:
    if len(masks) == 0:
        return []
    packed = _pack(masks, n_bits)
    raw = _adjacency_kernel(packed)
    return [(int(raw[k, 0]), int(raw[k, 1])) for k in range(raw.shape[0])]


def clique_numbers(adjacency: Sequence[int]) -> list[int]:
    n = len(adjacency)
    if n == 0:
        return []
    packed = _pack(adjacency, n)
    return [int(v) for v in _clique_kernel(packed)]


def warmup() -> None:
    """Force compilation of all kernels on tiny inputs."""
    enumerate_realization_masks((1, 1), 4)
    two_switch_edges([0b11, 0b1100], 4)
    clique_numbers([0b10, 0b01])
