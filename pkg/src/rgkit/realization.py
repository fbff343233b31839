"""Graphicality testing and exhaustive enumeration of labeled realizations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import _backend
from .core import DegreeSequence, LabeledGraph
from .errors import LimitExceededError, NotGraphicError

DEFAULT_LIMIT = 100_000


def is_graphic(d: DegreeSequence) -> bool:
    """True iff some simple graph realizes d (vertex v_i getting degree d_i).

    Uses the Erdős–Gallai condition; since d is sorted nonincreasing,
    positional realizability coincides with realizability of the multiset.
    """
    return _backend.pure.graphic_residual(d.terms)


@dataclass(frozen=True)
class RealizationSet:
    """The complete set of labeled realizations of a degree sequence.

    Realizations are deduplicated by canonical encoding and sorted by it,
    so the node order of any derived structure is reproducible.
    """

    sequence: DegreeSequence
    realizations: tuple[LabeledGraph, ...]

    def __len__(self) -> int:
        return len(self.realizations)

    def __iter__(self) -> Iterator[LabeledGraph]:
        return iter(self.realizations)

    def __getitem__(self, i: int) -> LabeledGraph:
        return self.realizations[i]


def enumerate_realizations(d: DegreeSequence, limit: int = DEFAULT_LIMIT) -> RealizationSet:
    """Every labeled graph in which vertex v_i has degree d_i, exactly.

    Equal degree values are still tied to positions: realizations differing
    only by swapping same-degree labels are distinct.

    Raises:
        NotGraphicError: if d has no realization.
        LimitExceededError: if more than `limit` realizations exist.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    if not is_graphic(d):
        raise NotGraphicError(f"{d.terms} is not graphic")
    masks, exceeded = _backend.active.enumerate_realization_masks(d.terms, limit)
    if exceeded:
        raise LimitExceededError(limit=limit, partial_count=len(masks))
    n = len(d)
    graphs = sorted(
        (LabeledGraph.from_edge_mask(n, m) for m in masks), key=lambda g: g.encoding
    )
    return RealizationSet(d, tuple(graphs))
