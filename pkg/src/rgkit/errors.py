"""Exception types shared across the package."""


class RgkitError(Exception):
    """Base class for all rgkit errors."""


class NotGraphicError(RgkitError):
    """The degree sequence has no simple-graph realization."""


class LimitExceededError(RgkitError):
    """Enumeration stopped because the realization count exceeds the limit."""

    def __init__(self, limit: int, partial_count: int):
        self.limit = limit
        self.partial_count = partial_count
        super().__init__(
            f"more than {limit} realizations exist ({partial_count} enumerated)"
        )


class InvalidCycleError(RgkitError):
    """The alternating 4-cycle's edge/non-edge pattern is not present in the host graph."""


class InvalidEmbeddingError(RgkitError):
    """The dial embedding's edge/non-edge pattern is not present in the host graph."""


class MixedSequenceError(RgkitError):
    """Graphs passed together do not share a common positional degree sequence."""


class InvalidPartitionError(RgkitError):
    """The vertex partition is not an (independent set, clique) split of the graph."""
