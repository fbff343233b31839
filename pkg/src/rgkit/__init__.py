"""rgkit: degree sequences, 2-switch realization graphs, dial
configurations, clique structure, and Tyshkevich decomposition — with every
structural prediction cross-validated against brute-force oracles at desk
scale."""

from .core import (
    AlternatingFourCycle,
    DegreeSequence,
    LabeledGraph,
    alternating_four_cycles,
    complement,
    degree_sequence_of,
    graph_from_json_dict,
    graph_to_json_dict,
    two_switch,
)
from .dial import (
    Dial,
    DialEmbedding,
    dial_clique,
    find_dial_embedding,
    is_matrogenic,
    max_dial_size,
    verify_dial,
)
from .cliques import (
    CliqueMembership,
    CliqueReport,
    OverlapCounts,
    OverlapSolution,
    clique_number_of_realization,
    filter_overlap_solutions,
    in_clique,
    maximal_cliques,
    measure_overlaps,
    oracle_clique_number,
    solve_overlap_system,
)
from .errors import (
    InvalidCycleError,
    InvalidEmbeddingError,
    InvalidPartitionError,
    LimitExceededError,
    MixedSequenceError,
    NotGraphicError,
    RgkitError,
)
from .realization import (
    DEFAULT_LIMIT,
    RealizationSet,
    enumerate_realizations,
    is_graphic,
)
from .realization_graph import (
    ComplementIsomorphism,
    IndexGraph,
    RealizationGraph,
    build_realization_graph,
    cartesian_product,
    complement_isomorphism,
    connecting_two_switch,
    is_connected,
    realization_graph_of,
    to_dot,
    verify_product_theorem,
)
from .sweep import SweepConfig, SweepReport, analyze_sequence, graphic_sequences, run_sweep
from .tyshkevich import (
    CompleteGraphWitness,
    SplittedSequence,
    TyshkevichDecomposition,
    compose_graphs,
    compose_sequences,
    decompose,
    is_complete_realization_graph,
    is_threshold,
    split_realization,
)

__version__ = "0.1.0"
