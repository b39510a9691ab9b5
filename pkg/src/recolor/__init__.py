"""Recoloring transformations between proper colorings of treewidth-2 graphs."""

from .bestchoice import (
    FutureColorList,
    best_choice_color,
    best_choice_recoloring,
    local_best_choice_extend,
)
from .chordalize import (
    MergeMap,
    PER_VERTEX_CHORDAL_BOUND,
    PER_VERTEX_PIPELINE_BOUND,
    lift_sequence,
    merge_same_colored,
    pipeline_theorem,
    two_phase_transform,
)
from .decomposition import (
    EliminationOrdering,
    TreeDecomposition,
    clique_number_chordal,
    degeneracy_order,
    is_chordal,
    is_perfect_elimination,
    mcs_order,
    out_neighbors,
    reduce_width2,
    validate_decomposition,
)
from .errors import (
    AuditViolation,
    ImproperStart,
    ImproperStep,
    InvalidColoring,
    InvalidDecomposition,
    InvalidIndex,
    InvalidInput,
    InvalidSize,
    LiftFailure,
    NoOpStep,
    NoValidColor,
    NotEnoughColors,
    NotPEO,
    NotWidth2,
    OmegaTooLarge,
    RecolorError,
    TooLarge,
)
from .experiments import (
    ExperimentConfig,
    ExperimentRecord,
    run_experiments,
    write_csv,
)
from .graphs import (
    Coloring,
    Graph,
    gen_2tree,
    gen_chordal_omega3,
    gen_partial_2tree,
    greedy_coloring,
    is_proper,
    random_proper_coloring,
    spanning_subgraph,
)
from .oracle import (
    DEFAULT_STATE_CAP,
    bfs_distance,
    decode_state,
    encode_coloring,
    reconfig_connected,
    reconfig_diameter,
)
from .sequences import (
    AuditReport,
    Block,
    PatternQuery,
    RecoloringSequence,
    Run,
    audit_best_choice,
    caused_by,
    concatenate,
    find_patterns,
    restrict,
    reverse_sequence,
    saved_steps,
    verify_sequence,
)

__version__ = "0.1.0"
