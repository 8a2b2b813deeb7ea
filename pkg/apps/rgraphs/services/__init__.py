from .core import (
    RGraph,
    ImbalanceSequence,
    TripleClass,
    SortOrder,
    TripleKind,
    RGraphError,
    InvalidParameterError,
    InvalidOrderError,
    LoopError,
    CapacityExceededError,
    new_rgraph,
    add_arcs,
    imbalance_sequence,
    converse,
    converse_sequence,
    arc_count,
    pair_notation,
    find_doubles,
    classify_oriented_triple,
    intransitive_triples,
    is_transitive,
)
from .checks import (
    Verdict,
    Witness,
    check_feasible,
    check_feasible_nondecreasing,
    check_feasible_nonincreasing,
    check_simple_feasible,
    check_simple_feasible_nondecreasing,
    positional_bounds,
    square_inequality,
    imbalance_range,
    iter_feasible_sequences,
)
from .realization import (
    RealizationResult,
    InfeasibleSequenceError,
    InternalContradictionError,
    realize,
    min_arc_lower_bound,
)
from .transforms import (
    Move,
    MoveKind,
    Direction,
    MoveNotApplicableError,
    find_moves,
    apply_move,
    reduce,
    reduce_with_log,
)
from .imbalance_set import (
    ImbalanceSetSpec,
    Block,
    BlockLayout,
    GcdExceedsCapacityError,
    construct_from_imbalance_set,
    imbalance_set_of,
)
from .oracle import (
    EnumerationLimits,
    EnumerationTooLargeError,
    NotRealizableError,
    enumerate_rgraphs,
    enumerate_imbalance_sequences,
    min_arcs_brute,
    move_graph_connected,
    verify_equivalence,
    random_rgraph,
)
from .graph_files import (
    GraphFileError,
    parse_graph,
    serialize_graph,
    read_graph,
    write_graph,
    render_dot,
)

__all__ = [
    'RGraph',
    'ImbalanceSequence',
    'TripleClass',
    'SortOrder',
    'TripleKind',
    'RGraphError',
    'InvalidParameterError',
    'InvalidOrderError',
    'LoopError',
    'CapacityExceededError',
    'new_rgraph',
    'add_arcs',
    'imbalance_sequence',
    'converse',
    'converse_sequence',
    'arc_count',
    'pair_notation',
    'find_doubles',
    'classify_oriented_triple',
    'intransitive_triples',
    'is_transitive',
    'Verdict',
    'Witness',
    'check_feasible',
    'check_feasible_nondecreasing',
    'check_feasible_nonincreasing',
    'check_simple_feasible',
    'check_simple_feasible_nondecreasing',
    'positional_bounds',
    'square_inequality',
    'imbalance_range',
    'iter_feasible_sequences',
    'RealizationResult',
    'InfeasibleSequenceError',
    'InternalContradictionError',
    'realize',
    'min_arc_lower_bound',
    'Move',
    'MoveKind',
    'Direction',
    'MoveNotApplicableError',
    'find_moves',
    'apply_move',
    'reduce',
    'reduce_with_log',
    'ImbalanceSetSpec',
    'Block',
    'BlockLayout',
    'GcdExceedsCapacityError',
    'construct_from_imbalance_set',
    'imbalance_set_of',
    'EnumerationLimits',
    'EnumerationTooLargeError',
    'NotRealizableError',
    'enumerate_rgraphs',
    'enumerate_imbalance_sequences',
    'min_arcs_brute',
    'move_graph_connected',
    'verify_equivalence',
    'random_rgraph',
    'GraphFileError',
    'parse_graph',
    'serialize_graph',
    'read_graph',
    'write_graph',
    'render_dot',
]
