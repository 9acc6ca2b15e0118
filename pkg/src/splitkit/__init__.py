"""splitkit: split-digraph recognition, splittance, and repair from degree sequences."""

from .digraphs import Digraph, EditSet, degree_sequence, edit_set, repair, verify_split_partition
from .errors import (
    BudgetExceededError,
    EmptySequenceError,
    NegativeDegreeError,
    NotDigraphicError,
    NotGraphicError,
    OutOfRangeError,
    SequenceValidationError,
    SplitkitError,
    UnbalancedSequenceError,
)
from .oracle import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    brute_min_partition_measure,
    brute_realize,
    brute_splittance,
    enumerate_digraphs,
    nontrivial_partitions,
)
from .sequences import (
    IntegerPairSequence,
    ProperOrdering,
    compare_neg,
    compare_pos,
    proper_order,
    reorder,
    validate,
)
from .splittance import (
    MaximalSequences,
    QuadPartition,
    SlackPair,
    SplittanceMatrix,
    digraph_splittance,
    fulkerson_slack,
    induced_partition,
    is_digraphic,
    is_split_sequence,
    maximal_sequences,
    partition_measure,
    split_partitions,
    splittance_matrix,
    splittance_matrix_bruteforce,
)
from .undirected import (
    IntegerSequence,
    corrected_durfee,
    eg_slack,
    is_graphic,
    is_split_undirected,
    splittance_sequence,
    undirected_splittance,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "Digraph",
    "EditSet",
    "EmptySequenceError",
    "EnumerationBudget",
    "IntegerPairSequence",
    "IntegerSequence",
    "MaximalSequences",
    "NegativeDegreeError",
    "NotDigraphicError",
    "NotGraphicError",
    "OutOfRangeError",
    "ProperOrdering",
    "QuadPartition",
    "SequenceValidationError",
    "SlackPair",
    "SplitkitError",
    "SplittanceMatrix",
    "UnbalancedSequenceError",
    "brute_min_partition_measure",
    "brute_realize",
    "brute_splittance",
    "compare_neg",
    "compare_pos",
    "corrected_durfee",
    "degree_sequence",
    "digraph_splittance",
    "eg_slack",
    "edit_set",
    "enumerate_digraphs",
    "fulkerson_slack",
    "induced_partition",
    "is_digraphic",
    "is_graphic",
    "is_split_sequence",
    "is_split_undirected",
    "maximal_sequences",
    "nontrivial_partitions",
    "partition_measure",
    "proper_order",
    "reorder",
    "repair",
    "split_partitions",
    "splittance_matrix",
    "splittance_matrix_bruteforce",
    "splittance_sequence",
    "undirected_splittance",
    "validate",
    "verify_split_partition",
]
