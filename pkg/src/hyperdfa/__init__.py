"""Finite-automata toolkit: DFA minimization, hyper-minimization, and
optimal (fewest-errors) hyper-minimization with exact error counts."""

from .automata import (
    AutomatonError,
    Dfa,
    DiffCount,
    INFINITE,
    KernelInfo,
    Nfa,
    canonicalize,
    complete_and_trim,
    determinize,
    diff_count,
    isomorphic,
    kernel_preamble,
    merge,
    minimize,
)
from .almost_equiv import (
    AlmostEquivPartition,
    almost_equiv_oracle,
    compute_almost_equivalence,
)
from .error_model import AccessCounts, ErrorMatrix, comp_access, merge_error_count
from .hypermin import (
    HyperOptReport,
    MergePlan,
    classify_string,
    comp_finality,
    enumerate_variants,
    hyper_optimize,
    merge_states_naive,
    opt_merge,
)
from .ioformat import ParseError, parse_automaton, serialize_automaton
from .randgen import RandomModelParams, generate_nfa
from .experiment import (
    CSV_HEADER,
    CellStats,
    ExperimentGrid,
    default_cyclicities,
    default_densities,
    run_experiment,
    run_instance,
    to_csv,
)

__all__ = [
    "AccessCounts",
    "AlmostEquivPartition",
    "AutomatonError",
    "CSV_HEADER",
    "CellStats",
    "Dfa",
    "DiffCount",
    "ErrorMatrix",
    "ExperimentGrid",
    "HyperOptReport",
    "INFINITE",
    "KernelInfo",
    "MergePlan",
    "Nfa",
    "ParseError",
    "RandomModelParams",
    "almost_equiv_oracle",
    "canonicalize",
    "classify_string",
    "comp_access",
    "comp_finality",
    "complete_and_trim",
    "default_cyclicities",
    "default_densities",
    "compute_almost_equivalence",
    "determinize",
    "diff_count",
    "enumerate_variants",
    "generate_nfa",
    "hyper_optimize",
    "isomorphic",
    "kernel_preamble",
    "merge",
    "merge_error_count",
    "merge_states_naive",
    "minimize",
    "opt_merge",
    "parse_automaton",
    "run_experiment",
    "run_instance",
    "serialize_automaton",
    "to_csv",
]
