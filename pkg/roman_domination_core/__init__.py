"""
Roman Domination Engine
Exact Roman / global Roman domination, cotree rules and hardness reductions
"""

from .exceptions import (
    RomanDominationError,
    EmptyGraph,
    GraphFormatError,
    LabelingMismatch,
    NotCubic,
    NotACograph,
    ParameterError,
    InvalidCover,
    NotDominating,
    ExtractionFailed,
    DidNotFinish
)

from .config import Settings, get_settings

from .graph import (
    Graph,
    ComponentProfile,
    DegreeStats,
    complement,
    components,
    degree_stats,
    is_bipartite,
    is_split,
    special_vertices,
    find_chordless_cycle,
    is_chordal_bipartite,
    parse_edgelist,
    format_edgelist,
    load_graph,
    save_graph
)

from .labeling import (
    Mode,
    Side,
    RomanLabeling,
    CheckVerdict,
    weight,
    check_rdf,
    check_grdf,
    check,
    is_dominating_set
)

from .solver import (
    Objective,
    SetCoverInstance,
    SolveResult,
    DecisionResult,
    CoverResult,
    cost_given_two_set,
    solve_exact,
    decide,
    solve_ds,
    solve_exact_cover,
    brute_force_optimum
)

from .cograph import (
    CoTree,
    NodeKind,
    CographValues,
    build_cotree,
    expand,
    annotate,
    gamma_r_connected,
    gamma_gr_cograph,
    cograph_values
)

from .reductions import (
    ReductionOutput,
    Role,
    x3c_to_x4c,
    ds3reg_to_classF,
    classF_labeling_from_ds,
    ds_from_grdf_classF,
    x4c_to_classG,
    classG_canonical_rdf,
    classG_canonical_grdf,
    x3c_to_split,
    split_labeling_from_cover,
    cover_from_grdf_split,
    ds_to_treegadget,
    treegadget_labeling_from_ds,
    ds_from_grdf_treegadget
)

from .generators import (
    GenKind,
    GenSpec,
    gen_cubic,
    gen_cograph,
    gen_exact_cover,
    generate
)

from .lemmas import LemmaSuite, LemmaResult, Scale

__version__ = "1.0.0"

__all__ = [
    # Errors and configuration
    "RomanDominationError",
    "EmptyGraph",
    "GraphFormatError",
    "LabelingMismatch",
    "NotCubic",
    "NotACograph",
    "ParameterError",
    "InvalidCover",
    "NotDominating",
    "ExtractionFailed",
    "DidNotFinish",
    "Settings",
    "get_settings",

    # Graph core
    "Graph",
    "ComponentProfile",
    "DegreeStats",
    "complement",
    "components",
    "degree_stats",
    "is_bipartite",
    "is_split",
    "special_vertices",
    "find_chordless_cycle",
    "is_chordal_bipartite",
    "parse_edgelist",
    "format_edgelist",
    "load_graph",
    "save_graph",

    # Labelings
    "Mode",
    "Side",
    "RomanLabeling",
    "CheckVerdict",
    "weight",
    "check_rdf",
    "check_grdf",
    "check",
    "is_dominating_set",

    # Solvers
    "Objective",
    "SetCoverInstance",
    "SolveResult",
    "DecisionResult",
    "CoverResult",
    "cost_given_two_set",
    "solve_exact",
    "decide",
    "solve_ds",
    "solve_exact_cover",
    "brute_force_optimum",

    # Cographs
    "CoTree",
    "NodeKind",
    "CographValues",
    "build_cotree",
    "expand",
    "annotate",
    "gamma_r_connected",
    "gamma_gr_cograph",
    "cograph_values",

    # Reductions
    "ReductionOutput",
    "Role",
    "x3c_to_x4c",
    "ds3reg_to_classF",
    "classF_labeling_from_ds",
    "ds_from_grdf_classF",
    "x4c_to_classG",
    "classG_canonical_rdf",
    "classG_canonical_grdf",
    "x3c_to_split",
    "split_labeling_from_cover",
    "cover_from_grdf_split",
    "ds_to_treegadget",
    "treegadget_labeling_from_ds",
    "ds_from_grdf_treegadget",

    # Generators
    "GenKind",
    "GenSpec",
    "gen_cubic",
    "gen_cograph",
    "gen_exact_cover",
    "generate",

    # Lemma suite
    "LemmaSuite",
    "LemmaResult",
    "Scale"
]
