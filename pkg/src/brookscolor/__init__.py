"""Coloring engine for bounded-degree graphs: every finite graph with max
degree d and no (d+1)-clique (no odd cycle when d = 2) gets a proper
d-coloring, via stage-wise vertex deletion at degree 3 and degree descent
above, plus the reversal gadgets and counterexample machinery built on it.
"""

from .core import (
    BudgetError,
    Coloring,
    DeletionView,
    EXHAUSTED,
    FiniteGraph,
    HypothesisError,
    IncompleteColoringError,
    IntegrityError,
    InternalInvariantError,
    NoColoringError,
    OracleGraph,
    component_of_bounded,
    degree,
    is_proper,
    max_degree,
    n_neighborhood,
)
from .basic import (
    HypothesisReport,
    brute_chromatic,
    check_brooks_hypotheses,
    color_degree_two,
    color_degree_two_query,
    find_clique,
    find_odd_cycle,
    greedy_color,
)
from .circletree import (
    CircleTreeWitness,
    find_germs,
    find_p_vertices,
    find_q_vertices,
    quotient,
    recognize_circle_tree,
)
from .regularize import RegularEmbedding, regularize, regularize_oracle
from .tverberg import (
    DeletionTrace,
    StageDecision,
    TverbergEngine,
    run_trace,
    tverberg_color,
)
from .descent import DescentResult, brooks_color, descend_pipeline, phi
from .gadgets import (
    GadgetGraph,
    InjectionPair,
    build_h2,
    build_h2_oracle,
    build_hd,
    build_hd_oracle,
    build_ladder,
    build_ladder_oracle,
    extract_separator,
)
from .schmerl import (
    LeveledGraph,
    build_C,
    build_apexed_ladder,
    check_lemma7_conditions,
    compose_CG,
    d_subgraph,
    has_property_A,
)

__version__ = "0.1.0"
