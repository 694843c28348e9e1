"""Inertia of shortest-path distance matrices of weighted graphs."""
from .congruence import (
    CongruenceTrace,
    ElementaryStep,
    NormalForm,
    apply_trace,
    elementary_congruence,
    elimination_ordering,
    reduce_graph,
    reduce_tree,
    reduce_unicyclic3,
)
from .distance import DistanceMatrix, distance_matrix, scale_matrix
from .graph import (
    Kind,
    StructureClass,
    WeightedGraph,
    classify_structure,
    parse_graph,
    serialize_graph,
    subdivide_edge,
    validate,
)
from .inertia import (
    EigenResult,
    Inertia,
    arrowhead_inertia,
    check_interlacing,
    exact_inertia,
    float_eigenvalues,
    float_inertia,
    schur_determinant,
)
from .theorems import (
    CycleParity,
    InertiaPrediction,
    Parity,
    PredictionKind,
    classify_cycle_parity,
    predict_inertia,
    unweighted_lift,
)

__version__ = "0.1.0"
