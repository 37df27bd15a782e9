"""Exact computational toolkit for SL(2) over rings of S-integers.

Modules: exact number fields and matrices, p-adic valuations and their
extensions, the (q+1)-regular lattice-class tree, hyperbolic half-space
displacement, bounded enumeration with properness cross-checks, the
4-dimensional trace-functional embedding, and the classification of
2-dimensional subalgebras of sl2.
"""

from .bttree import (TreeContext, TreeVertex, act, ball, base_vertex,
                     canonicalize, distance, matrix_form, neighbors,
                     tree_context, vertices_equal)
from .errors import (BudgetExceededError, CheckFailedError, CommutativeError,
                     DegenerateInputError, DetNotOneError,
                     EntryOutsideRingError, GIsInHError,
                     IndependenceFailureError, NotASubalgebraError,
                     NotAValuationError, NotMonicError, RankDeficientError,
                     ReducibleError, SingularError, Sl2KitError,
                     UnsupportedError)
from .hyperbolic import (BASEPOINT, ArchimedeanEmbedding, HPoint,
                         displacement_hyp, embed_matrix, hyp_distance,
                         mobius_act)
from .matrices import Matrix, linear_solve, mat, rank
from .numberfield import (FieldElement, NumberField, is_algebraic_integer,
                          make_field, minimal_polynomial)
from .properaction import (DisplacementProfile, EnumerationResult,
                           MarkedGroup, PropernessReport, Ring, displacement,
                           enumerate_bounded, make_group, properness_check,
                           ring_detect, word_ball, word_bfs)
from .sl2classify import (ClassificationOutcome, Factor, Subalgebra2, bracket,
                          classify_2dim, make_subalgebra, maximality_factor,
                          normalize_basis, normalizes_torus,
                          normalizes_unipotent)
from .traceembed import (Rep4, TraceBasis, alpha, integral_characteristic,
                         reconstruct, select_basis, verify_embedding)
from .valuations import INF, ExtendedValuation, PAdicValuation, extend

__version__ = "0.1.0"

__all__ = [
    "ArchimedeanEmbedding", "BASEPOINT", "BudgetExceededError",
    "CheckFailedError", "ClassificationOutcome", "CommutativeError",
    "DegenerateInputError", "DetNotOneError", "DisplacementProfile",
    "EntryOutsideRingError", "EnumerationResult", "ExtendedValuation",
    "Factor", "FieldElement", "GIsInHError", "HPoint", "INF",
    "IndependenceFailureError", "MarkedGroup", "Matrix", "NotASubalgebraError",
    "NotAValuationError", "NotMonicError", "NumberField", "PAdicValuation",
    "PropernessReport", "RankDeficientError", "ReducibleError", "Rep4",
    "Ring", "SingularError", "Sl2KitError", "Subalgebra2", "TraceBasis",
    "TreeContext", "TreeVertex", "UnsupportedError", "act", "alpha", "ball",
    "base_vertex", "bracket", "canonicalize", "classify_2dim", "displacement",
    "displacement_hyp", "distance", "embed_matrix", "enumerate_bounded",
    "extend", "hyp_distance", "integral_characteristic",
    "is_algebraic_integer", "linear_solve", "make_field", "make_group",
    "make_subalgebra", "mat", "matrix_form", "maximality_factor",
    "minimal_polynomial", "mobius_act", "neighbors", "normalize_basis",
    "normalizes_torus", "normalizes_unipotent", "properness_check", "rank",
    "reconstruct", "ring_detect", "select_basis", "tree_context",
    "verify_embedding", "vertices_equal", "word_ball", "word_bfs",
]
