"""partperm — exact combinatorics, volumes and Ehrhart theory of partial
permutohedra P(m,n).

P(m,n) is the convex hull of all vectors in {0..n}^m whose nonzero entries
are pairwise distinct.  The package computes its vertices, facets, faces
(indexed by subset chains), f- and h-polynomials, normalized volumes and
Ehrhart polynomials, each by several independent exact methods that are
cross-validated against brute-force lattice-point counting.  All
arithmetic is exact (integers and rationals; no floating point).
"""

from .exactmath import (
    EngineDisagreement,
    Polynomial,
    Series,
    binomial_poly,
    double_factorial,
    eulerian,
    int_det,
    interpolate,
    series_ops,
    solve_linear,
    stirling2,
)
from .combinat import (
    chain_in_family,
    descents,
    draconian_check,
    draconian_indices,
    enumerate_chains,
    enumerate_draconian,
    missing_ranks,
    r_set,
    r_set_and_order,
)
from .polytope import (
    CutResult,
    HRep,
    KERNEL_NAME,
    VRep,
    antiblocking_vertices_edges,
    bounding_box,
    contains_point,
    count_lattice_points,
    count_points,
    cut,
    hull_convert,
    pp_box,
    pp_facets,
    pp_vertices,
    verify_antiblocking_identity,
)
from .faces import (
    FaceSystem,
    VertexStats,
    comb_equiv_check,
    f_polynomial,
    f_vector,
    face_from_chain,
    face_vertices,
    h_poly,
    is_palindromic,
    vertex_stats,
)
from .volume import (
    aux1_vertices,
    aux2_vertices,
    conj_vmn_fit,
    formula_bank,
    nvol_closed,
    nvol_draconian,
    nvol_lambda,
    nvol_of_vrep,
    nvol_oracle,
    nvol_poly,
    nvol_recursive,
    nvol_small_n,
    nvol_three_term,
)
from .ehrhart import (
    aux3_points,
    aux_lemma3,
    ehr_closed_small_m,
    ehr_closed_small_n,
    ehr_conjecture,
    ehr_draconian,
    ehr_interpolate,
    ehr_parking,
    ehr_recurrence,
    hstar_tools,
)

__version__ = "0.1.0"

__all__ = [
    "EngineDisagreement", "Polynomial", "Series", "binomial_poly",
    "double_factorial", "eulerian", "int_det", "interpolate", "series_ops",
    "solve_linear", "stirling2",
    "chain_in_family", "descents", "draconian_check", "draconian_indices",
    "enumerate_chains", "enumerate_draconian", "missing_ranks", "r_set",
    "r_set_and_order",
    "CutResult", "HRep", "KERNEL_NAME", "VRep", "antiblocking_vertices_edges",
    "bounding_box", "contains_point", "count_lattice_points", "count_points",
    "cut", "hull_convert", "pp_box", "pp_facets", "pp_vertices",
    "verify_antiblocking_identity",
    "FaceSystem", "VertexStats", "comb_equiv_check", "f_polynomial",
    "f_vector", "face_from_chain", "face_vertices", "h_poly",
    "is_palindromic", "vertex_stats",
    "aux1_vertices", "aux2_vertices", "conj_vmn_fit", "formula_bank",
    "nvol_closed", "nvol_draconian", "nvol_lambda", "nvol_of_vrep",
    "nvol_oracle", "nvol_poly", "nvol_recursive", "nvol_small_n",
    "nvol_three_term",
    "aux3_points", "aux_lemma3", "ehr_closed_small_m", "ehr_closed_small_n",
    "ehr_conjecture", "ehr_draconian", "ehr_interpolate", "ehr_parking",
    "ehr_recurrence", "hstar_tools",
    "__version__",
]
