"""Normal 3-pseudomanifolds: invariants, constructions and average edge order bounds."""
from .complex import Complex3, Face, FVector, SimplicialComplex, Surface2, from_facets
from .constructions import (
    FoldSpec,
    bistellar_0_move,
    bistellar_1_move,
    connected_sum,
    edge_contraction,
    edge_expansion,
    edge_folding,
    generate,
    one_vertex_suspension,
    suspension,
    vertex_folding,
)
from .invariants import (
    analyze,
    check_g2_lower_bound,
    g2_g3,
    km_formula,
    mu0,
    mu0_via_links,
    singularity_profile,
    stats_from_fvector,
    theorem_classify,
)
from .isomorphism import are_isomorphic, is_canonical_equality_case
from .normality import is_normal_pseudomanifold, ridge_degrees, singular_vertices
from .surfaces import SurfaceClass, classify_surface, euler_characteristic, is_closed_surface

__version__ = "0.1.0"
