"""Boolean representable simplicial complexes: flats, graph of flats,
fundamental group rank, shellability, homology and order complexes."""

from .boolmat import BoolMatrix, complex_from_matrix, is_independent, is_nonsingular, make_reduced
from .complex import SimplicialComplex, classify, facets, graph_diameter_check, is_matroid, link, pure_part
from .errors import BRSCError, NotBooleanRepresentable, ParseError, PreconditionError, RepresentationError
from .flats import (
    FlatLattice,
    all_flats,
    canonical_matrix,
    closure,
    eta_partition,
    is_boolean_representable,
    quotient,
    simplify,
)
from .gamma import component_report, graph_of_flats, predict_gamma_fl, superanticliques
from .homology import boundary_matrices, is_sequentially_cohen_macaulay, reduced_homology, smith_normal_form
from .homotopy import edge_path_presentation, pi1_rank, simplification_preserves_pi1
from .instances import example, random_brsc
from .ordercx import order_complex, transfer_shelling, verify_el_labeling
from .shelling import betti_from_shelling, find_shelling, is_shellable, lift_shelling, validate_shelling
