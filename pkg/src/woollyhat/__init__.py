"""Woolly Hat graphs WH_n(a, b, c, d): construction, automorphism groups,
transitivity analysis, vertex-transitivity classification and censuses."""

from .aut import (
    CanonicalForm,
    ColoredGraph,
    are_isomorphic,
    automorphism_group,
    automorphism_search,
    canonical_form,
    isomorphism,
    refine,
)
from .automorphisms import is_automorphism, rho, sigma, tau, theta, theta_params
from .census import enumerate_params, iso_class, search_edge_transitive, vt_census
from .classification import classify, vt_ground_truth
from .core import (
    EdgeKind,
    VertexId,
    WhGraph,
    WhParams,
    build_graph,
    girth,
    graph,
    is_valid,
    multiplier_image,
    quotient_by_rho_power,
    validate_params,
)
from .errors import InvalidParams, WoollyHatError
from .formats import from_graph6, to_dot, to_graph6, to_sparse6
from .perm import Permutation, PermGroup, orbits
from .symmetry import (
    Analysis,
    color_edges,
    lr_candidate_check,
    normalize_for_coloring,
    transitivity_report,
)

__version__ = "0.1.0"
