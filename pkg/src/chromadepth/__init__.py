"""Exact computations around colorful simplicial depth, flips, Gale duality and Minkowski sums."""

from .colorful import (ColorfulConfiguration, DepthReport, colorful_simplex, depth_bound,
                       extremal_config, hitting_simplices, is_centered, is_relative_general_position,
                       minimal_hitting_set, origin_containment, random_centered_rgp)
from .complexes import (SimplicialComplexGF2, avoiding_complex, betti_gf2, homologous,
                        hitting_cycles_generate, rain_complex, verify_euler_identity,
                        verify_extremal_collapse)
from .flips import FlipPath, flip_walk, homotopy_events, translate_flip, verify_flip
from .gale import (PointConfiguration, cayley_embedding, colorful_gale, face_test, gale_transform,
                   inverse_colorful_gale, positively_equivalent)
from .minkowski import (SimplexV, extremal_minkowski, facet_oracle, fan_from_triangle,
                        intersect_fans, mink_face_test, totally_mixed_facets)
from .ptransform import (HPolytope, LinearProjection, h_rep_from_simplex, minkowski_transform,
                         p_transform, projection_face_test, verify_coincidence)

__version__ = "0.1.0"

__all__ = [
    "ColorfulConfiguration", "DepthReport", "colorful_simplex", "depth_bound", "extremal_config",
    "hitting_simplices", "is_centered", "is_relative_general_position", "minimal_hitting_set",
    "origin_containment", "random_centered_rgp",
    "SimplicialComplexGF2", "avoiding_complex", "betti_gf2", "homologous", "hitting_cycles_generate",
    "rain_complex", "verify_euler_identity", "verify_extremal_collapse",
    "FlipPath", "flip_walk", "homotopy_events", "translate_flip", "verify_flip",
    "PointConfiguration", "cayley_embedding", "colorful_gale", "face_test", "gale_transform",
    "inverse_colorful_gale", "positively_equivalent",
    "SimplexV", "extremal_minkowski", "facet_oracle", "fan_from_triangle", "intersect_fans",
    "mink_face_test", "totally_mixed_facets",
    "HPolytope", "LinearProjection", "h_rep_from_simplex", "minkowski_transform", "p_transform",
    "projection_face_test", "verify_coincidence",
]
