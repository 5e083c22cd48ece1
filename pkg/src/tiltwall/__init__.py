"""Exact numerics for tilt-stability on Picard rank one threefolds."""

from .charges import ComplexQ, minimal_ch1, mu, mu_hat, nu, z, z_bar, z_st
from .inequalities import (
    DiscriminantReport,
    check_bg_general,
    con14_margin,
    delta,
    discriminants,
    identity_7_4,
    strong_bg_margin,
    support_smin,
    valid_ab,
)
from .numlattice import (
    INFINITY,
    P3,
    QUADRIC,
    NumClass,
    SlopeValue,
    VarietyModel,
    degrees,
    dualize,
    grr_pushforward,
    hypersurface,
    is_lattice_point,
    line_bundle,
    tensor_line,
    twist,
)
from .polycharge import Ordering, PolyCharge, compare_limit_phase, z_inf, zb_poly, zp
from .walls import (
    PseudoWall,
    WallConic,
    Window,
    enumerate_pseudo_walls,
    on_wall,
    region_p3_intro,
    region_p3_lemma,
    region_p3_theorem,
    region_quadric,
    sample_conic,
    solve_t,
    wall_curve,
    wall_intersects_window,
    wall_window_witness,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexQ",
    "DiscriminantReport",
    "INFINITY",
    "NumClass",
    "Ordering",
    "P3",
    "PolyCharge",
    "PseudoWall",
    "QUADRIC",
    "SlopeValue",
    "VarietyModel",
    "WallConic",
    "Window",
    "check_bg_general",
    "compare_limit_phase",
    "con14_margin",
    "degrees",
    "delta",
    "discriminants",
    "dualize",
    "enumerate_pseudo_walls",
    "grr_pushforward",
    "hypersurface",
    "identity_7_4",
    "is_lattice_point",
    "line_bundle",
    "minimal_ch1",
    "mu",
    "mu_hat",
    "nu",
    "on_wall",
    "region_p3_intro",
    "region_p3_lemma",
    "region_p3_theorem",
    "region_quadric",
    "sample_conic",
    "solve_t",
    "strong_bg_margin",
    "support_smin",
    "tensor_line",
    "twist",
    "valid_ab",
    "wall_curve",
    "wall_intersects_window",
    "wall_window_witness",
    "z",
    "z_bar",
    "z_inf",
    "z_st",
    "zb_poly",
    "zp",
]
