"""Signed graphs, exact circular coloring, negative girth, winding numbers."""

from .core import (
    NEG,
    POS,
    Apex,
    CycleSeq,
    Edge,
    Grid,
    Plain,
    Rung,
    Sign,
    SignedGraph,
    build_graph,
    canonical_cycle,
    exact_square,
    is_bipartite,
    switch,
    validate,
)
from .families import (
    Family,
    FamilyParams,
    bm,
    bq_even,
    bq_odd,
    cylinder,
    make_family,
    mobius_ladder,
    mycielski_cycle,
    s_construction,
)
from .girth import (
    DoubleCover,
    GirthResult,
    brute_force_negative_girth,
    double_cover,
    enumerate_simple_cycles,
    negative_girth,
    odd_girth,
)
from .circular import (
    ChiCResult,
    Coloring,
    PQ,
    bipartite_four_coloring,
    brute_force_chi_c,
    brute_force_decide,
    candidate_grid,
    chi_c,
    decide_colorable,
    sample_coloring,
    verify_coloring,
)
from .winding import (
    Arc,
    ArcWalk,
    CircleR,
    CirclePoint,
    CycleMap,
    Direction,
    GreenOrange,
    Interval,
    all_gap_intervals,
    antipode,
    circ_dist,
    coloring_to_cyclemap,
    coloring_to_images,
    cycle_map,
    extend_cD,
    extend_csh,
    green_orange,
    is_far_polar_cycle,
    is_far_polar_graph,
    layer_winding_parities,
    pick_interval,
    point,
    winding_number,
)
from .lemmas import Lemma, LemmaReport, cyclemap_to_json, lemma_suite, sample_far_polar
from .io import read_sgf, to_dot, write_sgf

__version__ = "0.1.0"
