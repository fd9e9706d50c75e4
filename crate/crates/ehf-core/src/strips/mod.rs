//! Strip decompositions: single strips, tree-indexed systems with a
//! cross-edge, pyramid-centred systems, and completed strips.

pub mod completed;
pub mod jstrip;
pub mod majors;
pub mod pyramid;
pub mod strip;
pub mod tree_search;

pub use completed::{
    attachment_union, check_completed_strip, check_striptobip, complete_strip, entry_vertices,
    find_backdoor, validate_backdoor, BackdoorFault, CompletedStrip, CompletedStripFault,
    CompletedStripReport, StripToBipCheck, StripToBipPrecondition,
};

pub use jstrip::{
    assess_bipartition, build_extended_tree_line_graph, is_local, nonlocal_pair, shape_of,
    validate_cross_edge, validate_jstrip, BipartitionQuality, CrossEdgeContext, CrossEdgeFailure,
    JStripFailure, JStripSystem, OutsideDomain, Shape, TreeLineGraph, TreeLineGraphError,
};
pub use majors::{
    check_funnies, check_major_clique, check_skewpyr, check_splendid_refinements,
    classify_small_subgraph, major_vertices, CliqueCheck, ComponentCheck, LocalityVerdict,
    RefinementReport, SkewPyrCheck, SkewPyrPrecondition, SmallComponentCheck, SmallSubgraphCheck,
    SmallSubgraphError, SplendidRefinements,
};
pub use pyramid::{
    attachment_unions, attachments, check_apex_clique, check_pyramid_attachment_theorem,
    classify_apex_neighbour, indecomposable_strips, is_indecomposable, search_pyramid_strip_system,
    single_vertex_additions, validate_pyramid_system, ApexNeighbourType, NotApexNeighbour,
    OverlapsSystem, PyramidAttachmentCheck, PyramidBlocker, PyramidOutcome, PyramidSearch,
    PyramidStripSystem, PyramidSystemFailure, Slot, UnclassifiedReason,
};
pub use strip::{is_rung, rungs, validate_strip, Strip, StripCheck, StripError};
pub use tree_search::{
    component_absorptions, search_tree_strip_system, single_vertex_extensions, Certification,
    MaximalityReport, Search, TreeSearchOutcome,
};
