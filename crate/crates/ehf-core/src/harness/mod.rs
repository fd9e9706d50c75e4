//! Family enumeration and the verification suites built on it.

pub mod enumerate;
pub mod families;
pub mod report;

pub use enumerate::{
    all_trees, canonical_code, canonical_reps, enumerate_graphs, graph_from_mask,
    labeled_mask_count, EnumerationError, EnumerationSpec, Filter, GraphStream, Mode,
    CANONICAL_MAX, LABELED_MAX, TREE_MAX,
};
pub use families::{
    pyramid_family, scan_estimate, tree_strip_family, PyramidInstance, TreeContextInstance,
};
pub use report::{SuiteId, Tally, VerificationReport, Violation};
