//! Burning schedules for connected graphs from a decomposition of a spanning
//! tree into subtrees of distinct bounded radii.
//!
//! A connected graph of order `n` is burned within
//! `ceil((sqrt(12n + 64) + 8) / 3)` rounds: [`burn_graph`] builds the
//! schedule, [`simulate`] replays it, and the [`exact`] oracles provide
//! ground truth on small instances.

pub mod bounds;
pub mod decompose;
pub mod error;
pub mod exact;
pub mod gen;
pub mod graph;
pub mod schedule;
pub mod sim;
pub mod tree;

pub use bounds::{burning_bound, elementary_bound, land_lu_bound, reference_bounds, ReferenceBounds};
pub use decompose::{
    burn_graph, burn_tree, decompose_tree, elementary_decompose, extract_step, schedule_from, select_radius, BurnPlan,
    CaseTag, Decomposition, Extraction, RadiusSet,
};
pub use error::{DecomposeError, ExactError, GraphError, ParseError, SimulateError};
pub use exact::{exact_burning_number, tree_cover_check, CoverPiece, ExactBurn};
pub use graph::{Graph, Metrics, Vertex, UNREACHABLE};
pub use schedule::BurnSchedule;
pub use sim::{simulate, verify_schedule, BurnState, FillPolicy, SimulationResult, Substitution, VerifyReport};
pub use tree::RootedTree;
