//! Constructive coloring procedures for regular graphs: frame coloring
//! around a chosen center, bad-edge analysis with a catalog of validated
//! repair moves, and the theorem-level orchestrations that produce many
//! dominant colors.

mod frame;
mod procedures;

pub use frame::{
    repair_to_proper, repair_with_catalog, try_remove_bad_edge, try_remove_with_catalog,
    BadEdgeContext, Frame, MoveStage, RepairMove, RepairRun, FULL_CATALOG, F_LOCAL_CATALOG,
    SWAP_CATALOG,
};
pub use procedures::{
    check_thm22_conditions, complete_greedy, theorem_2_1_procedure, theorem_2_2_procedure,
    theorem_2_3_procedure, theorem_3_1_procedure, ux_coloring, Outcome, ProcedureKind,
    ProcedureReport,
};
