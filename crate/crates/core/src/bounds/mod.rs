//! Mixing-time bounds: comparison upper bounds, eigenvector lower bounds,
//! and hitting times.

mod comparison;
mod hitting;
mod wilson;

pub use comparison::{
    build_path_system, congestion_a_star, l2_upper_time, prop_a_bound, ComparisonReport,
    PathSystem,
};
pub use hitting::{commute_time, hitting_times, tree_hitting_srw, Walk};
pub use wilson::{
    wilson_distinguisher_mc, wilson_plan, wilson_statistic, WilsonDiagnostics, WilsonPlan,
};
