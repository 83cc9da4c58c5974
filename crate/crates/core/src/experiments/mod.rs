//! Config-driven sweeps over graph families, exponent fits, and presets.

mod census;
mod config;
mod fit;
mod presets;
mod run;

pub use census::{stick_census, stick_length, unmoved_census};
pub use config::{Family, Quantity, QuantityOptions, SweepConfig};
pub use fit::{fit_exponent, fit_groups, fit_rows, FitResult};
pub use presets::{preset, theorem_a_recipes, DLP_BUDGET, DLP_EPS, KESTEN_DEPTHS};
pub use run::{
    default_boundary, generate, run_sweep, run_sweep_with_jobs, write_csv, Row, CSV_HEADER,
};
