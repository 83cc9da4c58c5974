//! Random and deterministic graph families.
//!
//! Every sampler takes an explicit [`crate::rng::Rng`]; outputs are relabelled
//! to dense vertex ids and pass the [`Graph`](crate::Graph) invariants.

mod classic;
mod dlp;
mod offspring;
mod random;
mod trees;

pub use classic::{classic_graph, hypercube, ClassicFamily};
pub use dlp::{conjugate_mu, dlp_giant, DlpParams, DlpSample, GammaVariance};
pub use offspring::OffspringDistribution;
pub use random::{configuration_multigraph, erdos_renyi, random_regular};
pub use trees::{
    gw_conditioned_to_survive, gw_tree, kesten_iic, prufer_decode, regular_tree,
    uniform_labelled_tree, SurvivalMode,
};
