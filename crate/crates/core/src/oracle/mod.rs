//! Brute-force checks independent of the engine: grid shortest paths,
//! arch enumeration, exhaustive MSIP, and sampled CAT(0) inequalities.

mod arches;
mod cat0;
mod grid;
mod msip;

pub use arches::{
    enumerate_arches, enumerate_arches_capped, enumerate_pip_arches, enumerate_pip_arches_capped,
    ArchList,
};
pub use cat0::{cat0_check, cat0_check_with, Cat0Case, Cat0Report};
pub use grid::{maximal_chains, oracle_distance, oracle_distance_capped};
pub use msip::exhaustive_msip;
