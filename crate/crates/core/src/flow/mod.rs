//! Exact max-flow and the stable-ideal reductions built on it.

mod msip;
mod network;

pub use msip::{bipartition, msip_network, msip_value, solve_msip, MsipSolution};
pub use network::{Capacity, FlowNetwork, MaxFlow};
