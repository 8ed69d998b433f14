//! Geodesics: the Owen path of a concave arch, the median-PIP product,
//! distributive frames and the modular-semilattice engine built on them.

mod apartment;
mod engine;
mod frame;
mod median;
mod owen;

pub use apartment::{
    apartment, birkhoff_projection, distributive_sublattice, generated_sublattice,
    is_distributive_subset, maximal_chain_through,
};
pub use engine::{
    bpath_to_chains, geodesic, geodesic_modular_lattice, geodesic_pip, Case, Geodesic,
};
pub use frame::{distributive_frame, Frame};
pub use median::{geodesic_median, MedianGeodesic};
pub use owen::owen_path;
