//! Points of orthoscheme complexes, the `φ_Δ` embedding and intra-simplex
//! distances, b-coordinates, pointwise lattice maps and polygonal paths.

mod bcoord;
mod ops;
mod path;
mod point;
mod simplex;

pub use bcoord::{from_bcoords, to_bcoords, IdealCoding, PipIdeals};
pub use ops::{join_point, meet_point, omega_point};
pub use path::{check_path, path_length, Breakpoint, PathSpace, PolyPath};
pub use point::{BPoint, ChainPoint};
pub use simplex::{
    extend_chain, norm2, norm2_above, phi, rank_distance2, simplex_distance, simplex_distance2,
    simplex_distance2_with, Extension,
};
