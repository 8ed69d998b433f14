pub mod arch;
pub mod catalog;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod geodesic;
pub mod io;
pub mod limits;
pub mod metric;
pub mod oracle;
pub mod poset;
pub mod rational;
pub mod sample;
pub mod surd;

pub use error::{Error, Result};
pub use poset::{Birkhoff, Classification, GradedPoset, IdealLattice, MetricInterval, Pip};
pub use rational::Q;
pub use surd::RootSum;
