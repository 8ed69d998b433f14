use super::ChainPoint;
use crate::error::{Error, Result};
use crate::poset::GradedPoset;

/// `a ∧ x`, applied coefficient-wise with equal images merged.
pub fn meet_point(poset: &GradedPoset, a: usize, x: &ChainPoint) -> Result<ChainPoint> {
    x.map_elements(|p| {
        poset.meet(a, p).ok_or_else(|| {
            Error::InvalidPoint(format!(
                "`{}` and `{}` have no meet",
                poset.name(a),
                poset.name(p)
            ))
        })
    })
}

/// `a ∨ x`; every support element must have a join with `a`.
pub fn join_point(poset: &GradedPoset, a: usize, x: &ChainPoint) -> Result<ChainPoint> {
    x.map_elements(|p| {
        poset.join(a, p).ok_or_else(|| {
            Error::JoinUndefined(poset.name(a).to_string(), poset.name(p).to_string())
        })
    })
}

/// `ω_a(x)`, the retraction onto elements having a join with `a`.
pub fn omega_point(poset: &GradedPoset, a: usize, x: &ChainPoint) -> ChainPoint {
    x.map_elements(|p| Ok(poset.omega(a, p)))
        .expect("ω is total")
}
