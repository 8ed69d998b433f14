use std::cmp::Ordering;

use crate::error::Result;
use crate::flow::{bipartition, msip_value, MsipSolution};
use crate::limits::size_cap;
use crate::metric::BPoint;
use crate::poset::Pip;
use crate::rational::Q;

/// MSIP by enumerating every stable ideal. Ties go to the larger `Σy²`,
/// then to fewer members, then to the smaller sorted member list.
pub fn exhaustive_msip(pip: &Pip, x: &BPoint, y: &BPoint, lambda: &Q) -> Result<MsipSolution> {
    x.check(pip)?;
    y.check(pip)?;
    bipartition(pip, x, y)?;
    let lattice = pip.stable_ideals_capped(size_cap())?;
    let key = |s: &MsipSolution| (s.ideal.count_ones(..), s.ideal.ones().collect::<Vec<_>>());
    let better = |a: &MsipSolution, b: &MsipSolution| {
        a.objective
            .cmp(&b.objective)
            .then_with(|| a.y_part.cmp(&b.y_part))
            .then_with(|| key(b).cmp(&key(a)))
    };
    let mut best: Option<MsipSolution> = None;
    for ideal in &lattice.ideals {
        let cand = msip_value(x, y, lambda, ideal);
        if best
            .as_ref()
            .is_none_or(|b| better(&cand, b) == Ordering::Greater)
        {
            best = Some(cand);
        }
    }
    Ok(best.expect("the empty ideal is always stable"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::flow::solve_msip;
    use crate::rational::{q, qi};

    #[test]
    fn agrees_with_min_cut_on_the_quadrant() {
        let pip = fixtures::quadrant_pip();
        let x = BPoint::from_pairs(&pip, &[("b1", qi(1)), ("b2", q(2, 5))]).unwrap();
        let y = BPoint::from_pairs(&pip, &[("c1", q(1, 2)), ("c2", qi(1))]).unwrap();
        for k in 0..=10 {
            let lambda = q(k, 10);
            let e = exhaustive_msip(&pip, &x, &y, &lambda).unwrap();
            let f = solve_msip(&pip, &x, &y, &lambda).unwrap();
            assert_eq!(e, f, "λ = {lambda}");
        }
    }
}
