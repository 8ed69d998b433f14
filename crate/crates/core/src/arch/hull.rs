use std::fmt::Debug;

use fixedbitset::FixedBitSet;
use num_traits::Zero;

use super::{Arch, Xi};
use crate::error::{Error, Result};
use crate::flow::solve_msip;
use crate::metric::BPoint;
use crate::poset::Pip;
use crate::rational::Q;

/// Maximizes a nonnegative linear functional over the `ξ` image of a domain.
pub trait XiOracle {
    type Elem: Clone + PartialEq + Debug;

    /// An element maximizing `n.0 ξ.0 + n.1 ξ.1`, with its `ξ` value.
    fn maximize(&self, n: &(Q, Q)) -> Result<(Self::Elem, Xi)>;
}

/// Stable ideals of a bipartite PIP, searched by min cut.
pub struct PipXi<'a> {
    pub pip: &'a Pip,
    pub x: &'a BPoint,
    pub y: &'a BPoint,
}

impl XiOracle for PipXi<'_> {
    type Elem = FixedBitSet;

    fn maximize(&self, n: &(Q, Q)) -> Result<(FixedBitSet, Xi)> {
        let total = &n.0 + &n.1;
        if total.is_zero() {
            return Err(Error::InvalidInput("zero objective direction".into()));
        }
        let lambda = &n.1 / total;
        let sol = solve_msip(self.pip, self.x, self.y, &lambda)?;
        Ok((sol.ideal, (sol.x_part, sol.y_part)))
    }
}

/// An explicit candidate list, scanned in order.
///
/// Among maximizers the larger `ξ.1` wins, then the earlier candidate. Two
/// distinct candidates sharing the winning `ξ` value are logged.
pub struct EnumXi<E> {
    pub candidates: Vec<(E, Xi)>,
}

fn dot(n: &(Q, Q), p: &Xi) -> Q {
    &n.0 * &p.0 + &n.1 * &p.1
}

impl<E: Clone + PartialEq + Debug> XiOracle for EnumXi<E> {
    type Elem = E;

    fn maximize(&self, n: &(Q, Q)) -> Result<(E, Xi)> {
        let mut best: Option<(usize, Q)> = None;
        for (k, (_, xi)) in self.candidates.iter().enumerate() {
            let val = dot(n, xi);
            let better = match &best {
                None => true,
                Some((b, bv)) => val > *bv || (val == *bv && xi.1 > self.candidates[*b].1 .1),
            };
            if better {
                best = Some((k, val));
            }
        }
        let (k, _) = best.ok_or_else(|| Error::InvalidInput("empty candidate list".into()))?;
        let (elem, xi) = &self.candidates[k];
        if self
            .candidates
            .iter()
            .any(|(e, other)| other == xi && e != elem)
        {
            log::warn!("ξ tie at {:?}: keeping {:?}", xi, elem);
        }
        Ok((elem.clone(), xi.clone()))
    }
}

/// The `(x,y)`-concave arch through the nonzero extreme points of the
/// `ξ` image between `ξ(p) = (d(x)², 0)` and `ξ(q) = (0, d(y)²)`.
///
/// Chord search: for consecutive known hull points `A`, `C` the oracle
/// maximizes along the chord normal; a strictly better point is a new
/// extreme point and both halves are searched again.
pub fn extreme_arch<O: XiOracle>(
    oracle: &O,
    p: (O::Elem, Xi),
    q: (O::Elem, Xi),
) -> Result<Arch<O::Elem>> {
    let mut inner = Vec::new();
    refine(oracle, &p, &q, &mut inner)?;
    let mut members = vec![p.0];
    let mut xi = vec![p.1];
    for (e, v) in inner {
        members.push(e);
        xi.push(v);
    }
    members.push(q.0);
    xi.push(q.1);
    let arch = Arch::new(members, xi)?;
    debug_assert!(arch.is_concave());
    Ok(arch)
}

fn refine<O: XiOracle>(
    oracle: &O,
    a: &(O::Elem, Xi),
    c: &(O::Elem, Xi),
    out: &mut Vec<(O::Elem, Xi)>,
) -> Result<()> {
    let n = (&c.1 .1 - &a.1 .1, &a.1 .0 - &c.1 .0);
    let best = oracle.maximize(&n)?;
    if dot(&n, &best.1) <= dot(&n, &a.1) {
        return Ok(());
    }
    if best.1 .0 >= a.1 .0 || best.1 .1 >= c.1 .1 {
        return Err(Error::Inconsistent(format!(
            "ξ maximizer {:?} escapes the chord box",
            best.0
        )));
    }
    refine(oracle, a, &best, out)?;
    out.push(best.clone());
    refine(oracle, &best, c, out)
}
