//! Arches, their `v` values, concavity, and the `ξ`-hull that selects the
//! optimal one.

mod hull;

pub use hull::{extreme_arch, EnumXi, PipXi, XiOracle};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::surd::RootSum;

/// A point `ξ(u) = (d(x ∧ u)², d(y ∧ u)²)` of the plane.
pub type Xi = (Q, Q);

/// An arch `p = u_0, ..., u_m = q` with the `ξ` value of every member.
///
/// Block `i` (1-based) has `‖X_i‖² = ξ_{i-1}.0 - ξ_i.0` and
/// `‖Y_i‖² = ξ_i.1 - ξ_{i-1}.1`; both must be positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arch<T> {
    members: Vec<T>,
    xi: Vec<Xi>,
}

impl<T: Clone> Arch<T> {
    pub fn new(members: Vec<T>, xi: Vec<Xi>) -> Result<Self> {
        if members.len() != xi.len() {
            return Err(Error::InvalidArch("one ξ value per member required".into()));
        }
        if members.len() < 2 {
            return Err(Error::InvalidArch(
                "an arch has at least two members".into(),
            ));
        }
        for (i, w) in xi.windows(2).enumerate() {
            let dx = &w[0].0 - &w[1].0;
            let dy = &w[1].1 - &w[0].1;
            if dx.is_negative() || dy.is_negative() {
                return Err(Error::InvalidArch(format!(
                    "traces not monotone at block {}",
                    i + 1
                )));
            }
            if dx.is_zero() || dy.is_zero() {
                return Err(Error::EmptyBlock(i + 1));
            }
        }
        Ok(Self { members, xi })
    }

    pub fn members(&self) -> &[T] {
        &self.members
    }

    pub fn xi(&self) -> &[Xi] {
        &self.xi
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of blocks, `m`.
    pub fn blocks_len(&self) -> usize {
        self.members.len() - 1
    }

    /// `(‖X_i‖², ‖Y_i‖²)` for `i = 1..=m`.
    pub fn blocks(&self) -> Vec<(Q, Q)> {
        blocks_of(&self.xi)
    }

    /// `v(A; x, y)²` in exact form.
    pub fn v2(&self) -> RootSum {
        polygon_v2(&self.xi)
    }

    pub fn v_value(&self) -> f64 {
        self.v2().to_f64().max(0.0).sqrt()
    }

    /// Strictly increasing ratios `‖X_i‖ / ‖Y_i‖`.
    pub fn is_concave(&self) -> bool {
        self.blocks()
            .windows(2)
            .all(|w| &w[0].0 * &w[1].1 < &w[1].0 * &w[0].1)
    }

    /// The members at the extreme points of `conv({0} ∪ {ξ_k})`.
    pub fn concave_subarch(&self) -> Self {
        let keep = upper_chain(&self.xi);
        Self {
            members: keep.iter().map(|&k| self.members[k].clone()).collect(),
            xi: keep.iter().map(|&k| self.xi[k].clone()).collect(),
        }
    }

    pub fn map<R: Clone>(&self, f: impl FnMut(&T) -> R) -> Arch<R> {
        Arch {
            members: self.members.iter().map(f).collect(),
            xi: self.xi.clone(),
        }
    }
}

fn blocks_of(points: &[Xi]) -> Vec<(Q, Q)> {
    points
        .windows(2)
        .map(|w| (&w[0].0 - &w[1].0, &w[1].1 - &w[0].1))
        .collect()
}

/// `(b - a) × (c - b)`; positive on a left turn.
pub fn turn(a: &Xi, b: &Xi, c: &Xi) -> Q {
    (&b.0 - &a.0) * (&c.1 - &b.1) - (&b.1 - &a.1) * (&c.0 - &b.0)
}

/// Indices of the strictly convex chain through a sequence running from the
/// `x` axis to the `y` axis with the first coordinate nonincreasing. The two
/// ends are always kept.
pub fn upper_chain(points: &[Xi]) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::with_capacity(points.len());
    for k in 0..points.len() {
        while stack.len() >= 2 {
            let (a, b) = (stack[stack.len() - 2], stack[stack.len() - 1]);
            if turn(&points[a], &points[b], &points[k]).is_positive() {
                break;
            }
            stack.pop();
        }
        stack.push(k);
    }
    stack
}

/// `Σ (sqrt(α_{i-1} - α_i) + sqrt(β_i - β_{i-1}))²` over consecutive vertices
/// `(α_i, β_i)`.
pub fn polygon_v2(vertices: &[Xi]) -> RootSum {
    let mut total = RootSum::zero();
    for (dx, dy) in blocks_of(vertices) {
        let cross = &dx * &dy;
        total =
            total + RootSum::rational(dx + dy) + RootSum::root(Q::from_integer(2.into()), cross);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    // quadrant instance: ξ(B), ξ({b1,c1}), ξ({b2,c2}), ξ(C)
    fn xb() -> Xi {
        (q(29, 25), qi(0))
    }
    fn x11() -> Xi {
        (qi(1), q(1, 4))
    }
    fn x22() -> Xi {
        (q(4, 25), qi(1))
    }
    fn xc() -> Xi {
        (qi(0), q(5, 4))
    }

    #[test]
    fn single_step_value() {
        let a = Arch::new(vec!["B", "C"], vec![xb(), xc()]).unwrap();
        assert!(a.is_concave());
        // (sqrt(1.16) + sqrt(1.25))^2
        let want = (1.16f64.sqrt() + 1.25f64.sqrt()).powi(2);
        assert!((a.v2().to_f64() - want).abs() < 1e-12);
        assert!((a.v_value() - 2.1950669501).abs() < 1e-9);
    }

    #[test]
    fn concave_middle_step() {
        let a = Arch::new(vec!["B", "{b1,c1}", "C"], vec![xb(), x11(), xc()]).unwrap();
        assert!(a.is_concave());
        assert_eq!(a.v2(), RootSum::rational(q(481, 100)));
        assert_eq!(a.concave_subarch(), a);
    }

    #[test]
    fn non_concave_middle_step() {
        let a = Arch::new(vec!["B", "{b2,c2}", "C"], vec![xb(), x22(), xc()]).unwrap();
        assert!(!a.is_concave());
        let sub = a.concave_subarch();
        assert_eq!(sub.members(), &["B", "C"]);
        // v only sees the multiset of blocks, so this arch ties the concave
        // one with the blocks swapped; dropping the middle raises it
        assert_eq!(a.v2(), RootSum::rational(q(481, 100)));
        assert!(sub.v2() > a.v2());
    }

    #[test]
    fn empty_block_rejected() {
        let err =
            Arch::new(vec!["B", "B'", "C"], vec![xb(), (q(29, 25), q(1, 4)), xc()]).unwrap_err();
        assert_eq!(err, Error::EmptyBlock(1));
        assert!(matches!(
            Arch::new(vec!["C", "B"], vec![xc(), xb()]),
            Err(Error::InvalidArch(_))
        ));
    }
}
