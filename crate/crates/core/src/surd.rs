//! Exact arithmetic on sums of square roots of rationals.
//!
//! Arch values `v(A)^2 = sum (|X_i| + |Y_i|)^2` expand to a rational part plus
//! `2 * sum sqrt(|X_i|^2 |Y_i|^2)`. Comparing two arches therefore means
//! deciding the sign of `r + sum c_k sqrt(s_k)`. Radicands whose ratio is a
//! rational square are merged, after which the remaining square roots are
//! linearly independent over the rationals, so the sum is zero exactly when
//! every coefficient vanishes. Nonzero sums are resolved by interval
//! refinement.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::rational::{exact_sqrt, sqrt_bounds, to_f64, Q};

#[derive(Clone, Debug, Default)]
pub struct RootSum {
    rational: Q,
    /// `(coefficient, squarefree-class radicand)`, radicands pairwise inequivalent.
    terms: Vec<(Q, Q)>,
}

impl RootSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(r: Q) -> Self {
        Self {
            rational: r,
            terms: Vec::new(),
        }
    }

    /// `coeff * sqrt(radicand)`.
    pub fn root(coeff: Q, radicand: Q) -> Self {
        let mut s = Self::zero();
        s.push_root(coeff, radicand);
        s
    }

    fn push_root(&mut self, coeff: Q, radicand: Q) {
        assert!(!radicand.is_negative(), "negative radicand");
        if coeff.is_zero() || radicand.is_zero() {
            return;
        }
        if let Some(r) = exact_sqrt(&radicand) {
            self.rational += coeff * r;
            return;
        }
        for (c, rad) in self.terms.iter_mut() {
            // sqrt(radicand) = sqrt(radicand / rad) * sqrt(rad) when the ratio is a square
            if let Some(f) = exact_sqrt(&(&radicand / &*rad)) {
                *c += &coeff * f;
                self.terms.retain(|(c, _)| !c.is_zero());
                return;
            }
        }
        self.terms.push((coeff, radicand));
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn rational_part(&self) -> &Q {
        &self.rational
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .fold(to_f64(&self.rational), |acc, (c, r)| {
                acc + to_f64(c) * to_f64(r).sqrt()
            })
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        if self.terms.is_empty() {
            return self.rational.cmp(&Q::zero());
        }
        let mut bits = 64;
        loop {
            let (lo, hi) = self.bounds(bits);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            // nonzero by linear independence of the merged square roots
            bits *= 2;
            assert!(bits <= 1 << 16, "root sum sign did not resolve");
        }
    }

    fn bounds(&self, bits: u32) -> (Q, Q) {
        let mut lo = self.rational.clone();
        let mut hi = self.rational.clone();
        for (c, r) in &self.terms {
            let (slo, shi) = sqrt_bounds(r, bits);
            if c.is_positive() {
                lo += c * slo;
                hi += c * shi;
            } else {
                lo += c * shi;
                hi += c * slo;
            }
        }
        (lo, hi)
    }
}

impl Add for RootSum {
    type Output = RootSum;
    fn add(mut self, rhs: RootSum) -> RootSum {
        self.rational += rhs.rational;
        for (c, r) in rhs.terms {
            self.push_root(c, r);
        }
        self
    }
}

impl Neg for RootSum {
    type Output = RootSum;
    fn neg(self) -> RootSum {
        RootSum {
            rational: -self.rational,
            terms: self.terms.into_iter().map(|(c, r)| (-c, r)).collect(),
        }
    }
}

impl Sub for RootSum {
    type Output = RootSum;
    fn sub(self, rhs: RootSum) -> RootSum {
        self + (-rhs)
    }
}

impl Mul<&Q> for RootSum {
    type Output = RootSum;
    fn mul(self, k: &Q) -> RootSum {
        if k.is_zero() {
            return RootSum::zero();
        }
        RootSum {
            rational: self.rational * k,
            terms: self.terms.into_iter().map(|(c, r)| (c * k, r)).collect(),
        }
    }
}

impl PartialEq for RootSum {
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).signum() == Ordering::Equal
    }
}

impl Eq for RootSum {}

impl PartialOrd for RootSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootSum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl fmt::Display for RootSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::rational::format_q(&self.rational))?;
        for (c, r) in &self.terms {
            write!(
                f,
                " + {}*sqrt({})",
                crate::rational::format_q(c),
                crate::rational::format_q(r)
            )?;
        }
        Ok(())
    }
}
